#pragma once

// The ring C_n[w] of polynomials in edge variables w_ij = w_ji, and the
// unlabeled-graph classes that span its S_n-invariant part.

#include "hurwitz/permgroup.hpp"
#include "hurwitz/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

struct EdgeVar {
    int i = 1;
    int j = 2;

    EdgeVar() = default;
    /// Stored with i < j. Throws std::invalid_argument for i == j: there is no w_ii.
    EdgeVar(int a, int b);

    auto operator<=>(const EdgeVar&) const = default;
};

class Monomial {
public:
    using Factor = std::pair<EdgeVar, unsigned>;

    Monomial() = default;
    /// Merges repeated variables and drops zero exponents.
    explicit Monomial(std::vector<Factor> factors);
    static Monomial of(EdgeVar e, unsigned exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned degree() const;
    unsigned exponent(EdgeVar e) const;
    int max_vertex() const;
    bool touches(int vertex) const;

    Monomial operator*(const Monomial& other) const;
    /// Divides by one power of e; requires exponent(e) >= 1.
    Monomial without_one(EdgeVar e) const;

    std::string to_string() const;  // "w1_2^3*w1_3", "1" for the unit

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

class WPolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    WPolynomial() = default;
    explicit WPolynomial(int n) : n_(n) {}
    static WPolynomial constant(int n, const Rational& c);
    static WPolynomial variable(int n, EdgeVar e);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c * m; throws std::invalid_argument if m uses a vertex above n.
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(unsigned degree) const;
    WPolynomial homogeneous_part(unsigned degree) const;

    Rational evaluate(const std::function<Rational(EdgeVar)>& value) const;
    Rational evaluate_at(const Rational& all) const;
    /// w_ij -> w_{p(i) p(j)}; p must act on {1..n}.
    WPolynomial relabel(const Permutation& p) const;
    /// Same polynomial regarded in C_m[w], m >= max vertex used.
    WPolynomial with_n(int m) const;

    WPolynomial& operator+=(const WPolynomial& o);
    WPolynomial& operator-=(const WPolynomial& o);
    WPolynomial& operator*=(const Rational& c);
    friend WPolynomial operator+(WPolynomial a, const WPolynomial& b) { return a += b; }
    friend WPolynomial operator-(WPolynomial a, const WPolynomial& b) { return a -= b; }
    friend WPolynomial operator*(WPolynomial a, const Rational& c) { return a *= c; }
    friend WPolynomial operator*(const Rational& c, WPolynomial a) { return a *= c; }
    friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b);
    WPolynomial operator-() const;
    WPolynomial pow(unsigned k) const;

    /// Equality of values; the ambient n is not compared.
    bool operator==(const WPolynomial& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    int n_ = 0;
    Terms terms_;
};

/// Canonical unlabeled loopless multigraph. Vertices are 1..v, edges (a, b) with a < b,
/// sorted; the edge list is the lexicographic minimum over all vertex relabelings.
class GraphClass {
public:
    GraphClass() = default;

    int vertex_count() const { return v_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Parallel-edge bundles with their multiplicities.
    std::vector<std::pair<std::pair<int, int>, unsigned>> bundles() const;
    bool is_connected() const;
    /// Connected components with at least one edge, plus isolated vertices as single-vertex classes.
    std::vector<GraphClass> components() const;
    /// True iff this is one k-spider X_k (a star with k >= 1 edges, all simple).
    bool is_spider() const;

    /// "1-2;1-2;2-3"; the empty graph prints as "".
    std::string to_string() const;

    auto operator<=>(const GraphClass&) const = default;

private:
    friend GraphClass canonicalize(int, const std::vector<std::pair<int, int>>&);
    int v_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

/// Canonical representative of the labeled graph on vertices 1..v.
/// Throws std::invalid_argument on loops or out-of-range endpoints.
GraphClass canonicalize(int v, const std::vector<std::pair<int, int>>& edges);

/// Parses "1-2;1-2;2-3". The vertex count is the largest label unless min_vertices is larger.
std::vector<std::pair<int, int>> parse_edge_list(std::string_view text);
GraphClass parse_graph_class(std::string_view text, int min_vertices = 0);

/// Number of vertex permutations preserving the edge multiset.
std::uint64_t vertex_aut_count(const GraphClass& g);
/// |Aut G| over half-edges: vertex automorphisms times prod of (edge multiplicity)!.
std::uint64_t aut_count(const GraphClass& g);

/// G_n(w): sum over injective labelings into {1..n}, divided by |Aut G|. Zero when v > n.
WPolynomial expand(const GraphClass& g, int n);

using GraphSeries = std::map<GraphClass, Rational>;

struct NonInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The support graph of a monomial, relabeled onto its touched vertices.
GraphClass support_class(const Monomial& m);

/// Writes an S_n-invariant polynomial as a combination of graph classes.
/// Throws NonInvariantError if re-expansion does not reproduce p.
GraphSeries collect(const WPolynomial& p);

/// Sum of coeff * G_n(w) over the series.
WPolynomial expand(const GraphSeries& s, int n);

/// pi_n: set w_{1n} = ... = w_{n-1,n} = 0. Requires n >= 2.
WPolynomial project(const WPolynomial& p);

void add_to(GraphSeries& s, const GraphClass& g, const Rational& c);
Rational coefficient(const GraphSeries& s, const GraphClass& g);

}  // namespace hurwitz
