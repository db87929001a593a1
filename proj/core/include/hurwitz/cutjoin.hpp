#pragma once

// Truncated Hurwitz w-generating function
//   H = sum_{g, lambda} P_{g,lambda}(w) / (m! n!) p_{lambda_1} ... p_{lambda_s}
// and the cut-and-join operator L acting on the p-variables. The variant with an extra
// 1/|Aut lambda| on each term is available but does not satisfy sum dH/dw_ij = L H.

#include "hurwitz/oracle.hpp"
#include "hurwitz/permgroup.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/wring.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// A term p_{k_1} ... p_{k_s} * w-monomial, with k sorted nondecreasing.
struct PTerm {
    std::vector<int> p;
    Monomial w;

    int p_weight() const;  // sum of k_i
    auto operator<=>(const PTerm&) const = default;
};

class PSeries {
public:
    using Block = std::map<PTerm, Rational>;
    using BlockKey = std::pair<int, int>;  // (p-weight n, w-degree m)

    PSeries(int n_max, int m_max) : n_max_(n_max), m_max_(m_max) {}

    int n_max() const { return n_max_; }
    int m_max() const { return m_max_; }

    /// Throws std::out_of_range if the term lies outside the truncation bounds.
    void add_term(PTerm t, const Rational& c);
    Rational coefficient(const PTerm& t) const;
    const std::map<BlockKey, Block>& blocks() const { return blocks_; }
    const Block& block(int n, int m) const;
    std::size_t term_count() const;

    bool operator==(const PSeries& o) const { return blocks_ == o.blocks_; }

private:
    int n_max_;
    int m_max_;
    std::map<BlockKey, Block> blocks_;
};

enum class PNormalization {
    plain,  // P / (m! n!)
    aut,    // P / (m! n! |Aut lambda|)
};

/// Sums P_{g,lambda} over all lambda with |lambda| <= n_max and tuple lengths m <= m_max,
/// including the m = 0 identity terms.
PSeries build_H(int n_max, int m_max, const OracleOptions& opts = {}, PNormalization norm = PNormalization::plain);

/// L = 1/2 sum_{k,l>=1} ((k+l) p_k p_l d/dp_{k+l} + k l p_{k+l} d^2/dp_k dp_l).
PSeries apply_L(const PSeries& s);

/// sum_{i<j} dS/dw_ij
PSeries w_derivative_sum(const PSeries& s);

/// Undoes the normalization of build_H for the coefficient of p_lambda in block (n, m).
WPolynomial extract_hurwitz_poly(const PSeries& h, const CycleType& lambda, int m,
                                 PNormalization norm = PNormalization::plain);

struct CutJoinMismatch {
    int n = 0;
    int m = 0;
    PTerm term;
    Rational lhs;
    Rational rhs;
};

struct CutJoinReport {
    bool equal = false;
    std::size_t blocks_checked = 0;
    std::size_t terms_compared = 0;
    std::optional<CutJoinMismatch> first_difference;
};

/// Compares sum_{i<j} dH/dw_ij with L H block by block for every p-weight n <= n_max and
/// w-degree m < m_max.
CutJoinReport verify_cutjoin(int n_max, int m_max, const OracleOptions& opts = {},
                             PNormalization norm = PNormalization::plain);
CutJoinReport compare_cutjoin(const PSeries& h);

std::string to_string(const PTerm& t);

}  // namespace hurwitz
