#pragma once

// Embedded graphs. A graph is a set of half-edges: edge e owns half-edges 2e and 2e+1,
// so twin(h) = h ^ 1. An embedding is a rotation system: a cyclic order of the
// half-edges around every vertex. Faces are the orbits of h -> next(twin(h)).

#include "hurwitz/rational.hpp"
#include "hurwitz/wring.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

class MultiGraph {
public:
    MultiGraph() = default;
    /// Vertices 1..v; edges (a, a) are loops. Throws on endpoints outside 1..v.
    MultiGraph(int v, std::vector<std::pair<int, int>> edges);
    /// "1-2;1-2;2-3", loops as "1-1". Vertex count is the largest label.
    static MultiGraph parse(std::string_view text);

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int halfedge_count() const { return 2 * edge_count(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    static int twin(int h) { return h ^ 1; }
    static int edge_of(int h) { return h / 2; }
    int at(int h) const { return (h & 1) ? edges_[static_cast<std::size_t>(h / 2)].second
                                         : edges_[static_cast<std::size_t>(h / 2)].first; }
    /// Half-edges at vertex x in increasing id order. A loop contributes two.
    const std::vector<int>& halfedges_at(int x) const { return around_[static_cast<std::size_t>(x)]; }
    int degree(int x) const { return static_cast<int>(halfedges_at(x).size()); }

    bool has_loops() const;
    bool is_connected() const;
    int component_count() const;
    /// E - V + (#components)
    int betti1() const;

    std::string to_string() const;

private:
    int v_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> around_;  // index 0 unused
};

class RotationSystem {
public:
    RotationSystem() = default;
    /// next[h] is the successor of h around its vertex.
    /// Throws std::invalid_argument unless next is a single cycle on each vertex's half-edges.
    RotationSystem(const MultiGraph& g, std::vector<int> next);
    /// The rotation given by listing each vertex's half-edges in cyclic order (index 0 unused).
    static RotationSystem from_orders(const MultiGraph& g, const std::vector<std::vector<int>>& orders);

    int next(int h) const { return next_[static_cast<std::size_t>(h)]; }
    const std::vector<int>& table() const { return next_; }

private:
    std::vector<int> next_;
};

struct FaceReport {
    std::vector<std::vector<int>> faces;  // half-edge orbits of h -> next(twin(h))
    int genus = 0;
};

/// Requires a connected graph. A graph without edges has one face.
FaceReport faces(const MultiGraph& g, const RotationSystem& rot);

struct EnumerationBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// prod over vertices of (deg - 1)!
Integer emb_count(const MultiGraph& g);

struct EmbeddingCensus {
    Integer total;
    Integer one_faced;
    std::vector<Integer> by_faces;  // by_faces[f] = number of rotation systems with f faces
};

/// Enumerates every rotation system (anchor half-edge fixed per vertex).
EmbeddingCensus embedding_census(const MultiGraph& g, std::uint64_t budget = 50'000'000);
Integer one_faced_count(const MultiGraph& g, std::uint64_t budget = 50'000'000);

/// numbering[e] in 1..E is the number of edge e. At each vertex the half-edges follow
/// increasing edge numbers. Throws on loops or an invalid numbering.
RotationSystem embedding_of_numbering(const MultiGraph& g, const std::vector<int>& numbering);

struct CyclesEmbReport {
    bool ok = false;
    int face_count = 0;
    int cycle_count = 0;
    std::string failure;  // empty when ok
};

/// Checks that the cycles of t_E ... t_1 (edges taken in numbering order) are exactly the
/// marked-vertex sequences of the faces of the numbering's embedding. A corner is marked
/// when the preceding edge number exceeds the following one, or the vertex has valency one.
CyclesEmbReport faces_vs_cycles(const MultiGraph& g, const std::vector<int>& numbering);

/// Repeatedly removes valency-1 vertices. kept[x] says whether vertex x survives.
struct Skeleton {
    MultiGraph graph;            // surviving vertices renumbered 1..k
    std::vector<int> original;   // original[new - 1] = old vertex id
};
/// Throws std::invalid_argument unless g is connected with betti1 >= 2.
Skeleton skeleton(const MultiGraph& g);
/// Vertices of g with valency >= 3 in the skeleton, ascending.
std::vector<int> essential_vertices(const MultiGraph& g);
/// Loopless, connected, betti1 >= 2, and no edge joins two essential vertices.
bool is_long(const MultiGraph& g);

struct Subdivision {
    MultiGraph graph;
    std::vector<int> original;  // original[new - 1] = old vertex id, 0 for inserted vertices
};
/// Inserts one vertex into each edge joining two essential vertices and two into each loop.
/// Already-long graphs are returned unchanged.
Subdivision subdivide_to_long(const MultiGraph& g);

struct Decoration {
    std::vector<std::vector<int>> chosen;  // chosen[x] = chosen half-edges at vertex x (index 0 unused)
    Rational weight;
};

/// All decorations: even-sized half-edge choices per vertex, 2g in total, whose edges'
/// removal leaves a spanning tree. Weight 2^{-2g} prod 1/(k_v + 1).
/// Throws std::invalid_argument for disconnected graphs or odd betti1.
std::vector<Decoration> decorations(const MultiGraph& g);
Rational decoration_sum(const MultiGraph& g);

struct SpidersReport {
    Integer emb;
    Integer one_faced;
    Rational decoration_sum;
    std::size_t decoration_count = 0;
    bool check = false;  // decoration_sum * emb == one_faced
};

SpidersReport verify_spiders(const MultiGraph& g, std::uint64_t budget = 50'000'000);

/// Number of edge numberings whose embedding has one face (all E! of them are visited).
Integer one_faced_numbering_count(const MultiGraph& g, std::uint64_t budget = 50'000'000);

/// Loopless graph as a class in the graph algebra (vertices kept, loops rejected).
GraphClass to_graph_class(const MultiGraph& g);
/// The monomial prod w_{ab} over the edges of a loopless graph.
Monomial edge_monomial(const MultiGraph& g);

/// Canonical form of a multigraph with loops allowed, as a sorted edge list with a <= b.
MultiGraph canonical_multigraph(const MultiGraph& g);

/// Connected multigraphs with 1..max_edges edges, one per isomorphism class, in
/// order of edge count. Loops optional.
std::vector<MultiGraph> connected_multigraphs(int max_edges, bool allow_loops);

}  // namespace hurwitz
