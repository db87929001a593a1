#include "hurwitz/surfaces.hpp"

#include "hurwitz/permgroup.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <numeric>
#include <set>

namespace hurwitz {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

std::vector<int> components_of(int v, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(idx(v + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
        return x;
    };
    for (auto [a, b] : edges) parent[idx(find(a))] = find(b);
    std::vector<int> root(idx(v + 1), 0);
    for (int x = 1; x <= v; ++x) root[idx(x)] = find(x);
    return root;
}

}  // namespace

// -------------------------------------------------------------- MultiGraph

MultiGraph::MultiGraph(int v, std::vector<std::pair<int, int>> edges) : v_(v), edges_(std::move(edges)) {
    if (v < 0) throw std::invalid_argument("negative vertex count");
    around_.assign(idx(v + 1), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [a, b] = edges_[e];
        if (a < 1 || b < 1 || a > v || b > v) throw std::invalid_argument("edge endpoint outside 1..v");
        around_[idx(a)].push_back(static_cast<int>(2 * e));
        around_[idx(b)].push_back(static_cast<int>(2 * e + 1));
    }
    for (auto& hs : around_) std::sort(hs.begin(), hs.end());
}

MultiGraph MultiGraph::parse(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::string s;
    for (char c : text)
        if (c != '\n' && c != '\r' && c != ' ' && c != '\t') s += c;
    // reuse the loopless parser by tolerating a == b here
    std::size_t pos = 0;
    int v = 0;
    while (pos < s.size()) {
        auto semi = s.find(';', pos);
        std::string item = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!item.empty()) {
            auto parsed = parse_edge_list(item);
            if (parsed.size() != 1) throw std::invalid_argument("bad edge '" + item + "'");
            edges.push_back(parsed.front());
            v = std::max({v, parsed.front().first, parsed.front().second});
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (edges.empty()) throw std::invalid_argument("graph has no edges");
    return MultiGraph(v, std::move(edges));
}

bool MultiGraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](auto e) { return e.first == e.second; });
}

int MultiGraph::component_count() const {
    auto root = components_of(v_, edges_);
    std::set<int> roots(root.begin() + 1, root.end());
    return static_cast<int>(roots.size());
}

bool MultiGraph::is_connected() const { return v_ >= 1 && component_count() == 1; }

int MultiGraph::betti1() const { return edge_count() - v_ + component_count(); }

std::string MultiGraph::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (k) out += ';';
        out += std::to_string(edges_[k].first) + "-" + std::to_string(edges_[k].second);
    }
    return out;
}

// ---------------------------------------------------------- RotationSystem

RotationSystem::RotationSystem(const MultiGraph& g, std::vector<int> next) : next_(std::move(next)) {
    if (static_cast<int>(next_.size()) != g.halfedge_count())
        throw std::invalid_argument("rotation table has the wrong size");
    for (int x = 1; x <= g.vertex_count(); ++x) {
        const auto& hs = g.halfedges_at(x);
        if (hs.empty()) continue;
        std::size_t len = 0;
        int h = hs.front();
        do {
            if (h < 0 || h >= g.halfedge_count() || g.at(h) != x)
                throw std::invalid_argument("rotation leaves vertex " + std::to_string(x));
            h = next_[idx(h)];
            ++len;
        } while (h != hs.front() && len <= hs.size());
        if (len != hs.size()) throw std::invalid_argument("rotation at vertex " + std::to_string(x) + " is not one cycle");
    }
}

RotationSystem RotationSystem::from_orders(const MultiGraph& g, const std::vector<std::vector<int>>& orders) {
    std::vector<int> next(idx(g.halfedge_count()), -1);
    for (const auto& ord : orders)
        for (std::size_t k = 0; k < ord.size(); ++k) next[idx(ord[k])] = ord[(k + 1) % ord.size()];
    return RotationSystem(g, std::move(next));
}

namespace {

int count_faces(const MultiGraph& g, const std::vector<int>& next, std::vector<char>& seen) {
    const int H = g.halfedge_count();
    if (H == 0) return 1;
    std::fill(seen.begin(), seen.end(), 0);
    int f = 0;
    for (int s = 0; s < H; ++s) {
        if (seen[idx(s)]) continue;
        ++f;
        for (int h = s; !seen[idx(h)]; h = next[idx(MultiGraph::twin(h))]) seen[idx(h)] = 1;
    }
    return f;
}

}  // namespace

FaceReport faces(const MultiGraph& g, const RotationSystem& rot) {
    if (!g.is_connected()) throw std::invalid_argument("faces: graph must be connected");
    FaceReport rep;
    const int H = g.halfedge_count();
    std::vector<char> seen(idx(H), 0);
    for (int s = 0; s < H; ++s) {
        if (seen[idx(s)]) continue;
        std::vector<int> face;
        for (int h = s; !seen[idx(h)]; h = rot.next(MultiGraph::twin(h))) {
            seen[idx(h)] = 1;
            face.push_back(h);
        }
        rep.faces.push_back(std::move(face));
    }
    if (H == 0) rep.faces.emplace_back();  // the sphere around a single point
    const int F = static_cast<int>(rep.faces.size());
    rep.genus = (2 - g.vertex_count() + g.edge_count() - F) / 2;
    return rep;
}

Integer emb_count(const MultiGraph& g) {
    Integer r = 1;
    for (int x = 1; x <= g.vertex_count(); ++x)
        if (g.degree(x) > 1) r *= factorial(static_cast<unsigned>(g.degree(x) - 1));
    return r;
}

EmbeddingCensus embedding_census(const MultiGraph& g, std::uint64_t budget) {
    if (!g.is_connected()) throw std::invalid_argument("embedding census needs a connected graph");
    EmbeddingCensus c;
    c.total = emb_count(g);
    if (c.total > Integer(std::to_string(budget)))
        throw EnumerationBudgetExceeded("graph has " + c.total.get_str() + " rotation systems, budget is " +
                                        std::to_string(budget));
    const int V = g.vertex_count();
    // per vertex: anchor first, the rest permuted
    std::vector<std::vector<int>> tails(idx(V + 1));
    for (int x = 1; x <= V; ++x) {
        const auto& hs = g.halfedges_at(x);
        if (hs.size() > 1) tails[idx(x)].assign(hs.begin() + 1, hs.end());
    }
    std::vector<int> next(idx(g.halfedge_count()), 0);
    auto write_vertex = [&](int x) {
        const auto& hs = g.halfedges_at(x);
        if (hs.empty()) return;
        int prev = hs.front();
        for (int h : tails[idx(x)]) {
            next[idx(prev)] = h;
            prev = h;
        }
        next[idx(prev)] = hs.front();
    };
    for (int x = 1; x <= V; ++x) write_vertex(x);

    std::vector<char> seen(idx(g.halfedge_count()), 0);
    std::vector<std::uint64_t> by_faces(idx(g.edge_count() + 2), 0);
    std::uint64_t visited = 0;
    while (true) {
        ++by_faces[idx(count_faces(g, next, seen))];
        ++visited;
        int x = 1;
        for (; x <= V; ++x) {
            auto& t = tails[idx(x)];
            bool advanced = std::next_permutation(t.begin(), t.end());
            write_vertex(x);
            if (advanced) break;
        }
        if (x > V) break;
    }
    c.by_faces.resize(by_faces.size());
    for (std::size_t f = 0; f < by_faces.size(); ++f) c.by_faces[f] = Integer(std::to_string(by_faces[f]));
    c.one_faced = c.by_faces.size() > 1 ? c.by_faces[1] : Integer(0);
    if (Integer(std::to_string(visited)) != c.total) throw std::logic_error("rotation enumeration miscounted");
    return c;
}

Integer one_faced_count(const MultiGraph& g, std::uint64_t budget) { return embedding_census(g, budget).one_faced; }

namespace {

void check_numbering(const MultiGraph& g, const std::vector<int>& numbering) {
    if (g.has_loops()) throw std::invalid_argument("numberings are defined for loopless graphs");
    if (static_cast<int>(numbering.size()) != g.edge_count())
        throw std::invalid_argument("numbering must give one number per edge");
    std::vector<int> sorted = numbering;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k + 1)) throw std::invalid_argument("numbering is not a bijection onto 1..E");
}

}  // namespace

RotationSystem embedding_of_numbering(const MultiGraph& g, const std::vector<int>& numbering) {
    check_numbering(g, numbering);
    std::vector<std::vector<int>> orders(idx(g.vertex_count() + 1));
    for (int x = 1; x <= g.vertex_count(); ++x) {
        auto hs = g.halfedges_at(x);
        std::sort(hs.begin(), hs.end(), [&](int a, int b) {
            return numbering[idx(MultiGraph::edge_of(a))] < numbering[idx(MultiGraph::edge_of(b))];
        });
        orders[idx(x)] = std::move(hs);
    }
    return RotationSystem::from_orders(g, orders);
}

CyclesEmbReport faces_vs_cycles(const MultiGraph& g, const std::vector<int>& numbering) {
    CyclesEmbReport rep;
    if (!g.is_connected()) throw std::invalid_argument("faces_vs_cycles: graph must be connected");
    RotationSystem rot = embedding_of_numbering(g, numbering);
    const int n = g.vertex_count();

    std::vector<Transposition> ordered(idx(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        ordered[idx(numbering[idx(e)] - 1)] = Transposition(g.edges()[idx(e)].first, g.edges()[idx(e)].second);
    Permutation sigma = product_right_to_left(n, ordered);
    rep.cycle_count = static_cast<int>(sigma.cycles().size());

    FaceReport fr = faces(g, rot);
    rep.face_count = static_cast<int>(fr.faces.size());
    if (g.edge_count() == 0) rep.face_count = 1;

    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.failure = std::move(why);
        return rep;
    };

    std::vector<int> marks(idx(n + 1), 0);
    for (const auto& face : fr.faces) {
        std::vector<int> marked;
        for (int h : face) {
            const int t = MultiGraph::twin(h);
            const int x = g.at(t);
            const int before = numbering[idx(MultiGraph::edge_of(h))];
            const int after = numbering[idx(MultiGraph::edge_of(rot.next(t)))];
            if (g.degree(x) == 1 || before > after) marked.push_back(x);
        }
        if (marked.empty()) return fail("a face carries no marked vertex");
        for (int x : marked) ++marks[idx(x)];
        for (std::size_t k = 0; k < marked.size(); ++k)
            if (sigma(marked[k]) != marked[(k + 1) % marked.size()])
                return fail("marked sequence of a face is not a cycle of sigma = " + sigma.to_string());
    }
    for (int x = 1; x <= n; ++x)
        if (marks[idx(x)] != 1) return fail("vertex " + std::to_string(x) + " is marked " + std::to_string(marks[idx(x)]) + " times");
    if (rep.face_count != rep.cycle_count) return fail("face count differs from cycle count");
    rep.ok = true;
    return rep;
}

// ---------------------------------------------------------------- skeleton

Skeleton skeleton(const MultiGraph& g) {
    if (!g.is_connected() || g.betti1() < 2) throw std::invalid_argument("skeleton needs a connected graph with betti1 >= 2");
    const int V = g.vertex_count();
    std::vector<bool> alive_edge(idx(g.edge_count()), true);
    std::vector<bool> alive(idx(V + 1), true);
    std::vector<int> deg(idx(V + 1), 0);
    for (int x = 1; x <= V; ++x) deg[idx(x)] = g.degree(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 1; x <= V; ++x) {
            if (!alive[idx(x)] || deg[idx(x)] != 1) continue;
            alive[idx(x)] = false;
            for (int h : g.halfedges_at(x)) {
                const int e = MultiGraph::edge_of(h);
                if (!alive_edge[idx(e)]) continue;
                alive_edge[idx(e)] = false;
                --deg[idx(g.at(MultiGraph::twin(h)))];
            }
            deg[idx(x)] = 0;
            changed = true;
        }
    }
    Skeleton s;
    std::vector<int> renum(idx(V + 1), 0);
    for (int x = 1; x <= V; ++x)
        if (alive[idx(x)]) {
            s.original.push_back(x);
            renum[idx(x)] = static_cast<int>(s.original.size());
        }
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < g.edge_count(); ++e)
        if (alive_edge[idx(e)]) es.emplace_back(renum[idx(g.edges()[idx(e)].first)], renum[idx(g.edges()[idx(e)].second)]);
    s.graph = MultiGraph(static_cast<int>(s.original.size()), std::move(es));
    return s;
}

std::vector<int> essential_vertices(const MultiGraph& g) {
    Skeleton s = skeleton(g);
    std::vector<int> out;
    for (int x = 1; x <= s.graph.vertex_count(); ++x)
        if (s.graph.degree(x) >= 3) out.push_back(s.original[idx(x - 1)]);
    return out;
}

bool is_long(const MultiGraph& g) {
    if (g.has_loops() || !g.is_connected() || g.betti1() < 2) return false;
    auto ess = essential_vertices(g);
    std::vector<bool> is_ess(idx(g.vertex_count() + 1), false);
    for (int x : ess) is_ess[idx(x)] = true;
    for (auto [a, b] : g.edges())
        if (is_ess[idx(a)] && is_ess[idx(b)]) return false;
    return true;
}

Subdivision subdivide_to_long(const MultiGraph& g) {
    auto ess = essential_vertices(g);
    std::vector<bool> is_ess(idx(g.vertex_count() + 1), false);
    for (int x : ess) is_ess[idx(x)] = true;
    Subdivision out;
    out.original.resize(idx(g.vertex_count()));
    std::iota(out.original.begin(), out.original.end(), 1);
    int next_vertex = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges()) {
        if (a == b) {
            const int p = ++next_vertex, q = ++next_vertex;
            out.original.push_back(0);
            out.original.push_back(0);
            es.emplace_back(a, p);
            es.emplace_back(p, q);
            es.emplace_back(q, b);
        } else if (is_ess[idx(a)] && is_ess[idx(b)]) {
            const int p = ++next_vertex;
            out.original.push_back(0);
            es.emplace_back(a, p);
            es.emplace_back(p, b);
        } else {
            es.emplace_back(a, b);
        }
    }
    out.graph = MultiGraph(next_vertex, std::move(es));
    return out;
}

// ------------------------------------------------------------- decorations

std::vector<Decoration> decorations(const MultiGraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("decorations need a connected graph");
    const int b1 = g.betti1();
    if (b1 % 2) throw std::invalid_argument("decorations need an even first Betti number, got " + std::to_string(b1));
    const int two_g = b1;
    const int V = g.vertex_count();
    const Rational base = ratio(1, ipow(2, static_cast<unsigned>(two_g)));

    std::vector<Decoration> out;
    std::vector<std::vector<int>> chosen(idx(V + 1));
    std::vector<bool> deleted(idx(g.edge_count()), false);

    auto spanning_tree_left = [&] {
        std::vector<std::pair<int, int>> rest;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!deleted[idx(e)]) rest.push_back(g.edges()[idx(e)]);
        if (static_cast<int>(rest.size()) != V - 1) return false;
        for (auto [a, b] : rest)
            if (a == b) return false;
        auto root = components_of(V, rest);
        for (int x = 2; x <= V; ++x)
            if (root[idx(x)] != root[1]) return false;
        return true;
    };

    auto rec = [&](auto&& self, int x, int remaining) -> void {
        if (x > V) {
            if (remaining != 0) return;
            std::fill(deleted.begin(), deleted.end(), false);
            for (const auto& hs : chosen)
                for (int h : hs) deleted[idx(MultiGraph::edge_of(h))] = true;
            if (!spanning_tree_left()) return;
            Decoration d{chosen, base};
            for (int y = 1; y <= V; ++y)
                if (!chosen[idx(y)].empty()) d.weight /= Rational(static_cast<long>(chosen[idx(y)].size() + 1));
            out.push_back(std::move(d));
            return;
        }
        const auto& hs = g.halfedges_at(x);
        const int deg = static_cast<int>(hs.size());
        // subsets of even size <= remaining, by bitmask
        for (unsigned mask = 0; mask < (1u << deg); ++mask) {
            const int k = std::popcount(mask);
            if (k % 2 || k > remaining) continue;
            chosen[idx(x)].clear();
            for (int b = 0; b < deg; ++b)
                if (mask & (1u << b)) chosen[idx(x)].push_back(hs[idx(b)]);
            self(self, x + 1, remaining - k);
        }
        chosen[idx(x)].clear();
    };
    rec(rec, 1, two_g);
    return out;
}

Rational decoration_sum(const MultiGraph& g) {
    Rational s = 0;
    for (const auto& d : decorations(g)) s += d.weight;
    return s;
}

SpidersReport verify_spiders(const MultiGraph& g, std::uint64_t budget) {
    SpidersReport rep;
    auto decs = decorations(g);
    rep.decoration_count = decs.size();
    for (const auto& d : decs) rep.decoration_sum += d.weight;
    auto census = embedding_census(g, budget);
    rep.emb = census.total;
    rep.one_faced = census.one_faced;
    rep.check = rep.decoration_sum * Rational(rep.emb) == Rational(rep.one_faced);
    return rep;
}

Integer one_faced_numbering_count(const MultiGraph& g, std::uint64_t budget) {
    if (!g.is_connected()) throw std::invalid_argument("numbering count needs a connected graph");
    if (g.has_loops()) throw std::invalid_argument("numberings are defined for loopless graphs");
    const int E = g.edge_count();
    Integer total = factorial(static_cast<unsigned>(E));
    if (total > Integer(std::to_string(budget)))
        throw EnumerationBudgetExceeded("graph has " + total.get_str() + " numberings, budget is " + std::to_string(budget));
    std::vector<int> numbering(idx(E));
    std::iota(numbering.begin(), numbering.end(), 1);
    std::vector<char> seen(idx(g.halfedge_count()), 0);
    std::uint64_t count = 0;
    do {
        RotationSystem rot = embedding_of_numbering(g, numbering);
        if (count_faces(g, rot.table(), seen) == 1) ++count;
    } while (std::next_permutation(numbering.begin(), numbering.end()));
    return Integer(std::to_string(count));
}

GraphClass to_graph_class(const MultiGraph& g) { return canonicalize(g.vertex_count(), g.edges()); }

Monomial edge_monomial(const MultiGraph& g) {
    std::vector<Monomial::Factor> f;
    for (auto [a, b] : g.edges()) f.emplace_back(EdgeVar(a, b), 1u);
    return Monomial(std::move(f));
}

// ---------------------------------------------------------- graph catalogue

MultiGraph canonical_multigraph(const MultiGraph& g) {
    const int V = g.vertex_count();
    std::vector<int> deg(idx(V + 1), 0), loops(idx(V + 1), 0);
    for (auto [a, b] : g.edges()) {
        ++deg[idx(a)];
        ++deg[idx(b)];
        if (a == b) ++loops[idx(a)];
    }
    using Key = std::tuple<int, int, std::vector<int>>;
    std::vector<Key> key(idx(V + 1));
    for (int x = 1; x <= V; ++x) {
        std::vector<int> nd;
        for (int h : g.halfedges_at(x)) nd.push_back(deg[idx(g.at(MultiGraph::twin(h)))]);
        std::sort(nd.begin(), nd.end());
        key[idx(x)] = {-deg[idx(x)], -loops[idx(x)], std::move(nd)};
    }
    std::vector<int> order(idx(V));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return std::tie(key[idx(a)], a) < std::tie(key[idx(b)], b); });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t s = 0; s < order.size();) {
        std::size_t e = s + 1;
        while (e < order.size() && key[idx(order[e])] == key[idx(order[s])]) ++e;
        groups.emplace_back(s, e);
        s = e;
    }
    std::vector<std::pair<int, int>> best;
    bool have = false;
    std::vector<int> label(idx(V + 1), 0);
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            for (std::size_t p = 0; p < order.size(); ++p) label[idx(order[p])] = static_cast<int>(p + 1);
            std::vector<std::pair<int, int>> es;
            es.reserve(g.edges().size());
            for (auto [a, b] : g.edges()) {
                int x = label[idx(a)], y = label[idx(b)];
                es.emplace_back(std::min(x, y), std::max(x, y));
            }
            std::sort(es.begin(), es.end());
            if (!have || es < best) {
                best = std::move(es);
                have = true;
            }
            return;
        }
        auto [s, e] = groups[gi];
        do {
            self(self, gi + 1);
        } while (std::next_permutation(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(e)));
    };
    rec(rec, 0);
    return MultiGraph(V, std::move(best));
}

std::vector<MultiGraph> connected_multigraphs(int max_edges, bool allow_loops) {
    std::vector<MultiGraph> out;
    std::set<std::pair<int, std::vector<std::pair<int, int>>>> level = {{1, {}}};
    for (int e = 1; e <= max_edges; ++e) {
        std::set<std::pair<int, std::vector<std::pair<int, int>>>> next;
        for (const auto& [v, es] : level) {
            auto add = [&](int nv, int a, int b) {
                auto grown = es;
                grown.emplace_back(a, b);
                MultiGraph c = canonical_multigraph(MultiGraph(nv, std::move(grown)));
                next.emplace(c.vertex_count(), c.edges());
            };
            for (int a = 1; a <= v; ++a) {
                for (int b = a; b <= v; ++b) {
                    if (a == b && !allow_loops) continue;
                    add(v, a, b);
                }
                add(v + 1, a, v + 1);
            }
        }
        for (const auto& [v, es] : next) out.emplace_back(v, es);
        level = std::move(next);
    }
    return out;
}

}  // namespace hurwitz
