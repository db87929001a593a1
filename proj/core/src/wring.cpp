#include "hurwitz/wring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hurwitz {

EdgeVar::EdgeVar(int a, int b) {
    if (a == b) throw std::invalid_argument("edge variable w_ii does not exist");
    if (a < 1 || b < 1) throw std::invalid_argument("edge variable indices are one-based");
    i = std::min(a, b);
    j = std::max(a, b);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [e, k] : factors) {
        if (k == 0) continue;
        if (!factors_.empty() && factors_.back().first == e) factors_.back().second += k;
        else factors_.emplace_back(e, k);
    }
}

Monomial Monomial::of(EdgeVar e, unsigned exponent) { return Monomial({{e, exponent}}); }

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

unsigned Monomial::exponent(EdgeVar e) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{e, 0u},
                               [](const Factor& a, const Factor& b) { return a.first < b.first; });
    return (it != factors_.end() && it->first == e) ? it->second : 0u;
}

int Monomial::max_vertex() const {
    int m = 0;
    for (const auto& f : factors_) m = std::max(m, f.first.j);
    return m;
}

bool Monomial::touches(int vertex) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.first.i == vertex || f.first.j == vertex; });
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::without_one(EdgeVar e) const {
    Monomial r = *this;
    for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
        if (it->first == e) {
            if (--it->second == 0) r.factors_.erase(it);
            return r;
        }
    }
    throw std::invalid_argument("without_one: variable not present");
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, k] : factors_) {
        if (!first) os << '*';
        first = false;
        os << 'w' << e.i << '_' << e.j;
        if (k != 1) os << '^' << k;
    }
    return os.str();
}

// ------------------------------------------------------------- WPolynomial

WPolynomial WPolynomial::constant(int n, const Rational& c) {
    WPolynomial p(n);
    p.add_term(Monomial(), c);
    return p;
}

WPolynomial WPolynomial::variable(int n, EdgeVar e) {
    WPolynomial p(n);
    p.add_term(Monomial::of(e), 1);
    return p;
}

void WPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.max_vertex() > n_)
        throw std::invalid_argument("monomial " + m.to_string() + " exceeds ambient n=" + std::to_string(n_));
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational WPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int WPolynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.degree()));
    return d;
}

bool WPolynomial::is_homogeneous(unsigned degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree() == degree; });
}

WPolynomial WPolynomial::homogeneous_part(unsigned degree) const {
    WPolynomial r(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) r.terms_.emplace(m, c);
    return r;
}

Rational WPolynomial::evaluate(const std::function<Rational(EdgeVar)>& value) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [e, k] : m.factors()) {
            Rational x = value(e);
            for (unsigned r = 0; r < k; ++r) t *= x;
        }
        total += t;
    }
    return total;
}

Rational WPolynomial::evaluate_at(const Rational& all) const {
    return evaluate([&](EdgeVar) { return all; });
}

WPolynomial WPolynomial::relabel(const Permutation& p) const {
    if (p.size() < n_) throw std::invalid_argument("relabel: permutation smaller than ambient n");
    WPolynomial r(n_);
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> f;
        f.reserve(m.factors().size());
        for (const auto& [e, k] : m.factors()) f.emplace_back(EdgeVar(p(e.i), p(e.j)), k);
        r.add_term(Monomial(std::move(f)), c);
    }
    return r;
}

WPolynomial WPolynomial::with_n(int m) const {
    WPolynomial r(m);
    for (const auto& [mono, c] : terms_) r.add_term(mono, c);
    return r;
}

WPolynomial& WPolynomial::operator+=(const WPolynomial& o) {
    n_ = std::max(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WPolynomial& WPolynomial::operator-=(const WPolynomial& o) {
    n_ = std::max(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WPolynomial& WPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
    WPolynomial r(std::max(a.n_, b.n_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

WPolynomial WPolynomial::operator-() const {
    WPolynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

WPolynomial WPolynomial::pow(unsigned k) const {
    WPolynomial r = constant(n_, 1);
    for (unsigned e = 0; e < k; ++e) r = r * *this;
    return r;
}

std::string WPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << m.to_string();
        }
    }
    return os.str();
}

// -------------------------------------------------------------- GraphClass

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList relabeled(const EdgeList& edges, const std::vector<int>& label) {
    EdgeList out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) {
        int x = label[static_cast<std::size_t>(a)];
        int y = label[static_cast<std::size_t>(b)];
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Calls f(label) for every relabeling (label[old] = new, 1-based, label[0] unused) that
// sends vertices to positions ordered by an isomorphism-invariant key. Automorphisms and
// the lexicographically minimal form are both reached within this family.
template <typename F>
void for_each_invariant_relabeling(int v, const EdgeList& edges, F&& f) {
    const auto vs = static_cast<std::size_t>(v);
    std::vector<int> degree(vs + 1, 0);
    std::vector<std::vector<int>> nbrs(vs + 1);
    for (auto [a, b] : edges) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
        nbrs[static_cast<std::size_t>(a)].push_back(b);
        nbrs[static_cast<std::size_t>(b)].push_back(a);
    }
    using Key = std::pair<int, std::vector<int>>;
    std::vector<Key> key(vs + 1);
    for (std::size_t x = 1; x <= vs; ++x) {
        std::vector<int> nd;
        for (int y : nbrs[x]) nd.push_back(degree[static_cast<std::size_t>(y)]);
        std::sort(nd.begin(), nd.end());
        // negative degree so that high-degree vertices get small labels
        key[x] = {-degree[x], std::move(nd)};
    }
    std::vector<int> order(vs);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });

    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) in order
    for (std::size_t s = 0; s < vs;) {
        std::size_t e = s + 1;
        while (e < vs && key[static_cast<std::size_t>(order[e])] == key[static_cast<std::size_t>(order[s])]) ++e;
        groups.emplace_back(s, e);
        s = e;
    }
    for (auto [s, e] : groups) std::sort(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(e));

    std::vector<int> label(vs + 1, 0);
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            for (std::size_t pos = 0; pos < vs; ++pos) label[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos + 1);
            f(label);
            return;
        }
        auto [s, e] = groups[gi];
        auto first = order.begin() + static_cast<long>(s);
        auto last = order.begin() + static_cast<long>(e);
        do {
            self(self, gi + 1);
        } while (std::next_permutation(first, last));
    };
    rec(rec, 0);
}

}  // namespace

GraphClass canonicalize(int v, const EdgeList& edges) {
    if (v < 0) throw std::invalid_argument("negative vertex count");
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("graph classes are loopless");
        if (a < 1 || b < 1 || a > v || b > v) throw std::invalid_argument("edge endpoint outside 1..v");
    }
    EdgeList best;
    bool have = false;
    for_each_invariant_relabeling(v, edges, [&](const std::vector<int>& label) {
        EdgeList cand = relabeled(edges, label);
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    });
    GraphClass g;
    g.v_ = v;
    g.edges_ = have ? std::move(best) : EdgeList{};
    return g;
}

std::vector<std::pair<std::pair<int, int>, unsigned>> GraphClass::bundles() const {
    std::vector<std::pair<std::pair<int, int>, unsigned>> out;
    for (const auto& e : edges_) {
        if (!out.empty() && out.back().first == e) ++out.back().second;
        else out.emplace_back(e, 1u);
    }
    return out;
}

namespace {

std::vector<int> component_labels(int v, const EdgeList& edges) {
    std::vector<int> parent(static_cast<std::size_t>(v + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : edges) parent[static_cast<std::size_t>(find(a))] = find(b);
    std::vector<int> root(static_cast<std::size_t>(v + 1), 0);
    for (int x = 1; x <= v; ++x) root[static_cast<std::size_t>(x)] = find(x);
    return root;
}

}  // namespace

bool GraphClass::is_connected() const {
    if (v_ <= 1) return true;
    auto root = component_labels(v_, edges_);
    for (int x = 2; x <= v_; ++x)
        if (root[static_cast<std::size_t>(x)] != root[1]) return false;
    return true;
}

std::vector<GraphClass> GraphClass::components() const {
    auto root = component_labels(v_, edges_);
    std::map<int, std::vector<int>> members;
    for (int x = 1; x <= v_; ++x) members[root[static_cast<std::size_t>(x)]].push_back(x);
    std::vector<GraphClass> out;
    for (const auto& [r, verts] : members) {
        std::vector<int> local(static_cast<std::size_t>(v_ + 1), 0);
        for (std::size_t k = 0; k < verts.size(); ++k) local[static_cast<std::size_t>(verts[k])] = static_cast<int>(k + 1);
        EdgeList es;
        for (auto [a, b] : edges_)
            if (root[static_cast<std::size_t>(a)] == r) es.emplace_back(local[static_cast<std::size_t>(a)], local[static_cast<std::size_t>(b)]);
        out.push_back(canonicalize(static_cast<int>(verts.size()), es));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool GraphClass::is_spider() const {
    if (edges_.empty() || !is_connected()) return false;
    if (static_cast<std::size_t>(v_) != edges_.size() + 1) return false;  // a tree
    std::vector<int> degree(static_cast<std::size_t>(v_ + 1), 0);
    for (auto [a, b] : edges_) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    int centers = 0;
    for (int x = 1; x <= v_; ++x)
        if (degree[static_cast<std::size_t>(x)] >= 2) ++centers;
    return centers <= 1;
}

std::string GraphClass::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (k) out += ';';
        out += std::to_string(edges_[k].first) + "-" + std::to_string(edges_[k].second);
    }
    return out;
}

EdgeList parse_edge_list(std::string_view text) {
    EdgeList out;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto semi = s.find(';', pos);
        std::string item = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!item.empty()) {
            auto dash = item.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("edge '" + item + "' is not of the form a-b");
            try {
                std::size_t ua = 0, ub = 0;
                std::string sa = item.substr(0, dash), sb = item.substr(dash + 1);
                int a = std::stoi(sa, &ua);
                int b = std::stoi(sb, &ub);
                if (ua != sa.size() || ub != sb.size()) throw std::invalid_argument("trailing characters");
                if (a < 1 || b < 1) throw std::invalid_argument("non-positive vertex");
                out.emplace_back(a, b);
            } catch (const std::exception&) {
                throw std::invalid_argument("edge '" + item + "' is not of the form a-b");
            }
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

GraphClass parse_graph_class(std::string_view text, int min_vertices) {
    auto edges = parse_edge_list(text);
    int v = min_vertices;
    for (auto [a, b] : edges) v = std::max({v, a, b});
    return canonicalize(v, edges);
}

std::uint64_t vertex_aut_count(const GraphClass& g) {
    std::uint64_t count = 0;
    for_each_invariant_relabeling(g.vertex_count(), g.edges(), [&](const std::vector<int>& label) {
        if (relabeled(g.edges(), label) == g.edges()) ++count;
    });
    return count;
}

std::uint64_t aut_count(const GraphClass& g) {
    std::uint64_t r = vertex_aut_count(g);
    for (const auto& [e, m] : g.bundles())
        for (unsigned f = 2; f <= m; ++f) r *= f;
    return r;
}

WPolynomial expand(const GraphClass& g, int n) {
    WPolynomial out(n);
    const int v = g.vertex_count();
    if (v > n) return out;
    std::map<Monomial, std::uint64_t> counts;
    std::vector<int> label(static_cast<std::size_t>(v + 1), 0);
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    auto rec = [&](auto&& self, int x) -> void {
        if (x > v) {
            std::vector<Monomial::Factor> f;
            f.reserve(g.edge_count());
            for (auto [a, b] : g.edges()) f.emplace_back(EdgeVar(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]), 1u);
            ++counts[Monomial(std::move(f))];
            return;
        }
        for (int y = 1; y <= n; ++y) {
            if (used[static_cast<std::size_t>(y)]) continue;
            used[static_cast<std::size_t>(y)] = true;
            label[static_cast<std::size_t>(x)] = y;
            self(self, x + 1);
            used[static_cast<std::size_t>(y)] = false;
        }
    };
    rec(rec, 1);
    const Rational inv_aut(1, aut_count(g));
    for (const auto& [m, c] : counts) out.add_term(m, Rational(c) * inv_aut);
    return out;
}

GraphClass support_class(const Monomial& m) {
    std::vector<int> verts;
    for (const auto& [e, k] : m.factors()) {
        verts.push_back(e.i);
        verts.push_back(e.j);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](int x) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()) + 1; };
    EdgeList es;
    for (const auto& [e, k] : m.factors())
        for (unsigned r = 0; r < k; ++r) es.emplace_back(local(e.i), local(e.j));
    return canonicalize(static_cast<int>(verts.size()), es);
}

GraphSeries collect(const WPolynomial& p) {
    GraphSeries s;
    for (const auto& [m, c] : p.terms()) {
        GraphClass g = support_class(m);
        if (s.count(g)) continue;
        Rational coeff = c;
        for (const auto& f : m.factors())
            for (unsigned r = 2; r <= f.second; ++r) coeff *= r;
        s.emplace(std::move(g), coeff);
    }
    WPolynomial residual = p - expand(s, p.n());
    if (!residual.is_zero())
        throw NonInvariantError("collect: polynomial is not S_n-invariant (residual " + residual.to_string() + ")");
    return s;
}

WPolynomial expand(const GraphSeries& s, int n) {
    WPolynomial out(n);
    for (const auto& [g, c] : s) out += expand(g, n) * c;
    return out;
}

WPolynomial project(const WPolynomial& p) {
    if (p.n() < 2) throw std::invalid_argument("project: needs n >= 2");
    WPolynomial out(p.n() - 1);
    for (const auto& [m, c] : p.terms())
        if (!m.touches(p.n())) out.add_term(m, c);
    return out;
}

void add_to(GraphSeries& s, const GraphClass& g, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = s.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

Rational coefficient(const GraphSeries& s, const GraphClass& g) {
    auto it = s.find(g);
    return it == s.end() ? Rational(0) : it->second;
}

}  // namespace hurwitz
