#include "hurwitz/cutjoin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

int PTerm::p_weight() const { return std::accumulate(p.begin(), p.end(), 0); }

std::string to_string(const PTerm& t) {
    std::string out;
    for (int k : t.p) out += (out.empty() ? "" : "*") + std::string("p") + std::to_string(k);
    if (!t.w.is_one()) out += (out.empty() ? "" : "*") + t.w.to_string();
    return out.empty() ? "1" : out;
}

void PSeries::add_term(PTerm t, const Rational& c) {
    if (c == 0) return;
    std::sort(t.p.begin(), t.p.end());
    const int n = t.p_weight();
    const int m = static_cast<int>(t.w.degree());
    if (n > n_max_ || m > m_max_) throw std::out_of_range("term " + to_string(t) + " exceeds truncation bounds");
    auto& block = blocks_[{n, m}];
    auto [it, inserted] = block.try_emplace(std::move(t), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) block.erase(it);
    }
    if (block.empty()) blocks_.erase({n, m});
}

Rational PSeries::coefficient(const PTerm& t) const {
    PTerm key = t;
    std::sort(key.p.begin(), key.p.end());
    auto b = blocks_.find({key.p_weight(), static_cast<int>(key.w.degree())});
    if (b == blocks_.end()) return 0;
    auto it = b->second.find(key);
    return it == b->second.end() ? Rational(0) : it->second;
}

const PSeries::Block& PSeries::block(int n, int m) const {
    static const Block empty;
    auto it = blocks_.find({n, m});
    return it == blocks_.end() ? empty : it->second;
}

std::size_t PSeries::term_count() const {
    std::size_t c = 0;
    for (const auto& [k, b] : blocks_) c += b.size();
    return c;
}

namespace {

Integer normalizer(int n, int m, const CycleType& lambda, PNormalization norm) {
    Integer d = factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n));
    if (norm == PNormalization::aut) d *= Integer(std::to_string(lambda.aut_count()));
    return d;
}

}  // namespace

PSeries build_H(int n_max, int m_max, const OracleOptions& opts, PNormalization norm) {
    if (n_max < 1 || m_max < 0) throw std::invalid_argument("build_H: needs n_max >= 1 and m_max >= 0");
    PSeries h(n_max, m_max);
    for (int n = 1; n <= n_max; ++n) {
        for (const CycleType& lambda : partitions_of(n)) {
            for (int m = 0; m <= m_max; ++m) {
                FactorizationTask task{lambda, m};
                if (!task.feasible()) continue;
                WPolynomial p = enumerate_factorizations(task, opts);
                const Rational scale = ratio(1, normalizer(n, m, lambda, norm));
                for (const auto& [mono, c] : p.terms()) h.add_term(PTerm{lambda.parts(), mono}, c * scale);
            }
        }
    }
    return h;
}

namespace {

// Removes one copy of k from a sorted multiset; returns its multiplicity before removal.
int take(std::vector<int>& ps, int k) {
    auto lo = std::lower_bound(ps.begin(), ps.end(), k);
    auto hi = std::upper_bound(ps.begin(), ps.end(), k);
    const int mult = static_cast<int>(hi - lo);
    if (mult) ps.erase(lo);
    return mult;
}

}  // namespace

PSeries apply_L(const PSeries& s) {
    PSeries out(s.n_max(), s.m_max());
    const Rational half(1, 2);
    for (const auto& [key, block] : s.blocks()) {
        for (const auto& [term, c] : block) {
            std::vector<int> distinct = term.p;
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            // cut: (k+l) p_k p_l d/dp_{k+l}
            for (int j : distinct) {
                for (int k = 1; k < j; ++k) {
                    const int l = j - k;
                    PTerm t = term;
                    const int mult = take(t.p, j);
                    t.p.push_back(k);
                    t.p.push_back(l);
                    out.add_term(std::move(t), c * half * Rational(j) * Rational(mult));
                }
            }
            // join: k l p_{k+l} d^2/dp_k dp_l, ordered pairs
            for (int k : distinct) {
                for (int l : distinct) {
                    PTerm t = term;
                    const int mk = take(t.p, k);
                    const int ml = take(t.p, l);
                    if (ml == 0) continue;  // k == l with a single copy
                    t.p.push_back(k + l);
                    out.add_term(std::move(t), c * half * Rational(k * l) * Rational(mk * ml));
                }
            }
        }
    }
    return out;
}

PSeries w_derivative_sum(const PSeries& s) {
    PSeries out(s.n_max(), s.m_max());
    for (const auto& [key, block] : s.blocks()) {
        for (const auto& [term, c] : block) {
            for (const auto& [e, k] : term.w.factors())
                out.add_term(PTerm{term.p, term.w.without_one(e)}, c * Rational(k));
        }
    }
    return out;
}

WPolynomial extract_hurwitz_poly(const PSeries& h, const CycleType& lambda, int m, PNormalization norm) {
    const int n = lambda.size();
    WPolynomial p(n);
    const Rational scale(normalizer(n, m, lambda, norm));
    for (const auto& [term, c] : h.block(n, m))
        if (term.p == lambda.parts()) p.add_term(term.w, c * scale);
    return p;
}

CutJoinReport compare_cutjoin(const PSeries& h) {
    CutJoinReport rep;
    const PSeries lhs = w_derivative_sum(h);
    const PSeries rhs = apply_L(h);
    rep.equal = true;
    for (int n = 1; n <= h.n_max(); ++n) {
        for (int m = 0; m < h.m_max(); ++m) {
            ++rep.blocks_checked;
            const auto& a = lhs.block(n, m);
            const auto& b = rhs.block(n, m);
            std::map<PTerm, std::pair<Rational, Rational>> merged;
            for (const auto& [t, c] : a) merged[t].first = c;
            for (const auto& [t, c] : b) merged[t].second = c;
            for (const auto& [t, pair] : merged) {
                ++rep.terms_compared;
                if (pair.first != pair.second && rep.equal) {
                    rep.equal = false;
                    rep.first_difference = CutJoinMismatch{n, m, t, pair.first, pair.second};
                }
            }
        }
    }
    return rep;
}

CutJoinReport verify_cutjoin(int n_max, int m_max, const OracleOptions& opts, PNormalization norm) {
    return compare_cutjoin(build_H(n_max, m_max, opts, norm));
}

}  // namespace hurwitz
