#include "hurwitz/spectral.hpp"

#include "hurwitz/jacobi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hurwitz {

SymbolicMatrix::SymbolicMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), WPolynomial(n)) {
    if (n < 0) throw std::invalid_argument("negative matrix size");
}

const WPolynomial& SymbolicMatrix::at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * n_ + col)];
}

WPolynomial& SymbolicMatrix::at(int row, int col) { return entries_[static_cast<std::size_t>(row * n_ + col)]; }

SymbolicMatrix SymbolicMatrix::operator*(const SymbolicMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    SymbolicMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) r.at(i, j) += at(i, k) * o.at(k, j);
    return r;
}

WPolynomial SymbolicMatrix::trace() const {
    WPolynomial t(n_);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool SymbolicMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

SymbolicMatrix SymbolicMatrix::minor(int k) const {
    SymbolicMatrix r(n_ - 1);
    for (int i = 0, ri = 0; i < n_; ++i) {
        if (i == k) continue;
        for (int j = 0, rj = 0; j < n_; ++j) {
            if (j == k) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

WPolynomial SymbolicMatrix::determinant() const {
    if (n_ > 20) throw std::invalid_argument("determinant: matrix too large for cofactor expansion");
    // det of rows [n - |mask|, n) restricted to the columns in mask, expanding along the first row
    std::map<unsigned, WPolynomial> memo;
    auto det = [&](auto&& self, unsigned mask) -> WPolynomial {
        if (mask == 0) return WPolynomial::constant(n_, 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int row = n_ - std::popcount(mask);
        WPolynomial acc(n_);
        int pos = 0;
        for (int c = 0; c < n_; ++c) {
            if (!(mask & (1u << c))) continue;
            const WPolynomial& entry = at(row, c);
            if (!entry.is_zero()) {
                WPolynomial term = entry * self(self, mask & ~(1u << c));
                if (pos % 2) acc -= term;
                else acc += term;
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return det(det, (1u << n_) - 1);
}

std::vector<double> SymbolicMatrix::evaluate(const std::function<Rational(EdgeVar)>& value) const {
    std::vector<double> out(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) out[k] = entries_[k].evaluate(value).get_d();
    return out;
}

SymbolicMatrix laplacian(int n) {
    if (n < 1) throw std::invalid_argument("laplacian: n must be positive");
    SymbolicMatrix a(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            auto w = WPolynomial::variable(n, EdgeVar(i, j));
            a.at(i - 1, j - 1) -= w;
            a.at(i - 1, i - 1) += w;
        }
    }
    return a;
}

namespace {

WPolynomial tree_poly_pruefer(int n) {
    WPolynomial out(n);
    if (n == 1) return WPolynomial::constant(1, 1);
    if (n == 2) return WPolynomial::variable(2, EdgeVar(1, 2));
    const auto len = static_cast<std::size_t>(n - 2);
    std::vector<int> seq(len, 1);
    while (true) {
        // decode
        std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
        for (int x : seq) ++degree[static_cast<std::size_t>(x)];
        std::vector<Monomial::Factor> f;
        for (int x : seq) {
            int leaf = 1;
            while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            f.emplace_back(EdgeVar(leaf, x), 1u);
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        int u = 0, v = 0;
        for (int x = 1; x <= n; ++x)
            if (degree[static_cast<std::size_t>(x)] == 1) (u ? v : u) = x;
        f.emplace_back(EdgeVar(u, v), 1u);
        out.add_term(Monomial(std::move(f)), 1);

        std::size_t k = 0;
        while (k < len && seq[k] == n) seq[k++] = 1;
        if (k == len) break;
        ++seq[k];
    }
    return out;
}

}  // namespace

WPolynomial tree_poly(int n, TreeMethod method) {
    if (n < 1) throw std::invalid_argument("tree_poly: n must be positive");
    if (method == TreeMethod::automatic) method = n <= 6 ? TreeMethod::kirchhoff : TreeMethod::pruefer;
    if (method == TreeMethod::pruefer) return tree_poly_pruefer(n);
    if (n == 1) return WPolynomial::constant(1, 1);
    return laplacian(n).minor(0).determinant().with_n(n);
}

WPolynomial trace_power(int n, unsigned k) {
    if (k == 0) return WPolynomial::constant(n, n);
    const SymbolicMatrix a = laplacian(n);
    const unsigned lo = k / 2, hi = k - lo;
    SymbolicMatrix p_hi = a;
    for (unsigned e = 1; e < hi; ++e) p_hi = p_hi * a;
    if (lo == 0) return p_hi.trace();
    SymbolicMatrix p_lo = a;
    for (unsigned e = 1; e < lo; ++e) p_lo = p_lo * a;
    // Tr(X Y) = sum_ij X_ij Y_ji
    WPolynomial t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t += p_hi.at(i, j) * p_lo.at(j, i);
    return t;
}

WPolynomial r_part(int g, int n) {
    if (g < 1) throw std::invalid_argument("r_part: g must be >= 1 (r_0 = 0)");
    const auto two_g = static_cast<unsigned>(2 * g);
    Rational c = bernoulli(two_g) / Rational(factorial(two_g) * two_g);
    return trace_power(n, two_g) * c;
}

WPolynomial R_part(int g, int n) {
    if (g < 0) throw std::invalid_argument("R_part: g must be >= 0");
    if (g == 0) return WPolynomial::constant(n, 1);
    std::vector<WPolynomial> r(static_cast<std::size_t>(g + 1));
    for (int h = 1; h <= g; ++h) r[static_cast<std::size_t>(h)] = r_part(h, n);

    WPolynomial out(n);
    // partitions of g as multiplicities mult[h]
    std::vector<unsigned> mult(static_cast<std::size_t>(g + 1), 0);
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            WPolynomial term = WPolynomial::constant(n, 1);
            Integer denom = 1;
            for (int h = 1; h <= g; ++h) {
                const unsigned k = mult[static_cast<std::size_t>(h)];
                if (!k) continue;
                term = term * r[static_cast<std::size_t>(h)].pow(k);
                denom *= factorial(k);
            }
            out += term * ratio(1, denom);
            return;
        }
        for (int h = std::min(remaining, max_part); h >= 1; --h) {
            ++mult[static_cast<std::size_t>(h)];
            self(self, remaining - h, h);
            --mult[static_cast<std::size_t>(h)];
        }
    };
    rec(rec, g, g);
    return out;
}

DivReport verify_div(int g, int n, const OracleOptions& opts) {
    DivReport rep;
    rep.enumerated = hurwitz_poly(n, g, opts);
    const int m = n + 2 * g - 1;
    if (m < 0 || g < 0) {
        rep.closed_form = WPolynomial(n);
    } else {
        rep.closed_form = tree_poly(n) * R_part(g, n) * Rational(factorial(static_cast<unsigned>(m)));
    }
    rep.difference = rep.enumerated - rep.closed_form;
    rep.equal = rep.difference.is_zero();
    return rep;
}

Rational rho(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("rho: needs g >= 0 and n >= 1");
    const auto order = static_cast<unsigned>(2 * g);
    return phi_series(order).rescale(Rational(n)).pow(static_cast<unsigned>(n - 1)).coefficient(order);
}

Rational hurwitz_closed(int g, int n) {
    Rational r = rho(g, n);
    r *= ratio(factorial(static_cast<unsigned>(n + 2 * g - 1)), factorial(static_cast<unsigned>(n)));
    // n^{n-2}, which is 1/n for n = 1
    if (n >= 2) r *= Rational(ipow(n, static_cast<unsigned>(n - 2)));
    else r /= Rational(n);
    return r;
}

SumSignReport eval_sumsign(int g, int n, const std::function<Rational(EdgeVar)>& value, const WPolynomial& exact_p) {
    if (n < 2) throw std::invalid_argument("eval_sumsign: needs n >= 2");
    SumSignReport rep;
    const SymbolicMatrix a = laplacian(n);
    if (!a.is_symmetric()) throw std::logic_error("eval_sumsign: Laplacian is not symmetric");
    std::vector<double> ev = jacobi_eigenvalues(a.evaluate(value), n);

    auto zero_it = std::min_element(ev.begin(), ev.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
    rep.dropped_eigenvalue = *zero_it;
    ev.erase(zero_it);
    const double scale = std::max(1.0, std::abs(ev.back()));
    for (double x : ev)
        if (std::abs(x) < 1e-9 * scale) rep.multiplicity_warning = true;
    rep.eigenvalues = ev;

    const int m = n + 2 * g - 1;
    const std::size_t k = ev.size();
    long double total = 0;
    for (std::size_t signs = 0; signs < (std::size_t{1} << k); ++signs) {
        long double lin = 0;
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const bool neg = (signs >> i) & 1u;
            lin += (neg ? -0.5L : 0.5L) * static_cast<long double>(ev[i]);
            if (neg) sign = -sign;
        }
        long double p = 1;
        for (int e = 0; e < m; ++e) p *= lin;
        total += sign * p;
    }
    rep.sumsign_value = total / n;
    rep.exact_value = exact_p.evaluate(value).get_d();
    rep.relative_error =
        static_cast<double>(std::abs(rep.sumsign_value - rep.exact_value) / std::abs(static_cast<long double>(rep.exact_value)));

    long double prod = 1;
    for (double x : ev) prod *= x;
    rep.sigma_product = static_cast<double>(prod);
    rep.n_times_tree = Rational(tree_poly(n).evaluate(value) * n).get_d();
    rep.kirchhoff_relative_error = std::abs(rep.sigma_product - rep.n_times_tree) / std::abs(rep.n_times_tree);
    return rep;
}

}  // namespace hurwitz
