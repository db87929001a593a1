#include "hurwitz/series.hpp"

#include <stdexcept>

namespace hurwitz {

UniSeries::UniSeries(unsigned order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

UniSeries UniSeries::operator+(const UniSeries& o) const {
    UniSeries r(std::min(order(), o.order()));
    for (unsigned k = 0; k <= r.order(); ++k) r[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

UniSeries UniSeries::operator*(const UniSeries& o) const {
    UniSeries r(std::min(order(), o.order()));
    for (unsigned a = 0; a <= r.order(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (unsigned b = 0; a + b <= r.order(); ++b) r[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    return r;
}

UniSeries UniSeries::operator*(const Rational& c) const {
    UniSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UniSeries UniSeries::pow(unsigned k) const {
    UniSeries r(order());
    r[0] = 1;
    UniSeries base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

UniSeries UniSeries::rescale(const Rational& a) const {
    UniSeries r = *this;
    Rational f = 1;
    for (unsigned k = 0; k <= order(); ++k) {
        r[k] *= f;
        f *= a;
    }
    return r;
}

UniSeries UniSeries::log() const {
    if (coeffs_[0] != 1) throw std::invalid_argument("log needs constant term 1");
    // f' = f * (log f)'  =>  k L_k = k f_k - sum_{j=1}^{k-1} j L_j f_{k-j}
    UniSeries l(order());
    for (unsigned k = 1; k <= order(); ++k) {
        Rational acc = Rational(k) * coeffs_[k];
        for (unsigned j = 1; j < k; ++j) acc -= Rational(j) * l[j] * coeffs_[k - j];
        l[k] = acc / Rational(k);
    }
    return l;
}

UniSeries UniSeries::exp() const {
    if (coeffs_[0] != 0) throw std::invalid_argument("exp needs constant term 0");
    // E' = E f'  =>  k E_k = sum_{j=1}^{k} j f_j E_{k-j}
    UniSeries e(order());
    e[0] = 1;
    for (unsigned k = 1; k <= order(); ++k) {
        Rational acc = 0;
        for (unsigned j = 1; j <= k; ++j) acc += Rational(j) * coeffs_[j] * e[k - j];
        e[k] = acc / Rational(k);
    }
    return e;
}

bool UniSeries::is_even() const {
    for (unsigned k = 1; k <= order(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

Rational bernoulli(unsigned k) {
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rational(m + 1);
    }
    return b[k];
}

UniSeries phi_series(unsigned order) {
    UniSeries s(order);
    for (unsigned p = 0; 2 * p <= order; ++p)
        s[2 * p] = Rational(1) / Rational(ipow(2, 2 * p) * factorial(2 * p + 1));
    return s;
}

UniSeries log_phi_series(unsigned order) {
    UniSeries s(order);
    for (unsigned g = 1; 2 * g <= order; ++g)
        s[2 * g] = bernoulli(2 * g) / Rational(factorial(2 * g) * (2 * g));
    return s;
}

}  // namespace hurwitz
