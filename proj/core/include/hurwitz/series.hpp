#pragma once

// Truncated univariate power series with exact rational coefficients.

#include "hurwitz/rational.hpp"

#include <vector>

namespace hurwitz {

class UniSeries {
public:
    /// Zero series known up to and including t^order.
    explicit UniSeries(unsigned order) : coeffs_(order + 1) {}
    UniSeries(unsigned order, std::vector<Rational> coeffs);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational& operator[](unsigned k) const { return coeffs_[k]; }
    Rational& operator[](unsigned k) { return coeffs_[k]; }
    /// Zero beyond the truncation order.
    Rational coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    UniSeries operator+(const UniSeries& o) const;
    UniSeries operator*(const UniSeries& o) const;
    UniSeries operator*(const Rational& c) const;
    UniSeries pow(unsigned k) const;
    /// f(t) -> f(a t)
    UniSeries rescale(const Rational& a) const;
    /// Requires constant term 1.
    UniSeries log() const;
    /// Requires constant term 0.
    UniSeries exp() const;

    bool is_even() const;
    bool operator==(const UniSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// B_k from sum_{j=0}^{k} C(k+1, j) B_j = 0, so B_1 = -1/2 and odd B_k vanish for k > 1.
Rational bernoulli(unsigned k);

/// sinh(t/2)/(t/2) = sum_p t^{2p} / (2^{2p} (2p+1)!)
UniSeries phi_series(unsigned order);

/// sum_{g>=1} B_{2g} / ((2g)! 2g) t^{2g}, built from the Bernoulli numbers directly.
UniSeries log_phi_series(unsigned order);

}  // namespace hurwitz
