#pragma once

// Closed-form side of the Hurwitz polynomial: the weighted Laplacian A_n,
// the tree polynomial T_n, Tr ln phi(A_n) and det phi(A_n) by degree.

#include "hurwitz/oracle.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/wring.hpp"

#include <functional>
#include <vector>

namespace hurwitz {

class SymbolicMatrix {
public:
    explicit SymbolicMatrix(int n);

    int n() const { return n_; }
    const WPolynomial& at(int row, int col) const;  // zero-based
    WPolynomial& at(int row, int col);

    SymbolicMatrix operator*(const SymbolicMatrix& o) const;
    WPolynomial trace() const;
    bool is_symmetric() const;
    /// Drops row and column k (zero-based).
    SymbolicMatrix minor(int k) const;
    /// Cofactor expansion with memoized minors over column subsets.
    WPolynomial determinant() const;
    /// Numeric row-major matrix at the given edge values.
    std::vector<double> evaluate(const std::function<Rational(EdgeVar)>& value) const;

private:
    int n_;
    std::vector<WPolynomial> entries_;
};

/// A_n: diagonal sum_j w_ij, off-diagonal -w_ij.
SymbolicMatrix laplacian(int n);

enum class TreeMethod { automatic, kirchhoff, pruefer };

/// T_n(w), the sum of edge monomials over labeled trees on n vertices. T_1 = 1.
/// automatic uses the reduced determinant for n <= 6 and Pruefer enumeration beyond.
WPolynomial tree_poly(int n, TreeMethod method = TreeMethod::automatic);

/// Tr A_n^k.
WPolynomial trace_power(int n, unsigned k);

/// r_{g,n} = B_{2g} / ((2g)! 2g) Tr A_n^{2g}; g >= 1.
WPolynomial r_part(int g, int n);

/// Degree-2g part of exp(sum_h r_{h,n}), summed over partitions of g. R_{0,n} = 1.
WPolynomial R_part(int g, int n);

struct DivReport {
    bool equal = false;
    WPolynomial enumerated;   // oracle P_{g,n}
    WPolynomial closed_form;  // (n+2g-1)! T_n R_{g,n}
    WPolynomial difference;   // enumerated - closed_form
};

/// Compares the enumerated Hurwitz polynomial against (n+2g-1)! T_n R_{g,n}.
DivReport verify_div(int g, int n, const OracleOptions& opts = {});

/// Coefficient of w^{2g} in phi(n w)^{n-1}.
Rational rho(int g, int n);
/// ((n+2g-1)!/n!) n^{n-2} rho_{g,n}.
Rational hurwitz_closed(int g, int n);

struct SumSignReport {
    std::vector<double> eigenvalues;  // of A_n on the sum-zero subspace, ascending
    double dropped_eigenvalue = 0;    // the one identified with the constant vector
    bool multiplicity_warning = false;
    long double sumsign_value = 0;
    double exact_value = 0;
    double relative_error = 0;
    double sigma_product = 0;
    double n_times_tree = 0;
    double kirchhoff_relative_error = 0;
};

/// Evaluates P_{g,n} from the eigenvalues of the numeric Laplacian via the signed sum
/// (1/n) sum_eps eps_1...eps_{n-1} (sum eps_i sigma_i / 2)^{n+2g-1} and compares it with the
/// exact polynomial at the same point. Also compares sigma_1...sigma_{n-1} with n T_n(w).
SumSignReport eval_sumsign(int g, int n, const std::function<Rational(EdgeVar)>& value,
                           const WPolynomial& exact_p);

}  // namespace hurwitz
