#pragma once

// Brute-force Hurwitz polynomials: every ordered tuple of transpositions is
// enumerated and kept iff its right-to-left product lands in the target class.

#include "hurwitz/permgroup.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/wring.hpp"

#include <cstdint>
#include <stdexcept>

namespace hurwitz {

struct OracleOptions {
    std::uint64_t budget = 100'000'000;  // max leaf visits
    unsigned threads = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const Integer& estimate, std::uint64_t budget);
    const Integer& estimated_leaves() const { return estimate_; }
    std::uint64_t budget() const { return budget_; }

private:
    Integer estimate_;
    std::uint64_t budget_;
};

struct FactorizationTask {
    CycleType target;
    int m = 0;  // tuple length

    int n() const { return target.size(); }
    /// n-cycle target with m = n + 2g - 1.
    static FactorizationTask cycle(int n, int g);
    /// lambda target with m = n + 2g - 2 + s.
    static FactorizationTask lambda(const CycleType& target, int g);
    /// False when m < 0 or m has the wrong parity; the polynomial is then zero.
    bool feasible() const;
    /// C(n,2)^m as an exact integer.
    Integer leaf_count() const;
};

/// Sum of w(t_1)...w(t_m) over tuples whose product t_m...t_1 lies in the target class.
/// Throws BudgetExceeded before enumerating if leaf_count() > budget.
WPolynomial enumerate_factorizations(const FactorizationTask& task, const OracleOptions& opts = {});

WPolynomial hurwitz_poly(int n, int g, const OracleOptions& opts = {});
WPolynomial hurwitz_poly_lambda(const CycleType& lambda, int g, const OracleOptions& opts = {});

/// P(1) / n!
Rational hurwitz_number(int n, int g, const OracleOptions& opts = {});
Rational hurwitz_number_lambda(const CycleType& lambda, int g, const OracleOptions& opts = {});

}  // namespace hurwitz
