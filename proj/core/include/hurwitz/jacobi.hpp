#pragma once

#include <vector>

namespace hurwitz {

/// Eigenvalues of a real symmetric n x n matrix (row-major) by cyclic Jacobi sweeps,
/// stopping once the off-diagonal Frobenius norm drops below tol * ||A||_F.
/// Returned in ascending order. Throws std::invalid_argument if the input is not symmetric.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol = 1e-12, int max_sweeps = 100);

}  // namespace hurwitz
