#include "hurwitz/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hurwitz {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol, int max_sweeps) {
    const auto N = static_cast<std::size_t>(n);
    if (a.size() != N * N) throw std::invalid_argument("jacobi: matrix has wrong size");
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * N + j]; };

    double frob = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            frob += at(i, j) * at(i, j);
            if (std::abs(at(i, j) - at(j, i)) > 1e-12 * (1 + std::abs(at(i, j))))
                throw std::invalid_argument("jacobi: matrix is not symmetric");
        }
    frob = std::sqrt(frob);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) off += 2 * at(i, j) * at(i, j);
        if (std::sqrt(off) <= tol * frob) break;

        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = at(p, q);
                if (apq == 0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(N);
    for (std::size_t i = 0; i < N; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace hurwitz
