#pragma once

// Dense symmetric eigensolver (cyclic Jacobi) sized for the Laplacians of
// tiny hosts, plus the algebraic-connectivity closed form it is checked
// against: lambda_1(n I - A) = 2 - 2 cos(pi / (n+1)).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permuperc/permutation.hpp"

namespace permuperc {

// Eigenvalues of a symmetric matrix, ascending. Cyclic Jacobi sweeps until
// the off-diagonal mass is negligible; plenty for <= 120 x 120.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("jacobi: square matrix required");

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24) break;

        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-18) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a[p][p], aqq = a[q][q], apq = a[p][q];
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p][q] = a[q][p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r][p], arq = a[r][q];
                    a[r][p] = a[p][r] = c * arp - s * arq;
                    a[r][q] = a[q][r] = s * arp + c * arq;
                }
            }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Second-smallest Laplacian eigenvalue of the host, dense solve; n <= 4.
inline double laplacian_lambda1(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("laplacian_lambda1: n <= 4");
    const auto nverts = static_cast<std::size_t>(host_vertex_count(n));
    std::vector<std::vector<double>> L(nverts, std::vector<double>(nverts, 0.0));
    for (std::size_t v = 0; v < nverts; ++v) L[v][v] = static_cast<double>(n);
    for_each_host_edge(n, [&](std::uint64_t u, std::uint64_t v, std::uint64_t) {
        L[u][v] = L[v][u] = -1.0;
    });
    return jacobi_eigenvalues(std::move(L))[1];
}

inline double lambda1_closed_form(int n) {
    return 2.0 - 2.0 * std::cos(3.14159265358979323846 / (n + 1));
}

}  // namespace permuperc
