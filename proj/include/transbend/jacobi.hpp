#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "transbend/vec3.hpp"

namespace transbend {

template <std::size_t N>
using SymMat = std::array<std::array<double, N>, N>;

template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values{};                  // descending
    std::array<std::array<double, N>, N> vectors{};  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi diagonalization of a symmetric NxN matrix. Deterministic
// sweep order; rotations follow the classic Rutishauser recurrences.
template <std::size_t N>
EigenSystem<N> jacobi_eigen(SymMat<N> a, double tol = 1e-14, int max_sweeps = 64) {
    std::array<std::array<double, N>, N> v{};
    for (std::size_t i = 0; i < N; ++i) v[i][i] = 1.0;

    double scale = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) scale = std::max(scale, std::abs(a[i][j]));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
        if (std::sqrt(off) <= tol * scale) break;

        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = a[p][q];
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (std::size_t r = 0; r < N; ++r) {
                    if (r != p && r != q) {
                        const double arp = a[r][p], arq = a[r][q];
                        a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
                        a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v[p][r], vrq = v[q][r];
                    v[p][r] = vrp - s * (vrq + tau * vrp);
                    v[q][r] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    EigenSystem<N> es;
    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });
    for (std::size_t k = 0; k < N; ++k) {
        es.values[k] = a[order[k]][order[k]];
        es.vectors[k] = v[order[k]];
        // canonical sign: first component of largest magnitude made positive
        std::size_t imax = 0;
        for (std::size_t i = 1; i < N; ++i)
            if (std::abs(es.vectors[k][i]) > std::abs(es.vectors[k][imax])) imax = i;
        if (es.vectors[k][imax] < 0.0)
            for (double& c : es.vectors[k]) c = -c;
    }
    return es;
}

struct Eigen3 {
    std::array<double, 3> values{};  // descending
    std::array<Vec3, 3> vectors{};
};

inline Eigen3 jacobi_eigen3(const Mat3& m, double tol = 1e-14) {
    SymMat<3> a{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a[i][j] = 0.5 * (m(i, j) + m(j, i));
    const auto es = jacobi_eigen<3>(a, tol);
    Eigen3 out;
    out.values = es.values;
    for (std::size_t k = 0; k < 3; ++k)
        out.vectors[k] = Vec3{es.vectors[k][0], es.vectors[k][1], es.vectors[k][2]};
    return out;
}

}  // namespace transbend
