#pragma once

// Shared pieces of the two Jacobi kernels.
//
// A rotation annihilating a_pq is U = D R, where D = diag(1, e^{-i phi}) on
// (p, q) makes the pivot real (phi = arg a_pq) and R is the classical real
// Jacobi rotation of the resulting 2x2 block:
//
//   U_pp = c      U_pq = s
//   U_qp = -s e   U_qq = c e        with e = e^{-i phi}
//
// Eigenvectors are kept as rows of W = V^T, so V <- V U updates two
// contiguous rows of W.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "asearch/linalg.hpp"

namespace asearch::detail {

inline constexpr double kJacobiRelativeOffNorm = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

struct JacobiRotation {
    double c = 1.0;
    double s = 0.0;
    Complex e = 1.0;
    // Signed shift of the diagonal: a_pp -= shift, a_qq += shift.
    double shift = 0.0;
};

inline JacobiRotation jacobi_rotation(Complex apq, double app, double aqq)
{
    const double g = std::abs(apq);
    const double theta = (aqq - app) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    return {c, t * c, std::conj(apq) / g, t * g};
}

// V <- V U on the eigenvector rows p and q.
inline void rotate_vectors(Complex* wp, Complex* wq, std::size_t n, const JacobiRotation& r)
{
    for (std::size_t k = 0; k < n; ++k) {
        const Complex xp = wp[k];
        const Complex xq = wq[k];
        wp[k] = r.c * xp - r.s * r.e * xq;
        wq[k] = r.s * xp + r.c * r.e * xq;
    }
}

inline double off_diagonal_norm(const std::vector<Complex>& a, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                acc += std::norm(a[i * n + j]);
            }
        }
    }
    return std::sqrt(acc);
}

inline std::vector<Complex> identity_rows(std::size_t n)
{
    std::vector<Complex> w(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i * n + i] = 1.0;
    }
    return w;
}

// Sorts the diagonal ascending (stable in the original index) and packages
// the matching eigenvector rows.
inline Eigensystem finish_eigensystem(const std::vector<Complex>& a, const std::vector<Complex>& w, std::size_t n,
                                      int sweeps)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i].real() < a[j * n + j].real(); });

    Eigensystem eig;
    eig.dim = n;
    eig.sweeps = sweeps;
    eig.values.resize(n);
    eig.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        eig.values[k] = a[src * n + src].real();
        std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(src * n), n,
                    eig.vectors.begin() + static_cast<std::ptrdiff_t>(k * n));
    }
    return eig;
}

} // namespace asearch::detail
