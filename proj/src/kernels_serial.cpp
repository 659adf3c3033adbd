#include "asearch/kernels.hpp"

#include "jacobi_detail.hpp"

namespace asearch::kernels::serial {

void for_each(std::size_t count, const std::function<void(std::size_t)>& body)
{
    for (std::size_t i = 0; i < count; ++i) {
        body(i);
    }
}

void matvec(const HermitianOperator& h, std::span<const Complex> v, std::span<Complex> out)
{
    const std::size_t n = h.dim();
    if (v.size() != n || out.size() != n) {
        throw DimensionError("kernels::matvec: dimension mismatch");
    }
    const Complex* a = h.data().data();
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += a[i * n + j] * v[j];
        }
        out[i] = acc;
    }
}

// Row-cyclic ordering: (0,1), (0,2), ..., (n-2,n-1), one rotation at a time.
// Rows p and q are rotated in place and the columns restored from Hermitian
// symmetry, so A stays exactly Hermitian throughout.
Eigensystem jacobi(const HermitianOperator& h)
{
    const std::size_t n = h.dim();
    std::vector<Complex> a(h.data().begin(), h.data().end());
    std::vector<Complex> w = detail::identity_rows(n);

    const double threshold = detail::kJacobiRelativeOffNorm * h.frobenius_norm();
    int sweeps = 0;
    while (sweeps < detail::kJacobiMaxSweeps) {
        const double off = detail::off_diagonal_norm(a, n);
        if (off <= threshold || off == 0.0) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                if (apq == Complex(0.0)) {
                    continue;
                }
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const detail::JacobiRotation r = detail::jacobi_rotation(apq, app, aqq);
                const Complex ce = std::conj(r.e);

                Complex* row_p = a.data() + p * n;
                Complex* row_q = a.data() + q * n;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const Complex xp = row_p[k];
                    const Complex xq = row_q[k];
                    row_p[k] = r.c * xp - r.s * ce * xq;
                    row_q[k] = r.s * xp + r.c * ce * xq;
                    a[k * n + p] = std::conj(row_p[k]);
                    a[k * n + q] = std::conj(row_q[k]);
                }
                row_p[p] = app - r.shift;
                row_q[q] = aqq + r.shift;
                row_p[q] = 0.0;
                row_q[p] = 0.0;

                detail::rotate_vectors(w.data() + p * n, w.data() + q * n, n, r);
            }
        }
        ++sweeps;
    }
    return detail::finish_eigensystem(a, w, n, sweeps);
}

} // namespace asearch::kernels::serial
