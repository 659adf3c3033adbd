#include "asearch/kernels.hpp"

#include <exception>
#include <utility>
#include <vector>

#include "jacobi_detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace asearch {

bool openmp_enabled() noexcept
{
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace kernels::omp {

void for_each(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const auto n = static_cast<std::ptrdiff_t>(count);
    // Exceptions may not leave a parallel region; keep the lowest-index one.
    std::exception_ptr error;
    std::ptrdiff_t error_index = n;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(asearch_for_each_error)
            if (i < error_index) {
                error_index = i;
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

void matvec(const HermitianOperator& h, std::span<const Complex> v, std::span<Complex> out)
{
    const std::size_t n = h.dim();
    if (v.size() != n || out.size() != n) {
        throw DimensionError("kernels::matvec: dimension mismatch");
    }
    const Complex* a = h.data().data();
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const Complex* row = a + static_cast<std::size_t>(i) * n;
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += row[j] * v[j];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
}

// Round-robin (tournament) ordering: each of the m - 1 steps of a sweep
// applies m / 2 disjoint rotations together, m being n rounded up to even
// with a dummy index for odd n. Disjoint rotations commute, so the column
// pass (every row, contiguous) and the row pass (one pair per task) can each
// run in parallel. Every entry is produced by the same operations whatever
// the thread count.
Eigensystem jacobi(const HermitianOperator& h)
{
    const std::size_t n = h.dim();
    std::vector<Complex> a(h.data().begin(), h.data().end());
    std::vector<Complex> w = detail::identity_rows(n);
    const std::size_t m = n + (n % 2);
    const bool wide = n >= 96;

    struct Pivot {
        std::size_t p;
        std::size_t q;
        detail::JacobiRotation r;
        double app;
        double aqq;
    };
    std::vector<Pivot> pivots;
    pivots.reserve(m / 2);

    const double threshold = detail::kJacobiRelativeOffNorm * h.frobenius_norm();
    int sweeps = 0;
    while (sweeps < detail::kJacobiMaxSweeps && n > 1) {
        const double off = detail::off_diagonal_norm(a, n);
        if (off <= threshold || off == 0.0) {
            break;
        }
        for (std::size_t step = 0; step + 1 < m; ++step) {
            pivots.clear();
            for (std::size_t k = 0; k < m / 2; ++k) {
                std::size_t i = k == 0 ? step : (step + k) % (m - 1);
                std::size_t j = k == 0 ? m - 1 : (step + (m - 1) - k) % (m - 1);
                if (i > j) {
                    std::swap(i, j);
                }
                if (j >= n || a[i * n + j] == Complex(0.0)) {
                    continue;
                }
                const double app = a[i * n + i].real();
                const double aqq = a[j * n + j].real();
                pivots.push_back({i, j, detail::jacobi_rotation(a[i * n + j], app, aqq), app, aqq});
            }
            if (pivots.empty()) {
                continue;
            }
            const auto rows = static_cast<std::ptrdiff_t>(n);
            const auto count = static_cast<std::ptrdiff_t>(pivots.size());

            // A <- A U
#pragma omp parallel for schedule(static) if (wide)
            for (std::ptrdiff_t k = 0; k < rows; ++k) {
                Complex* row = a.data() + static_cast<std::size_t>(k) * n;
                for (const Pivot& pv : pivots) {
                    const Complex xp = row[pv.p];
                    const Complex xq = row[pv.q];
                    row[pv.p] = pv.r.c * xp - pv.r.s * pv.r.e * xq;
                    row[pv.q] = pv.r.s * xp + pv.r.c * pv.r.e * xq;
                }
            }

            // A <- U^H A, then V <- V U
#pragma omp parallel for schedule(static) if (wide)
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                const Pivot& pv = pivots[static_cast<std::size_t>(i)];
                const Complex ce = std::conj(pv.r.e);
                Complex* row_p = a.data() + pv.p * n;
                Complex* row_q = a.data() + pv.q * n;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex xp = row_p[k];
                    const Complex xq = row_q[k];
                    row_p[k] = pv.r.c * xp - pv.r.s * ce * xq;
                    row_q[k] = pv.r.s * xp + pv.r.c * ce * xq;
                }
                row_p[pv.p] = pv.app - pv.r.shift;
                row_q[pv.q] = pv.aqq + pv.r.shift;
                row_p[pv.q] = 0.0;
                row_q[pv.p] = 0.0;
                detail::rotate_vectors(w.data() + pv.p * n, w.data() + pv.q * n, n, pv.r);
            }
        }
        ++sweeps;
    }
    return detail::finish_eigensystem(a, w, n, sweeps);
}

} // namespace kernels::omp

} // namespace asearch
