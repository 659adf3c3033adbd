#include "asearch/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace asearch {

namespace {

// Sums of x and of d = x^2 - 1/n. Shifting by the expected mean keeps the
// variance free of cancellation (at n = 1, d is pure rounding noise).
struct Moments {
    double sum_x = 0.0;
    double sum_d = 0.0;
    double sum_d2 = 0.0;
};

void fill_gaussian(std::vector<Complex>& v, Rng& rng)
{
    for (Complex& a : v) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Complex(re, im);
    }
}

} // namespace

StateVector random_state(std::size_t n, Rng& rng)
{
    if (n == 0) {
        throw DimensionError("random_state: dimension must be at least 1");
    }
    std::vector<Complex> v(n);
    fill_gaussian(v, rng);
    return StateVector::normalized(std::move(v));
}

OverlapSample overlap_statistics(std::size_t n, std::size_t m, std::uint64_t seed, Execution exec,
                                 const StateTransform& transform_w)
{
    if (n == 0) {
        throw InvalidParameter("overlap_statistics: dimension must be at least 1");
    }
    if (m < 100) {
        throw InvalidParameter("overlap_statistics: need at least 100 samples");
    }

    const double shift = 1.0 / static_cast<double>(n);
    std::vector<Moments> per_stream(kOverlapStreams);
    kernels::for_each(exec, kOverlapStreams, [&](std::size_t b) {
        const std::size_t count = m / kOverlapStreams + (b < m % kOverlapStreams ? 1 : 0);
        Rng rng = Rng::stream(seed, b);
        Moments acc;
        std::vector<Complex> s(n);
        std::vector<Complex> w(n);
        for (std::size_t i = 0; i < count; ++i) {
            double x2 = 0.0;
            if (transform_w) {
                const StateVector sv = random_state(n, rng);
                const StateVector wv = transform_w(random_state(n, rng));
                x2 = std::norm(inner_product(sv, wv));
            } else {
                // Same draws as random_state, normalized once at the end.
                fill_gaussian(s, rng);
                fill_gaussian(w, rng);
                Complex ip = 0.0;
                double ss = 0.0;
                double ww = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    ip += std::conj(s[k]) * w[k];
                    ss += std::norm(s[k]);
                    ww += std::norm(w[k]);
                }
                x2 = std::min(1.0, std::norm(ip) / (ss * ww));
            }
            const double d = x2 - shift;
            acc.sum_x += std::sqrt(x2);
            acc.sum_d += d;
            acc.sum_d2 += d * d;
        }
        per_stream[b] = acc;
    });

    Moments total;
    for (const Moments& mo : per_stream) {
        total.sum_x += mo.sum_x;
        total.sum_d += mo.sum_d;
        total.sum_d2 += mo.sum_d2;
    }
    const double count = static_cast<double>(m);
    const double mean_d = total.sum_d / count;
    const double variance = std::max(0.0, (total.sum_d2 - count * mean_d * mean_d) / (count - 1.0));
    const double mean_x2 = shift + mean_d;

    OverlapSample out;
    out.n = n;
    out.num_samples = m;
    out.mean_x2 = mean_x2;
    out.stderr_x2 = std::sqrt(variance / count);
    out.mean_x = total.sum_x / count;
    out.seed = seed;
    out.streams = kOverlapStreams;
    return out;
}

bool within_band(const OverlapSample& sample, double sigmas)
{
    // The floor covers rounding in x^2 itself, which matters only when the
    // true spread is zero (n = 1).
    const double expected = 1.0 / static_cast<double>(sample.n);
    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * expected;
    return std::abs(sample.mean_x2 - expected) <= sigmas * sample.stderr_x2 + rounding;
}

} // namespace asearch
