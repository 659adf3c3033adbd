#pragma once

// Monte Carlo estimate of E|<s|w>|^2 for s, w uniform on the unit sphere of
// C^N (the real 2N-1 sphere). The exact value is 1/N.

#include <cstdint>
#include <functional>

#include "asearch/kernels.hpp"
#include "asearch/linalg.hpp"
#include "asearch/rng.hpp"

namespace asearch {

struct OverlapSample {
    std::size_t n = 0;
    std::size_t num_samples = 0;
    double mean_x2 = 0.0;
    double stderr_x2 = 0.0;
    double mean_x = 0.0;
    std::uint64_t seed = 0;
    std::size_t streams = 0;
};

// 2n independent standard normals, normalized. Uniform on the sphere.
StateVector random_state(std::size_t n, Rng& rng);

// Draws are split over this many sub-streams regardless of thread count.
inline constexpr std::size_t kOverlapStreams = 64;

using StateTransform = std::function<StateVector(const StateVector&)>;

// Draws m pairs (s, w) and summarizes x = |<s|w>|. Stream b of `seed` draws
// its share of pairs, s first then w for each pair; stream sums merge in
// stream order, so the result is independent of Execution. A non-empty
// `transform_w` is applied to every w before the overlap is taken.
// Requires n >= 1 and m >= 100.
OverlapSample overlap_statistics(std::size_t n, std::size_t m, std::uint64_t seed,
                                 Execution exec = Execution::parallel, const StateTransform& transform_w = {});

// |mean_x2 - 1/n| <= sigmas * stderr_x2, plus a few ulps of 1/n.
bool within_band(const OverlapSample& sample, double sigmas = 4.0);

} // namespace asearch
