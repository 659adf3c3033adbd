#pragma once

#include <cstdint>
#include <string_view>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

namespace asearch {

// Seeded generator with a platform-independent output stream.
//
// Raw bits come from MT19937-64, whose sequence is fixed by the C++
// standard; Boost's implementation is faster than libstdc++'s and produces
// the same stream. Uniforms take the top 53 bits. Normals come from
// Boost.Random's ziggurat sampler, one engine draw each;
// std::normal_distribution is avoided because its algorithm differs between
// standard library vendors.
//
// Parallel work splits into sub-streams: stream b of seed s is seeded with
// splitmix64(s + (b + 1) * 0x9E3779B97F4A7C15).
class Rng {
public:
    static constexpr std::string_view kName = "mt19937_64/boost-ziggurat/splitmix64-streams";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index);
    static std::uint64_t splitmix64(std::uint64_t x);

    std::uint64_t next_u64() { return engine_(); }

    // [0, 1)
    double uniform();

    // Standard normal.
    double normal();

    // Index in [0, n).
    std::size_t below(std::size_t n);

private:
    boost::random::mt19937_64 engine_;
    boost::random::normal_distribution<double> normal_;
};

} // namespace asearch
