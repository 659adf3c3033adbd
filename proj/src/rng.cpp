#include "asearch/rng.hpp"


namespace asearch {

std::uint64_t Rng::splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index)
{
    return Rng(splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL));
}

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    return normal_(engine_);
}

std::size_t Rng::below(std::size_t n)
{
    // Rejection keeps the draw unbiased for any n.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return static_cast<std::size_t>(x % n);
}

} // namespace asearch
