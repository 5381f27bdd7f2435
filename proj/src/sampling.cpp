#include "gevlab/sampling.hpp"

#include <cmath>

namespace gevlab {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// R3 sequence constants: powers of the root of x^4 = x + 1.
constexpr double kAlpha[3] = {0.8191725133961645, 0.6710436067037893, 0.5497004779019703};
}  // namespace

QuasiRandom::QuasiRandom(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (double& o : offset_) o = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
}

double QuasiRandom::coord(std::uint64_t i, int d) const {
    const double v = offset_[d] + kAlpha[d] * static_cast<double>(i + 1);
    double f = v - std::floor(v);
    if (f <= 0.0) f = 0x1.0p-53;
    return f;
}

}  // namespace gevlab
