#pragma once

#include <cstdint>

namespace gevlab {

struct SampleBudget {
    int points = 4096;
    std::uint64_t seed = 1234;
};

// Low-discrepancy Kronecker sequences with a seed-dependent offset; cheap,
// deterministic, and good enough for sup estimation with a refinement pass.
class QuasiRandom {
  public:
    explicit QuasiRandom(std::uint64_t seed);

    // d-th coordinate of sample i, in (0, 1).
    double coord(std::uint64_t i, int d) const;

  private:
    double offset_[3];
};

}  // namespace gevlab
