#pragma once

#include <cstdint>
#include <random>

#include "lempert/algebra.hpp"

namespace lempert {

// Seeded sampler used by every randomized routine.  Uniform doubles are
// extracted from the raw engine output (53 bits) instead of going through
// std::uniform_real_distribution, so streams are byte-identical across
// standard libraries.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // uniform on the open unit disc, by rejection from the square
  cplx in_disc() {
    for (;;) {
      const double x = uniform(-1.0, 1.0);
      const double y = uniform(-1.0, 1.0);
      if (x * x + y * y < 1.0) return {x, y};
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lempert
