#pragma once

#include <cmath>
#include <vector>

#include "lempert/algebra.hpp"

namespace lempert {

// Radial-angular evaluation grid in the unit disc: 8 radii 1 - 2^{-(i+1)}
// (so the outer ring sits at 0.996..., stressing near-boundary behaviour)
// times count/8 equispaced angles.
inline std::vector<cplx> radial_angular_grid(int count) {
  const int angles = count >= 8 ? count / 8 : 1;
  std::vector<cplx> out;
  out.reserve(8 * angles);
  for (int i = 0; i < 8; ++i) {
    const double r = 1.0 - std::ldexp(1.0, -(i + 1));
    for (int j = 0; j < angles; ++j) {
      const double th = 2.0 * M_PI * j / angles;
      out.push_back(std::polar(r, th));
    }
  }
  return out;
}

}  // namespace lempert
