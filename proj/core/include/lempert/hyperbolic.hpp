#pragma once

#include <array>
#include <utility>

#include "lempert/algebra.hpp"
#include "lempert/errors.hpp"

namespace lempert {

// Point of the open unit disc.  The constructor rejects anything with
// modulus >= 1 - 1e-15 so that atanh and the Moebius denominators are safe
// for every value that ever gets wrapped.
class DiscPoint {
 public:
  DiscPoint() : v_(0.0) {}
  explicit DiscPoint(cplx v);

  cplx value() const { return v_; }
  operator cplx() const { return v_; }

 private:
  cplx v_;
};

/*
 * Automorphism of the unit disc,
 *
 *     a(z) = rotation * (z - center) / (1 - conj(center) z),
 *
 * |rotation| = 1, |center| < 1.  This two-parameter form is closed under
 * inversion: the inverse has rotation conj(rotation) and center
 * -rotation*center.
 */
class MobiusMap {
 public:
  MobiusMap() : rot_(1.0) {}
  MobiusMap(cplx rotation, DiscPoint center);

  static MobiusMap identity() { return MobiusMap(); }

  cplx rotation() const { return rot_; }
  cplx center() const { return c_.value(); }

  // defined on the closed disc (denominator cannot vanish there)
  cplx apply(cplx z) const { return rot_ * (z - c_.value()) / (1.0 - std::conj(c_.value()) * z); }
  DiscPoint apply(DiscPoint z) const { return DiscPoint(apply(z.value())); }

  MobiusMap inverse() const { return MobiusMap(std::conj(rot_), DiscPoint(-rot_ * c_.value())); }

 private:
  cplx rot_;
  DiscPoint c_;
};

// pseudohyperbolic distance |(w - z) / (1 - conj(w) z)|, always in [0, 1)
double pseudo_distance(DiscPoint w, DiscPoint z);

// Poincare distance atanh of the above
double poincare_distance(DiscPoint w, DiscPoint z);

// Fit a disc automorphism through three input/output pairs, which may lie on
// the closed disc.  The first two pairs determine the candidate (center from
// the first, rotation from the second); the third must be reproduced to
// within `tolerance`, else NoAutomorphism.  Inputs must be pairwise distinct.
MobiusMap mobius_fit(const std::array<std::pair<cplx, cplx>, 3>& pairs,
                     double tolerance = 1e-10);

}  // namespace lempert
