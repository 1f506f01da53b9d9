#include "lempert/hyperbolic.hpp"

#include <cmath>
#include <sstream>

namespace lempert {

namespace {

constexpr double kDiscSlack = 1e-15;

// (z - a) / (1 - conj(a) z), the automorphism sending a to 0
cplx to_origin(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }

}  // namespace

DiscPoint::DiscPoint(cplx v) : v_(v) {
  if (!(std::abs(v) < 1.0 - kDiscSlack)) {
    std::ostringstream os;
    os << "disc point modulus " << std::abs(v) << " is not strictly inside the unit disc";
    throw OutsideDomain(os.str());
  }
}

MobiusMap::MobiusMap(cplx rotation, DiscPoint center) : rot_(rotation), c_(center) {
  if (std::abs(std::abs(rotation) - 1.0) > 1e-14)
    throw Error("Moebius rotation must be unimodular");
}

double pseudo_distance(DiscPoint w, DiscPoint z) {
  return std::abs(to_origin(w.value(), z.value()));
}

double poincare_distance(DiscPoint w, DiscPoint z) {
  return std::atanh(pseudo_distance(w, z));
}

/*
 * Strategy: one pair (w1,z1) with both points interior anchors the fit.
 * With A = to_origin(w1) and B = to_origin(z1) every candidate is
 * B^{-1} o R o A for a rotation R(x) = rot x, and the second pair pins rot:
 * |A(w2)| must match |B(z2)| (pseudo-distance is invariant), and the phases
 * give rot = phase(B(z2)) / phase(A(w2)).  The composed map is reduced to
 * the (rotation, center) normal form exactly:
 *
 *     center  c   = A^{-1}( conj(rot) * B(0) ),        B(0) = -z1
 *     rotation    = rot * A'(c) * (1-|c|^2) / (1-|z1|^2)
 *
 * using a'(c) = rotation/(1-|c|^2) for any automorphism in normal form.
 * The remaining pair is then a pure consistency check.
 */
MobiusMap mobius_fit(const std::array<std::pair<cplx, cplx>, 3>& pairs, double tolerance) {
  for (const auto& [in, out] : pairs) {
    if (std::abs(in) > 1.0 + 1e-12 || std::abs(out) > 1.0 + 1e-12)
      throw NoAutomorphism("fit data leaves the closed disc");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(pairs[i].first - pairs[j].first) < 1e-14)
        throw NoAutomorphism("fit inputs must be pairwise distinct");

  // anchor pair: both coordinates interior
  int anchor = -1;
  for (int i = 0; i < 3 && anchor < 0; ++i)
    if (std::abs(pairs[i].first) < 1.0 - 1e-12 && std::abs(pairs[i].second) < 1.0 - 1e-12)
      anchor = i;
  if (anchor < 0)
    throw NoAutomorphism("fit needs at least one pair with both points interior");
  const int second = anchor == 0 ? 1 : 0;

  const cplx w1 = pairs[anchor].first, z1 = pairs[anchor].second;
  const cplx w2 = pairs[second].first, z2 = pairs[second].second;

  const cplx u = to_origin(w1, w2);  // nonzero: inputs distinct
  const cplx v = to_origin(z1, z2);
  if (std::abs(v) < 1e-14 || std::abs(std::abs(u) - std::abs(v)) > tolerance)
    throw NoAutomorphism("pair moduli differ: no automorphism matches both pairs");
  const cplx rot = (v / std::abs(v)) / (u / std::abs(u));

  const cplx c = [&] {
    const cplx x = std::conj(rot) * (-z1);
    return (x + w1) / (1.0 + std::conj(w1) * x);  // A^{-1}(x)
  }();
  const cplx a_prime = (1.0 - std::norm(w1)) / std::pow(1.0 - std::conj(w1) * c, 2);
  cplx rho = rot * a_prime * (1.0 - std::norm(c)) / (1.0 - std::norm(z1));
  rho /= std::abs(rho);

  const MobiusMap fitted(rho, DiscPoint(c));
  for (const auto& [in, out] : pairs) {
    if (std::abs(fitted.apply(in) - out) > tolerance)
      throw NoAutomorphism("no disc automorphism reproduces all three pairs");
  }
  return fitted;
}

}  // namespace lempert
