#pragma once

#include <vector>

#include "lempert/covector.hpp"
#include "lempert/domains.hpp"
#include "lempert/geodesics.hpp"
#include "lempert/hyperbolic.hpp"
#include "lempert/inverses.hpp"

namespace lempert {

// Geodesic + covector field + ambient domain: the data from which a left
// inverse is reconstructed by solving (z - f(l)) . v(l) = 0 for l.
struct LempertCandidate {
  GeodesicSpec f;
  CovectorField v;
  DomainModel domain;

  LempertCandidate(GeodesicSpec f_, CovectorField v_);

  cplx fiber_value(const DomainPoint& z, cplx l) const {
    return dot(z.as_c2() - f.eval(l).as_c2(), v.eval(l));
  }
};

struct RootSolveConfig {
  int contour_nodes = 256;
  std::vector<double> contour_radii = {0.9, 0.99, 0.999};
  double newton_tolerance = 1e-13;
  int newton_max_iterations = 40;

  void validate() const;
};

// Winding number of l -> (z - f(l)) . v(l) along |l| = radius.  Raises
// ZeroOnContour when the modulus drops below 1e-12 on the circle.
int zero_count(const LempertCandidate& c, const DomainPoint& z, double radius, int nodes);

// The unique l with (z - f(l)) . v(l) = 0, located by escalating the contour
// radius until the winding count is 1, estimating the root from the argument
// principle and polishing by Newton (derivative via a one-dimensional
// contour of radius (1-|l|)/2).  Errors: NoRootInDisc, MultipleRoots,
// NewtonDivergence, ZeroOnContour (only if every radius fails that way).
DiscPoint solve_point(const LempertCandidate& c, const DomainPoint& z,
                      const RootSolveConfig& cfg = {});

// Domain samples rejected down to coordinate (resp. disc-parameter) modulus
// <= cap.  For the catalogue candidates the solved value is a holomorphic
// contraction applied to those coordinates, so roots on capped samples stay
// clear of the top contour radius; raw samples cross it about once in 10^3
// draws.  Deterministic for fixed (n, seed).
std::vector<DomainPoint> capped_samples(const DomainModel& d, int n, std::uint64_t seed,
                                        double cap = 0.99);

// Wrap the solver as a LeftInverseSpec::Constructed; eval solves, gradient
// delegates to numeric_gradient with default radius/nodes.
LeftInverseSpec build_inverse(const LempertCandidate& c, const RootSolveConfig& cfg = {});

// Radial Richardson extrapolation of v (and of the pairing v . f') along
// l = (1 - 2^{-k}) l0 for a boundary point l0.  `extends` is a sufficient
// certificate only: false means inconclusive, not a disproof.
struct ExtensionCertificate {
  bool f_extends;
  bool v_finite;
  double pairing_bound;
  bool extends;
  std::vector<double> field_norms;  // |v| along the radial schedule
};

ExtensionCertificate extension_certificate(const LempertCandidate& c, cplx l0,
                                           int schedule_len = 10);

}  // namespace lempert
