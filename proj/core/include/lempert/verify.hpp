#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lempert/covector.hpp"
#include "lempert/domains.hpp"
#include "lempert/geodesics.hpp"
#include "lempert/hyperbolic.hpp"
#include "lempert/inverses.hpp"
#include "lempert/report.hpp"

namespace lempert {
namespace verify {

// Boundary-approach paths for the probes.
class PathSpec {
 public:
  struct RoyalApproach { cplx l0; };     // f_royal((1 - d) l0), |l0| = 1
  struct LinearG2 { double c; };         // (s, p) = (2 - d, 1 - c d)
  struct BallVertical { cplx a; };       // (a sqrt(1 - r^2), r), r = 1 - d

  static PathSpec royal_approach(cplx l0);
  static PathSpec linear_g2(double c);
  static PathSpec ball_vertical(cplx a);

  DomainPoint at(double delta) const;
  DomainModel domain() const;
  std::string describe() const;

 private:
  std::variant<RoyalApproach, LinearG2, BallVertical> v_;
};

// max over a radial-angular grid of |a(G(f(l))) - l|; with fit_automorphism
// the automorphism a is fitted through three grid points (else identity).
// The report also carries the forward map G o f = a^{-1} when fitted.
VerificationReport left_inverse_residual(const GeodesicSpec& f, const LeftInverseSpec& G,
                                         int grid_size, bool fit_automorphism,
                                         double tolerance = 1e-10);

// sup of |G| over n domain samples; pass iff strictly below 1
VerificationReport range_supremum(const LeftInverseSpec& G, const DomainModel& d, int n,
                                  std::uint64_t seed);

// Moves from f(l0) along the kernel direction of grad G (steps tau) must not
// change the value of G; moves along the transversal direction must.
VerificationReport fiber_affinity(const GeodesicSpec& f, const LeftInverseSpec& G,
                                  int grid_size, const std::vector<double>& steps);

// max projective deviation between kernel directions of v over grid pairs
VerificationReport kernel_constancy(const CovectorField& v, int grid_size);

// max over samples z of |(z - f(G(z))) . v(G(z))|
VerificationReport duality_residual(const GeodesicSpec& f, const CovectorField& v,
                                    const LeftInverseSpec& G, int n, std::uint64_t seed,
                                    double tolerance = 1e-10);

// Values of G along a boundary path with the geometric schedule d_k = 2^{-k};
// Richardson-extrapolated limit plus a spread-based error estimate.  Reports
// only; expectations are applied by callers.
struct ProbeResult {
  VerificationReport report;
  std::vector<cplx> sequence;
  cplx limit;
  double error_estimate;
};

ProbeResult boundary_probe(const LeftInverseSpec& G, const PathSpec& path, int schedule_len);

// beta(s, p) = s/(1 + p) against the slit plane, alpha(l) = l/(1 + sqrt(1 - l^2))
// against the disc.
cplx beta_map(const DomainPoint& sp);
cplx alpha_map(cplx w);
VerificationReport beta_alpha_checks(int n, std::uint64_t seed);

// Recover h = (s - 2 Psi)/(2p - s Psi) from a left inverse of the royal
// geodesic; requires Psi(royal(l)) = l on a probe grid first (NotALeftInverse
// otherwise) and ignores samples with |2p - s Psi| <= 1e-6
// (AllSamplesDegenerate if none survive).
VerificationReport royal_h_extract(const LeftInverseSpec& Psi, int n, std::uint64_t seed);

// Invariance of bidisc pseudo-balls under coordinatewise Moebius rescaling:
// membership at level rho*R agrees with membership at level rho computed
// inside the sub-bidisc of radius R.  Near-boundary samples (margin 1e-9)
// are excluded from the agreement rate.
VerificationReport kobayashi_ball_identity(const DomainPoint& center, double R, double rho,
                                           int n, std::uint64_t seed);

}  // namespace verify
}  // namespace lempert
