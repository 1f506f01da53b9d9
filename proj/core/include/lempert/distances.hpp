#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "lempert/domains.hpp"
#include "lempert/report.hpp"

namespace lempert {

// Both distances are reported on the tanh scale (pseudohyperbolic for the
// disc), so values always lie in [0, 1).
struct DistanceResult {
  double value_star = 0.0;
  std::string method;
  std::map<std::string, double> details;  // maximizer angle, active coordinate, ...
};

// Analytic disc through the two query points, normalized so that
// map(0) = w and map(reach) = z with reach = value_star >= 0.
struct DiscMapWitness {
  std::function<DomainPoint(cplx)> map;
  double reach = 0.0;
  std::string form;
};

struct LempertResult {
  DistanceResult base;
  std::optional<DiscMapWitness> witness;
};

// Involutive ball automorphism swapping a and the origin.
C2 ball_mobius(const C2& a, const C2& z);

DistanceResult caratheodory_star(const DomainModel& d, const DomainPoint& w,
                                 const DomainPoint& z);

LempertResult lempert_star(const DomainModel& d, const DomainPoint& w, const DomainPoint& z);

// Over sampled pairs (plus royal and flat pairs for the symmetrized bidisc),
// checks c* <= l* + 1e-9 everywhere and |c* - l*| < tolerance wherever an
// explicit witness disc exists; witness discs are re-evaluated at their
// nominal preimages.
VerificationReport distance_consistency(const DomainModel& d, int n_pairs, std::uint64_t seed,
                                        double tolerance = 1e-8);

}  // namespace lempert
