#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "lempert/algebra.hpp"
#include "lempert/geodesics.hpp"
#include "lempert/inverses.hpp"

namespace lempert {

/*
 * Holomorphic covector field along a geodesic, l -> v(l) in C^2.  A field is
 * "normalized" against a geodesic f once v(l) . f'(l) = 1; only normalized
 * fields may be combined convexly, and the base geodesic is remembered to
 * keep combinations honest.
 */
class CovectorField {
 public:
  // closed-form field
  static CovectorField analytic(std::function<C2(cplx)> fn, std::string label);
  // l -> gradient of G at f(l)
  static CovectorField pulled_back(LeftInverseSpec inverse, GeodesicSpec geodesic);

  C2 eval(cplx l) const;
  bool normalized() const { return normalized_; }
  const std::optional<GeodesicSpec>& base() const { return base_; }
  std::string describe() const;

 private:
  friend CovectorField normalize_field(const CovectorField&, const GeodesicSpec&, int);
  friend CovectorField combine(const CovectorField&, const CovectorField&, double);

  std::function<C2(cplx)> fn_;
  std::string label_;
  bool normalized_ = false;
  std::optional<GeodesicSpec> base_;
};

// Pulled-back field of a left inverse: l -> grad G(f(l)).
CovectorField field_from_inverse(const LeftInverseSpec& inverse, const GeodesicSpec& geodesic);

// Divide pointwise by the pairing v . f'; checks |pairing| >= 1e-8 on a
// radial-angular grid (DegeneratePairing otherwise).  A field whose pairing
// is already identically 1 is returned unchanged apart from the flag.
CovectorField normalize_field(const CovectorField& v, const GeodesicSpec& f,
                              int grid_size = 64);

// (1-t) v0 + t v1; both fields must be normalized against the same geodesic
// (MixedGeodesics otherwise).  The result is again normalized.
CovectorField combine(const CovectorField& v0, const CovectorField& v1, double t);

}  // namespace lempert
