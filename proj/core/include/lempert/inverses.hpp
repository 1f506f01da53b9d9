#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "lempert/algebra.hpp"
#include "lempert/domains.hpp"

namespace lempert {

// Auxiliary multiplier h : D^2 -> closed D appearing in the bidisc family of
// left inverses.
class HSpec {
 public:
  struct Constant { cplx c; };
  struct Coordinate { int axis; };  // z1 or z2
  struct Product {};                // z1 * z2

  static HSpec constant(cplx c);
  static HSpec coordinate(int axis);
  static HSpec product();

  cplx eval(const DomainPoint& z) const;
  C2 gradient(const DomainPoint& z) const;
  std::string describe() const;

 private:
  std::variant<Constant, Coordinate, Product> v_;
};

// Implementation hook for inverses produced by the solver rather than by a
// closed formula.
struct ConstructedInverse {
  virtual ~ConstructedInverse() = default;
  virtual cplx eval(const DomainPoint& z) const = 0;
  virtual C2 gradient(const DomainPoint& z) const = 0;
  virtual DomainModel domain() const = 0;
  virtual std::string describe() const = 0;
};

/*
 * Catalogue of holomorphic maps G : domain -> D that act as left inverses to
 * the geodesic catalogue.
 *
 *   BidiscProjection  G(z) = z_axis
 *   BidiscAffine      G(z) = t z1 + (1-t) z2,  t in [0,1]
 *   BidiscFamily      G(z) = (t z1 + (1-t) z2 - z1 z2 h(z)) / (1 - ((1-t) z1 + t z2) h(z))
 *   PsiOmega          Psi_w(s,p) = (2p - w s)/(2 - conj(w) s),  |w| <= 1
 *   RoyalMinusPsi     -conj(w) Psi_w,  |w| = 1           (left inverse of the royal geodesic)
 *   RoyalPhi          Phi(s,p) = s / (1 + p + sqrt((1+p)^2 - s^2)),  principal branch
 *   BallSimple        z1 / sqrt(1 - z2^2)
 *   BallRefined       (2 z1 (1-z1) - z2^2) / (2 (1-z1) - z2^2)
 *   Constructed       solver-built (see construction.hpp)
 */
class LeftInverseSpec {
 public:
  struct BidiscProjection { int axis; };
  struct BidiscAffine { double t; };
  struct BidiscFamily { double t; HSpec h; };
  struct PsiOmega { cplx omega; };
  struct RoyalMinusPsi { cplx omega; };
  struct RoyalPhi {};
  struct BallSimple {};
  struct BallRefined {};
  struct Constructed { std::shared_ptr<const ConstructedInverse> impl; };

  static LeftInverseSpec bidisc_projection(int axis);
  static LeftInverseSpec bidisc_affine(double t);
  static LeftInverseSpec bidisc_family(double t, HSpec h);
  static LeftInverseSpec psi_omega(cplx omega);        // |omega| <= 1
  static LeftInverseSpec royal_minus_psi(cplx omega);  // |omega| = 1
  static LeftInverseSpec royal_phi();
  static LeftInverseSpec ball_simple();
  static LeftInverseSpec ball_refined();
  static LeftInverseSpec constructed(std::shared_ptr<const ConstructedInverse> impl);

  cplx eval(const DomainPoint& z) const;
  C2 gradient(const DomainPoint& z) const;  // closed form for every catalogue variant
  DomainModel domain() const;
  std::string describe() const;
  bool is_constructed() const;

 private:
  std::variant<BidiscProjection, BidiscAffine, BidiscFamily, PsiOmega, RoyalMinusPsi,
               RoyalPhi, BallSimple, BallRefined, Constructed>
      v_;
};

// Gradient by one-dimensional contour differentiation per coordinate.
// Preconditions: radius <= boundary_distance_estimate(z) (else RadiusTooLarge),
// nodes a power of two >= 16.  Defaults: half the boundary-distance estimate,
// 64 nodes.
C2 numeric_gradient(const std::function<cplx(const DomainPoint&)>& evaluator,
                    const DomainModel& d, const DomainPoint& z, double radius, int nodes);
C2 numeric_gradient(const std::function<cplx(const DomainPoint&)>& evaluator,
                    const DomainModel& d, const DomainPoint& z);

}  // namespace lempert
