#include "lempert/inverses.hpp"

#include <cmath>
#include <sstream>

#include "lempert/contour.hpp"

namespace lempert {

namespace {

constexpr double kDenomFloor = 1e-14;

void check_denominator(cplx d, const char* what) {
  if (std::abs(d) < kDenomFloor) {
    std::ostringstream os;
    os << what << " denominator underflow (|d| = " << std::abs(d) << ")";
    throw DenominatorUnderflow(os.str());
  }
}

// principal sqrt of (1+p)^2 - s^2; on G2 this equals (1-l1^2)(1-l2^2), a
// product of two right-half-plane factors, so the branch cut is never hit
cplx phi_root(cplx s, cplx p) {
  const cplx q = (1.0 + p) * (1.0 + p) - s * s;
  if (q.imag() == 0.0 && q.real() <= 0.0)
    throw BranchFailure("(1+p)^2 - s^2 landed on the branch cut (-inf, 0]");
  return std::sqrt(q);
}

cplx ball_root(cplx z2) {
  const cplx q = 1.0 - z2 * z2;
  if (q.imag() == 0.0 && q.real() <= 0.0)
    throw BranchFailure("1 - z2^2 landed on the branch cut (-inf, 0]");
  return std::sqrt(q);
}

std::string fmt_cplx(cplx z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

}  // namespace

HSpec HSpec::constant(cplx c) {
  if (std::abs(c) > 1.0) throw Error("h must map the bidisc into the closed disc");
  HSpec h;
  h.v_ = Constant{c};
  return h;
}

HSpec HSpec::coordinate(int axis) {
  if (axis != 1 && axis != 2) throw Error("coordinate axis must be 1 or 2");
  HSpec h;
  h.v_ = Coordinate{axis};
  return h;
}

HSpec HSpec::product() {
  HSpec h;
  h.v_ = Product{};
  return h;
}

cplx HSpec::eval(const DomainPoint& z) const {
  return std::visit(
      [&](const auto& h) -> cplx {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, Constant>) return h.c;
        else if constexpr (std::is_same_v<T, Coordinate>) return h.axis == 1 ? z.z1() : z.z2();
        else return z.z1() * z.z2();
      },
      v_);
}

C2 HSpec::gradient(const DomainPoint& z) const {
  return std::visit(
      [&](const auto& h) -> C2 {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, Constant>) return {cplx(0.0), cplx(0.0)};
        else if constexpr (std::is_same_v<T, Coordinate>)
          return h.axis == 1 ? C2{cplx(1.0), cplx(0.0)} : C2{cplx(0.0), cplx(1.0)};
        else return {z.z2(), z.z1()};
      },
      v_);
}

std::string HSpec::describe() const {
  return std::visit(
      [](const auto& h) -> std::string {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, Constant>) return "const(" + fmt_cplx(h.c) + ")";
        else if constexpr (std::is_same_v<T, Coordinate>)
          return h.axis == 1 ? "coord(1)" : "coord(2)";
        else return "product";
      },
      v_);
}

LeftInverseSpec LeftInverseSpec::bidisc_projection(int axis) {
  if (axis != 1 && axis != 2) throw Error("projection axis must be 1 or 2");
  LeftInverseSpec g;
  g.v_ = BidiscProjection{axis};
  return g;
}

LeftInverseSpec LeftInverseSpec::bidisc_affine(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("affine weight must lie in [0, 1]");
  LeftInverseSpec g;
  g.v_ = BidiscAffine{t};
  return g;
}

LeftInverseSpec LeftInverseSpec::bidisc_family(double t, HSpec h) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("family weight must lie in [0, 1]");
  LeftInverseSpec g;
  g.v_ = BidiscFamily{t, h};
  return g;
}

LeftInverseSpec LeftInverseSpec::psi_omega(cplx omega) {
  if (std::abs(omega) > 1.0 + 1e-14) throw Error("Psi parameter must have |omega| <= 1");
  LeftInverseSpec g;
  g.v_ = PsiOmega{omega};
  return g;
}

LeftInverseSpec LeftInverseSpec::royal_minus_psi(cplx omega) {
  if (std::abs(std::abs(omega) - 1.0) > 1e-14)
    throw Error("royal left inverses need |omega| = 1");
  LeftInverseSpec g;
  g.v_ = RoyalMinusPsi{omega};
  return g;
}

LeftInverseSpec LeftInverseSpec::royal_phi() {
  LeftInverseSpec g;
  g.v_ = RoyalPhi{};
  return g;
}

LeftInverseSpec LeftInverseSpec::ball_simple() {
  LeftInverseSpec g;
  g.v_ = BallSimple{};
  return g;
}

LeftInverseSpec LeftInverseSpec::ball_refined() {
  LeftInverseSpec g;
  g.v_ = BallRefined{};
  return g;
}

LeftInverseSpec LeftInverseSpec::constructed(std::shared_ptr<const ConstructedInverse> impl) {
  if (!impl) throw Error("constructed inverse requires an implementation");
  LeftInverseSpec g;
  g.v_ = Constructed{std::move(impl)};
  return g;
}

bool LeftInverseSpec::is_constructed() const {
  return std::holds_alternative<Constructed>(v_);
}

cplx LeftInverseSpec::eval(const DomainPoint& z) const {
  if (z.dim() != 2) throw DimensionMismatch("left inverses act on two-dimensional domains");
  return std::visit(
      [&](const auto& g) -> cplx {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, BidiscProjection>) {
          return g.axis == 1 ? z.z1() : z.z2();
        } else if constexpr (std::is_same_v<T, BidiscAffine>) {
          return g.t * z.z1() + (1.0 - g.t) * z.z2();
        } else if constexpr (std::is_same_v<T, BidiscFamily>) {
          const cplx h = g.h.eval(z);
          const cplx den = 1.0 - ((1.0 - g.t) * z.z1() + g.t * z.z2()) * h;
          check_denominator(den, "bidisc family");
          return (g.t * z.z1() + (1.0 - g.t) * z.z2() - z.z1() * z.z2() * h) / den;
        } else if constexpr (std::is_same_v<T, PsiOmega>) {
          const cplx den = 2.0 - std::conj(g.omega) * z.z1();
          check_denominator(den, "Psi");
          return (2.0 * z.z2() - g.omega * z.z1()) / den;
        } else if constexpr (std::is_same_v<T, RoyalMinusPsi>) {
          const cplx den = 2.0 - std::conj(g.omega) * z.z1();
          check_denominator(den, "Psi");
          return (z.z1() - 2.0 * std::conj(g.omega) * z.z2()) / den;
        } else if constexpr (std::is_same_v<T, RoyalPhi>) {
          const cplx w = phi_root(z.z1(), z.z2());
          const cplx den = 1.0 + z.z2() + w;
          check_denominator(den, "Phi");
          return z.z1() / den;
        } else if constexpr (std::is_same_v<T, BallSimple>) {
          const cplx w = ball_root(z.z2());
          check_denominator(w, "sqrt(1 - z2^2)");
          return z.z1() / w;
        } else if constexpr (std::is_same_v<T, BallRefined>) {
          const cplx den = 2.0 * (1.0 - z.z1()) - z.z2() * z.z2();
          check_denominator(den, "refined ball inverse");
          return (2.0 * z.z1() * (1.0 - z.z1()) - z.z2() * z.z2()) / den;
        } else {
          return g.impl->eval(z);
        }
      },
      v_);
}

C2 LeftInverseSpec::gradient(const DomainPoint& z) const {
  if (z.dim() != 2) throw DimensionMismatch("left inverses act on two-dimensional domains");
  return std::visit(
      [&](const auto& g) -> C2 {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, BidiscProjection>) {
          return g.axis == 1 ? C2{cplx(1.0), cplx(0.0)} : C2{cplx(0.0), cplx(1.0)};
        } else if constexpr (std::is_same_v<T, BidiscAffine>) {
          return {cplx(g.t), cplx(1.0 - g.t)};
        } else if constexpr (std::is_same_v<T, BidiscFamily>) {
          // quotient rule for N/D with
          //   N = t z1 + (1-t) z2 - z1 z2 h,  D = 1 - ((1-t) z1 + t z2) h
          const cplx z1 = z.z1(), z2 = z.z2();
          const cplx h = g.h.eval(z);
          const C2 dh = g.h.gradient(z);
          const cplx mix = (1.0 - g.t) * z1 + g.t * z2;
          const cplx N = g.t * z1 + (1.0 - g.t) * z2 - z1 * z2 * h;
          const cplx D = 1.0 - mix * h;
          check_denominator(D, "bidisc family");
          const cplx N1 = g.t - z2 * h - z1 * z2 * dh[0];
          const cplx N2 = (1.0 - g.t) - z1 * h - z1 * z2 * dh[1];
          const cplx D1 = -((1.0 - g.t) * h + mix * dh[0]);
          const cplx D2 = -(g.t * h + mix * dh[1]);
          return {(N1 * D - N * D1) / (D * D), (N2 * D - N * D2) / (D * D)};
        } else if constexpr (std::is_same_v<T, PsiOmega>) {
          const cplx den = 2.0 - std::conj(g.omega) * z.z1();
          check_denominator(den, "Psi");
          return {2.0 * (std::conj(g.omega) * z.z2() - g.omega) / (den * den), 2.0 / den};
        } else if constexpr (std::is_same_v<T, RoyalMinusPsi>) {
          const cplx wbar = std::conj(g.omega);
          const cplx den = 2.0 - wbar * z.z1();
          check_denominator(den, "Psi");
          const cplx pref = 2.0 / (den * den);
          return {pref * (wbar * g.omega - wbar * wbar * z.z2()),
                  pref * (wbar * wbar * z.z1() - 2.0 * wbar)};
        } else if constexpr (std::is_same_v<T, RoyalPhi>) {
          const cplx s = z.z1(), p = z.z2();
          const cplx w = phi_root(s, p);
          const cplx den = 1.0 + p + w;
          check_denominator(den, "Phi");
          check_denominator(w, "Phi root");
          return {(den * w + s * s) / (w * den * den), -s / (w * den)};
        } else if constexpr (std::is_same_v<T, BallSimple>) {
          const cplx w = ball_root(z.z2());
          check_denominator(w, "sqrt(1 - z2^2)");
          return {1.0 / w, z.z1() * z.z2() / (w * w * w)};
        } else if constexpr (std::is_same_v<T, BallRefined>) {
          const cplx z1 = z.z1(), z2 = z.z2();
          const cplx N = 2.0 * z1 * (1.0 - z1) - z2 * z2;
          const cplx D = 2.0 * (1.0 - z1) - z2 * z2;
          check_denominator(D, "refined ball inverse");
          const cplx N1 = 2.0 - 4.0 * z1, D1 = -2.0;
          const cplx N2 = -2.0 * z2, D2 = -2.0 * z2;
          return {(N1 * D - N * D1) / (D * D), (N2 * D - N * D2) / (D * D)};
        } else {
          return g.impl->gradient(z);
        }
      },
      v_);
}

DomainModel LeftInverseSpec::domain() const {
  return std::visit(
      [](const auto& g) -> DomainModel {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, BidiscProjection> || std::is_same_v<T, BidiscAffine> ||
                      std::is_same_v<T, BidiscFamily>)
          return DomainModel(DomainKind::Bidisc);
        else if constexpr (std::is_same_v<T, PsiOmega> || std::is_same_v<T, RoyalMinusPsi> ||
                          std::is_same_v<T, RoyalPhi>)
          return DomainModel(DomainKind::SymBidisc);
        else if constexpr (std::is_same_v<T, BallSimple> || std::is_same_v<T, BallRefined>)
          return DomainModel(DomainKind::Ball2);
        else
          return g.impl->domain();
      },
      v_);
}

std::string LeftInverseSpec::describe() const {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, BidiscProjection>) {
          return g.axis == 1 ? "proj(1)" : "proj(2)";
        } else if constexpr (std::is_same_v<T, BidiscAffine>) {
          std::ostringstream os;
          os << "affine(t=" << g.t << ")";
          return os.str();
        } else if constexpr (std::is_same_v<T, BidiscFamily>) {
          std::ostringstream os;
          os << "family(t=" << g.t << ",h=" << g.h.describe() << ")";
          return os.str();
        } else if constexpr (std::is_same_v<T, PsiOmega>) {
          return "psi(omega=" + fmt_cplx(g.omega) + ")";
        } else if constexpr (std::is_same_v<T, RoyalMinusPsi>) {
          return "minus-psi(omega=" + fmt_cplx(g.omega) + ")";
        } else if constexpr (std::is_same_v<T, RoyalPhi>) {
          return "phi";
        } else if constexpr (std::is_same_v<T, BallSimple>) {
          return "ball-simple";
        } else if constexpr (std::is_same_v<T, BallRefined>) {
          return "ball-refined";
        } else {
          return g.impl->describe();
        }
      },
      v_);
}

C2 numeric_gradient(const std::function<cplx(const DomainPoint&)>& evaluator,
                    const DomainModel& d, const DomainPoint& z, double radius, int nodes) {
  if (!valid_contour_nodes(nodes)) throw Error("contour nodes must be a power of two >= 16");
  const double bde = d.boundary_distance_estimate(z);
  if (radius > bde + 1e-12) {
    std::ostringstream os;
    os << "contour radius " << radius << " exceeds the boundary distance estimate " << bde;
    throw RadiusTooLarge(os.str());
  }
  const auto partial = [&](int j) {
    return circle_derivative(
        [&](cplx w) {
          return evaluator(j == 0 ? DomainPoint(w, z.z2()) : DomainPoint(z.z1(), w));
        },
        j == 0 ? z.z1() : z.z2(), radius, nodes);
  };
  return {partial(0), partial(1)};
}

C2 numeric_gradient(const std::function<cplx(const DomainPoint&)>& evaluator,
                    const DomainModel& d, const DomainPoint& z) {
  return numeric_gradient(evaluator, d, z, 0.5 * d.boundary_distance_estimate(z), 64);
}

}  // namespace lempert
