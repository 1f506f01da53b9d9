#include "lempert/geodesics.hpp"

#include <cmath>
#include <sstream>

namespace lempert {

namespace {

std::string fmt_cplx(cplx z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

}  // namespace

Multiplier Multiplier::constant(cplx c) {
  if (std::abs(c) > 1.0) throw Error("constant multiplier must have modulus <= 1");
  Multiplier m;
  m.v_ = Constant{c};
  return m;
}

Multiplier Multiplier::identity() {
  Multiplier m;
  m.v_ = Identity{};
  return m;
}

Multiplier Multiplier::blaschke(cplx center) {
  if (std::abs(center) >= 1.0) throw Error("Blaschke center must be interior");
  Multiplier m;
  m.v_ = BlaschkeFactor{center};
  return m;
}

cplx Multiplier::eval(cplx l) const {
  return std::visit(
      [&](const auto& m) -> cplx {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Constant>) return m.c;
        else if constexpr (std::is_same_v<T, Identity>) return l;
        else return (l - m.center) / (1.0 - std::conj(m.center) * l);
      },
      v_);
}

cplx Multiplier::derivative(cplx l) const {
  return std::visit(
      [&](const auto& m) -> cplx {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Constant>) return 0.0;
        else if constexpr (std::is_same_v<T, Identity>) return 1.0;
        else {
          const cplx d = 1.0 - std::conj(m.center) * l;
          return (1.0 - std::norm(m.center)) / (d * d);
        }
      },
      v_);
}

std::string Multiplier::describe() const {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Constant>) return "const(" + fmt_cplx(m.c) + ")";
        else if constexpr (std::is_same_v<T, Identity>) return "identity";
        else return "blaschke(" + fmt_cplx(m.center) + ")";
      },
      v_);
}

bool Multiplier::operator==(const Multiplier& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (std::holds_alternative<Constant>(v_))
    return std::get<Constant>(v_).c == std::get<Constant>(o.v_).c;
  if (std::holds_alternative<BlaschkeFactor>(v_))
    return std::get<BlaschkeFactor>(v_).center == std::get<BlaschkeFactor>(o.v_).center;
  return true;
}

GeodesicSpec GeodesicSpec::diagonal() {
  GeodesicSpec g;
  g.v_ = Diagonal{};
  return g;
}

GeodesicSpec GeodesicSpec::bidisc_graph(Multiplier psi) {
  GeodesicSpec g;
  g.v_ = BidiscGraph{psi};
  return g;
}

GeodesicSpec GeodesicSpec::royal() {
  GeodesicSpec g;
  g.v_ = Royal{};
  return g;
}

GeodesicSpec GeodesicSpec::flat(cplx beta) {
  if (std::abs(beta) >= 1.0) throw Error("flat geodesic parameter must be interior");
  GeodesicSpec g;
  g.v_ = Flat{beta};
  return g;
}

GeodesicSpec GeodesicSpec::ball_family(double t) {
  if (std::abs(t) > 10.0) throw Error("ball family parameter limited to |t| <= 10");
  GeodesicSpec g;
  g.v_ = BallFamily{t};
  return g;
}

GeodesicSpec GeodesicSpec::ball_axis() {
  GeodesicSpec g;
  g.v_ = BallAxis{};
  return g;
}

DomainPoint GeodesicSpec::eval(cplx l) const {
  return std::visit(
      [&](const auto& g) -> DomainPoint {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Diagonal>) return {l, l};
        else if constexpr (std::is_same_v<T, BidiscGraph>) return {l, l * g.psi.eval(l)};
        else if constexpr (std::is_same_v<T, Royal>) return {2.0 * l, l * l};
        else if constexpr (std::is_same_v<T, Flat>) return {g.beta + std::conj(g.beta) * l, l};
        else if constexpr (std::is_same_v<T, BallFamily>) {
          const double n = 1.0 + g.t * g.t;
          return {(g.t * g.t + l) / n, g.t * (l - 1.0) / n};
        } else
          return {l, cplx(0.0)};
      },
      v_);
}

C2 GeodesicSpec::derivative(cplx l) const {
  return std::visit(
      [&](const auto& g) -> C2 {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Diagonal>) return {cplx(1.0), cplx(1.0)};
        else if constexpr (std::is_same_v<T, BidiscGraph>)
          return {cplx(1.0), g.psi.eval(l) + l * g.psi.derivative(l)};
        else if constexpr (std::is_same_v<T, Royal>) return {cplx(2.0), 2.0 * l};
        else if constexpr (std::is_same_v<T, Flat>) return {std::conj(g.beta), cplx(1.0)};
        else if constexpr (std::is_same_v<T, BallFamily>) {
          const double n = 1.0 + g.t * g.t;
          return {cplx(1.0 / n), cplx(g.t / n)};
        } else
          return {cplx(1.0), cplx(0.0)};
      },
      v_);
}

DomainModel GeodesicSpec::codomain() const {
  return std::visit(
      [](const auto& g) -> DomainModel {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Diagonal> || std::is_same_v<T, BidiscGraph>)
          return DomainModel(DomainKind::Bidisc);
        else if constexpr (std::is_same_v<T, Royal> || std::is_same_v<T, Flat>)
          return DomainModel(DomainKind::SymBidisc);
        else
          return DomainModel(DomainKind::Ball2);
      },
      v_);
}

std::string GeodesicSpec::describe() const {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Diagonal>) return "diagonal";
        else if constexpr (std::is_same_v<T, BidiscGraph>) return "graph(psi=" + g.psi.describe() + ")";
        else if constexpr (std::is_same_v<T, Royal>) return "royal";
        else if constexpr (std::is_same_v<T, Flat>) return "flat(beta=" + fmt_cplx(g.beta) + ")";
        else if constexpr (std::is_same_v<T, BallFamily>) {
          std::ostringstream os;
          os << "ball(t=" << g.t << ")";
          return os.str();
        } else
          return "ball-axis";
      },
      v_);
}

bool GeodesicSpec::operator==(const GeodesicSpec& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (std::holds_alternative<BidiscGraph>(v_))
    return std::get<BidiscGraph>(v_).psi == std::get<BidiscGraph>(o.v_).psi;
  if (std::holds_alternative<Flat>(v_))
    return std::get<Flat>(v_).beta == std::get<Flat>(o.v_).beta;
  if (std::holds_alternative<BallFamily>(v_))
    return std::get<BallFamily>(v_).t == std::get<BallFamily>(o.v_).t;
  return true;
}

}  // namespace lempert
