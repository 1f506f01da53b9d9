#include "lempert/domains.hpp"

#include <algorithm>
#include <cmath>

namespace lempert {

namespace {

void check_dim(const DomainModel& d, const DomainPoint& z) {
  if (z.dim() != d.dimension())
    throw DimensionMismatch("point dimension does not match domain " + d.name());
}

double sym_bidisc_margin(cplx s, cplx p) {
  const auto roots = quadratic_roots(s, p);
  return 1.0 - std::max(std::abs(roots[0]), std::abs(roots[1]));
}

}  // namespace

std::string DomainModel::name() const {
  switch (kind_) {
    case DomainKind::UnitDisc: return "disc";
    case DomainKind::Bidisc: return "bidisc";
    case DomainKind::Ball2: return "ball";
    case DomainKind::SymBidisc: return "symbidisc";
  }
  return "?";
}

MembershipReport DomainModel::membership(const DomainPoint& z) const {
  check_dim(*this, z);
  switch (kind_) {
    case DomainKind::UnitDisc: {
      const double m = 1.0 - std::abs(z.z1());
      return {m > 0.0, m};
    }
    case DomainKind::Bidisc: {
      const double m = 1.0 - std::max(std::abs(z.z1()), std::abs(z.z2()));
      return {m > 0.0, m};
    }
    case DomainKind::Ball2: {
      const double m = 1.0 - std::sqrt(std::norm(z.z1()) + std::norm(z.z2()));
      return {m > 0.0, m};
    }
    case DomainKind::SymBidisc: {
      const double m = sym_bidisc_margin(z.z1(), z.z2());
      return {m > 0.0, m};
    }
  }
  return {false, 0.0};
}

std::vector<DomainPoint> DomainModel::sample(int n, std::uint64_t seed) const {
  SampleRng rng(seed);
  std::vector<DomainPoint> out;
  out.reserve(n);
  while (static_cast<int>(out.size()) < n) {
    switch (kind_) {
      case DomainKind::UnitDisc:
        out.emplace_back(rng.in_disc());
        break;
      case DomainKind::Bidisc:
        out.emplace_back(rng.in_disc(), rng.in_disc());
        break;
      case DomainKind::Ball2: {
        const cplx a = rng.in_disc(), b = rng.in_disc();
        if (std::norm(a) + std::norm(b) < 1.0) out.emplace_back(a, b);
        break;
      }
      case DomainKind::SymBidisc: {
        const cplx l1 = rng.in_disc(), l2 = rng.in_disc();
        out.emplace_back(l1 + l2, l1 * l2);
        break;
      }
    }
  }
  return out;
}

double DomainModel::boundary_distance_estimate(const DomainPoint& z) const {
  check_dim(*this, z);
  if (!contains(z)) throw OutsideDomain("no interior slack outside " + name());
  switch (kind_) {
    case DomainKind::UnitDisc:
      return 1.0 - std::abs(z.z1());
    case DomainKind::Bidisc:
      return 1.0 - std::max(std::abs(z.z1()), std::abs(z.z2()));
    case DomainKind::Ball2:
      // Euclidean slack split evenly over the two coordinates
      return (1.0 - std::sqrt(std::norm(z.z1()) + std::norm(z.z2()))) / std::sqrt(2.0);
    case DomainKind::SymBidisc:
      break;
  }

  // SymBidisc: no usable closed form.  Bisect on the radius for which the
  // sampled coordinate circles around z stay inside, then shrink.
  if (!contains(z)) return 0.0;
  constexpr int kCircle = 64;
  const auto circles_inside = [&](double r) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < kCircle; ++k) {
        const double th = 2.0 * M_PI * k / kCircle;
        const cplx step = std::polar(r, th);
        const DomainPoint probe = j == 0 ? DomainPoint(z.z1() + step, z.z2())
                                         : DomainPoint(z.z1(), z.z2() + step);
        if (!contains(probe)) return false;
      }
    }
    return true;
  };
  double lo = 0.0, hi = 3.0;  // G2 fits inside {|s|<2} x {|p|<1}
  if (circles_inside(hi)) return 0.9 * hi;
  for (int it = 0; it < 48; ++it) {
    const double mid = 0.5 * (lo + hi);
    (circles_inside(mid) ? lo : hi) = mid;
  }
  return 0.9 * lo;
}

DomainPoint symmetrize(DiscPoint l1, DiscPoint l2) {
  return DomainPoint(l1.value() + l2.value(), l1.value() * l2.value());
}

std::array<DiscPoint, 2> pair_from_point(const DomainPoint& sp) {
  if (sp.dim() != 2) throw DimensionMismatch("pair_from_point needs an (s, p) point");
  const auto roots = quadratic_roots(sp.z1(), sp.z2());
  if (std::abs(roots[0]) >= 1.0 - 1e-15 || std::abs(roots[1]) >= 1.0 - 1e-15)
    throw OutsideDomain("point is not in the symmetrized bidisc");
  return {DiscPoint(roots[0]), DiscPoint(roots[1])};
}

bool region_A_contains(cplx w, double margin) {
  return !(std::abs(w.imag()) <= margin && std::abs(w.real()) >= 1.0 - margin);
}

double region_A_ray_margin(cplx w) {
  const auto dist_to_ray = [&](double sign) {
    // ray {x*sign : x >= 1} on the real axis
    const double x = w.real() * sign;
    if (x >= 1.0) return std::abs(w.imag());
    return std::abs(w - cplx(sign, 0.0));
  };
  return std::min(dist_to_ray(1.0), dist_to_ray(-1.0));
}

}  // namespace lempert
