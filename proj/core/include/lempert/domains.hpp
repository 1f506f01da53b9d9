#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lempert/algebra.hpp"
#include "lempert/errors.hpp"
#include "lempert/hyperbolic.hpp"
#include "lempert/rng.hpp"

namespace lempert {

enum class DomainKind { UnitDisc, Bidisc, Ball2, SymBidisc };

// Point of one of the model domains; dimension 1 (disc) or 2.  For the
// symmetrized bidisc the coordinates are (s, p) = (sum, product).
class DomainPoint {
 public:
  DomainPoint() : dim_(1), c_{cplx(0.0), cplx(0.0)} {}
  explicit DomainPoint(cplx z1) : dim_(1), c_{z1, cplx(0.0)} {}
  DomainPoint(cplx z1, cplx z2) : dim_(2), c_{z1, z2} {}

  int dim() const { return dim_; }
  cplx z1() const { return c_[0]; }
  cplx z2() const { return c_[1]; }
  cplx coord(int j) const { return c_[j]; }

  C2 as_c2() const { return c_; }  // second coordinate is 0 for dim 1

 private:
  int dim_;
  C2 c_;
};

struct MembershipReport {
  bool inside;
  double margin;  // signed distance-like slack; positive iff inside
};

// One of the four model domains: unit disc D, bidisc D^2, Euclidean ball B2,
// symmetrized bidisc G2 = {(l1+l2, l1*l2) : l1, l2 in D}.
class DomainModel {
 public:
  explicit DomainModel(DomainKind kind) : kind_(kind) {}

  DomainKind kind() const { return kind_; }
  int dimension() const { return kind_ == DomainKind::UnitDisc ? 1 : 2; }
  std::string name() const;

  bool contains(const DomainPoint& z) const { return membership(z).inside; }
  MembershipReport membership(const DomainPoint& z) const;

  // n points strictly inside, deterministic in seed
  std::vector<DomainPoint> sample(int n, std::uint64_t seed) const;

  // radius r such that the polydisc of radius r around z stays inside;
  // closed forms except SymBidisc (bisection over sampled coordinate circles,
  // shrunk by 0.9)
  double boundary_distance_estimate(const DomainPoint& z) const;

 private:
  DomainKind kind_;
};

// (l1, l2) -> (l1 + l2, l1 * l2) in G2
DomainPoint symmetrize(DiscPoint l1, DiscPoint l2);

// Roots of x^2 - s x + p for (s,p) in G2; OutsideDomain if either root
// leaves the disc.  Unordered.
std::array<DiscPoint, 2> pair_from_point(const DomainPoint& sp);

// Membership in A = C \ ((-inf,-1] u [1,inf)) with a safety margin:
// returns false iff |Im w| <= margin and |Re w| >= 1 - margin.
bool region_A_contains(cplx w, double margin);

// distance from w to the two excluded rays (+inf if nowhere near)
double region_A_ray_margin(cplx w);

}  // namespace lempert
