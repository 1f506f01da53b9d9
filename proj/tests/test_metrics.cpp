#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "lempert/distances.hpp"
#include "lempert/domains.hpp"
#include "lempert/errors.hpp"
#include "lempert/geodesics.hpp"
#include "lempert/hyperbolic.hpp"
#include "lempert/rng.hpp"

using namespace lempert;

namespace {

double disc_m(cplx a, cplx b) { return pseudo_distance(DiscPoint(a), DiscPoint(b)); }

cplx psi_value(const DomainPoint& sp, cplx omega) {
  return (2.0 * sp.z2() - omega * sp.z1()) / (2.0 - std::conj(omega) * sp.z1());
}

double point_gap(const DomainPoint& a, const DomainPoint& b) {
  return std::max(std::abs(a.z1() - b.z1()), std::abs(a.z2() - b.z2()));
}

// independent re-implementation of the Psi supremum at doubled angular
// resolution, used to cross-check the library's optimizer
double psi_sup_reference(const DomainPoint& w, const DomainPoint& z) {
  const auto gap = [&](double th) {
    const cplx omega = std::polar(1.0, th);
    return disc_m(psi_value(w, omega), psi_value(z, omega));
  };
  const int grid = 512;
  const double tau = 6.283185307179586;
  int best = 0;
  double best_val = -1.0;
  for (int k = 0; k < grid; ++k) {
    const double v = gap(tau * k / grid);
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  double a = tau * (best - 1) / grid, b = tau * (best + 1) / grid;
  const double invphi = 0.6180339887498948482;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double gc = gap(c), gd = gap(d);
  while (b - a > 1e-10) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - invphi * (b - a);
      gc = gap(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + invphi * (b - a);
      gd = gap(d);
    }
  }
  return gap(0.5 * (a + b));
}

}  // namespace

TEST_CASE("Caratheodory distance, pinned values") {
  const DomainModel disc(DomainKind::UnitDisc), bidisc(DomainKind::Bidisc),
      ball(DomainKind::Ball2), g2(DomainKind::SymBidisc);

  const auto d0 = caratheodory_star(disc, DomainPoint(cplx(0.0)), DomainPoint(cplx(0.5)));
  CHECK(d0.value_star == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d0.method == "mobius");

  const auto b0 = caratheodory_star(bidisc, {cplx(0.0), cplx(0.0)}, {cplx(0.2), cplx(0.6)});
  CHECK(b0.value_star == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(b0.method == "coordinate-max");
  CHECK(b0.details.at("coordinate") == 2.0);

  const auto e0 = caratheodory_star(ball, {cplx(0.0), cplx(0.0)}, {cplx(0.3), cplx(0.4)});
  CHECK(e0.value_star == doctest::Approx(0.5).epsilon(1e-14));

  const auto g0 = caratheodory_star(g2, {cplx(0.0), cplx(0.0)}, {cplx(1.0), cplx(0.25)});
  CHECK(std::abs(g0.value_star - 0.5) < 1e-9);
  CHECK(g0.method == "psi-sup");

  // the maximizer for this real pair is omega = -1, half a turn
  const auto g1 = caratheodory_star(g2, {cplx(0.0), cplx(0.0)}, {cplx(0.5), cplx(0.3)});
  CHECK(std::abs(g1.value_star - 0.44) < 1e-9);
  CHECK(std::abs(g1.details.at("omega_turns") - 0.5) < 1e-6);

  const auto same = caratheodory_star(g2, {cplx(0.5), cplx(0.3)}, {cplx(0.5), cplx(0.3)});
  CHECK(same.value_star == 0.0);
}

TEST_CASE("query validation") {
  const DomainModel disc(DomainKind::UnitDisc), g2(DomainKind::SymBidisc);
  CHECK_THROWS_AS(
      caratheodory_star(disc, {cplx(0.1), cplx(0.2)}, {cplx(0.0), cplx(0.0)}),
      DimensionMismatch);
  CHECK_THROWS_AS(
      caratheodory_star(g2, {cplx(0.0), cplx(0.0)}, {cplx(2.2), cplx(1.0)}), OutsideDomain);
}

TEST_CASE("Lempert witnesses hit both endpoints") {
  const DomainModel disc(DomainKind::UnitDisc), bidisc(DomainKind::Bidisc),
      ball(DomainKind::Ball2), g2(DomainKind::SymBidisc);

  struct Case {
    DomainModel d;
    DomainPoint w, z;
    std::string method;
  };
  const auto royal = GeodesicSpec::royal();
  const auto flat = GeodesicSpec::flat(cplx(0.3));
  const std::vector<Case> cases = {
      {disc, DomainPoint(cplx(0.0)), DomainPoint(cplx(0.5)), "mobius"},
      {disc, DomainPoint(cplx(0.3, -0.2)), DomainPoint(cplx(-0.4, 0.1)), "mobius"},
      {bidisc, {cplx(0.0), cplx(0.0)}, {cplx(0.2), cplx(0.6)}, "coordinate-max"},
      {ball, {cplx(0.0), cplx(0.0)}, {cplx(0.3), cplx(0.4)}, "ball-slice"},
      {ball, {cplx(0.2, 0.1), cplx(-0.3)}, {cplx(0.1), cplx(0.4, 0.2)}, "ball-slice"},
      {g2, royal.eval(cplx(0.2)), royal.eval(cplx(0.5)), "royal-witness"},
      {g2, flat.eval(cplx(0.0)), flat.eval(cplx(0.5)), "flat-witness"},
  };
  for (const auto& c : cases) {
    const auto l = lempert_star(c.d, c.w, c.z);
    CAPTURE(c.method);
    CHECK(l.base.method == c.method);
    REQUIRE(l.witness.has_value());
    CHECK(l.witness->reach == doctest::Approx(l.base.value_star).epsilon(1e-12));
    CHECK(point_gap(l.witness->map(cplx(0.0)), c.w) < 1e-9);
    CHECK(point_gap(l.witness->map(cplx(l.witness->reach)), c.z) < 1e-9);
    for (const cplx probe : {cplx(0.3, 0.2), cplx(-0.7), cplx(0.0, 0.9)})
      CHECK(c.d.contains(l.witness->map(probe)));
  }

  // pinned values along geodesic pairs
  CHECK(std::abs(lempert_star(g2, royal.eval(cplx(0.2)), royal.eval(cplx(0.5))).base.value_star -
                 disc_m(cplx(0.2), cplx(0.5))) < 1e-12);
  CHECK(std::abs(lempert_star(g2, flat.eval(cplx(0.0)), flat.eval(cplx(0.5))).base.value_star -
                 0.5) < 1e-12);

  const auto coincident = lempert_star(g2, royal.eval(cplx(0.1)), royal.eval(cplx(0.1)));
  CHECK(coincident.base.method == "coincident");
  CHECK(coincident.witness->reach == 0.0);

  // generic symmetrized points fall back to l* = c* with no explicit witness
  const auto generic = lempert_star(g2, {cplx(0.0), cplx(0.0)}, {cplx(0.5), cplx(0.3)});
  CHECK(generic.base.method == "lempert-equality");
  CHECK_FALSE(generic.witness.has_value());
  CHECK(std::abs(generic.base.value_star - 0.44) < 1e-9);
}

TEST_CASE("distance consistency across all domains") {
  for (const DomainKind k : {DomainKind::UnitDisc, DomainKind::Bidisc, DomainKind::Ball2,
                             DomainKind::SymBidisc}) {
    const DomainModel d(k);
    const auto r = distance_consistency(d, 300, 42);
    CAPTURE(d.name());
    CHECK(r.pass);
    CHECK(r.metrics.at("min_l_minus_c") >= -1e-9);
    CHECK(r.metrics.at("max_witness_residual") < 1e-8);
  }
  CHECK_THROWS_AS(distance_consistency(DomainModel(DomainKind::Bidisc), 0, 42), Error);
}

TEST_CASE("distance symmetry") {
  for (const DomainKind k : {DomainKind::Bidisc, DomainKind::Ball2, DomainKind::SymBidisc}) {
    const DomainModel d(k);
    const auto pts = d.sample(100, 31);
    for (int i = 0; i < 50; ++i) {
      const auto& w = pts[2 * i];
      const auto& z = pts[2 * i + 1];
      CHECK(std::abs(caratheodory_star(d, w, z).value_star -
                     caratheodory_star(d, z, w).value_star) < 1e-9);
    }
  }
}

TEST_CASE("symmetrization contracts the bidisc distance") {
  const DomainModel bidisc(DomainKind::Bidisc), g2(DomainKind::SymBidisc);
  const auto pts = bidisc.sample(400, 13);
  for (int i = 0; i < 200; ++i) {
    const auto& w = pts[2 * i];
    const auto& z = pts[2 * i + 1];
    const DomainPoint pw{w.z1() + w.z2(), w.z1() * w.z2()};
    const DomainPoint pz{z.z1() + z.z2(), z.z1() * z.z2()};
    CHECK(caratheodory_star(g2, pw, pz).value_star <=
          caratheodory_star(bidisc, w, z).value_star + 1e-9);
  }
}

TEST_CASE("Psi supremum is stable under grid doubling") {
  const DomainModel g2(DomainKind::SymBidisc);
  const auto pts = g2.sample(20, 57);
  for (int i = 0; i < 10; ++i) {
    const auto& w = pts[2 * i];
    const auto& z = pts[2 * i + 1];
    CHECK(std::abs(caratheodory_star(g2, w, z).value_star - psi_sup_reference(w, z)) < 1e-9);
  }
}

TEST_CASE("left inverses never expand and royal inverses attain the distance") {
  const DomainModel g2(DomainKind::SymBidisc);
  const std::vector<cplx> omegas = {cplx(1.0), cplx(-1.0), cplx(0.0, 1.0),
                                    std::polar(1.0, 0.7)};

  const auto pts = g2.sample(200, 19);
  for (int i = 0; i < 100; ++i) {
    const auto& w = pts[2 * i];
    const auto& z = pts[2 * i + 1];
    const double c = caratheodory_star(g2, w, z).value_star;
    for (const cplx omega : omegas)
      CHECK(disc_m(psi_value(w, omega), psi_value(z, omega)) <= c + 1e-9);
  }

  // on the royal curve every unimodular Psi attains the distance
  const auto royal = GeodesicSpec::royal();
  const DomainPoint w = royal.eval(cplx(0.2, 0.1)), z = royal.eval(cplx(-0.4, 0.3));
  const double c = caratheodory_star(g2, w, z).value_star;
  for (const cplx omega : omegas)
    CHECK(std::abs(disc_m(psi_value(w, omega), psi_value(z, omega)) - c) < 1e-9);
}

TEST_CASE("ball Moebius involution") {
  const C2 a{cplx(0.3, 0.1), cplx(-0.2, 0.4)};
  SampleRng rng(3);
  for (int i = 0; i < 100; ++i) {
    cplx z1 = 0.7 * rng.in_disc(), z2 = 0.7 * rng.in_disc();
    while (std::norm(z1) + std::norm(z2) >= 1.0) {
      z1 *= 0.5;
      z2 *= 0.5;
    }
    const C2 z{z1, z2};
    const C2 back = ball_mobius(a, ball_mobius(a, z));
    CHECK(std::abs(back[0] - z[0]) < 1e-12);
    CHECK(std::abs(back[1] - z[1]) < 1e-12);
  }
  const C2 zero = ball_mobius(a, a);
  CHECK(norm2(zero) < 1e-14);
  const C2 image = ball_mobius(a, C2{cplx(0.0), cplx(0.0)});
  CHECK(std::abs(image[0] - a[0]) < 1e-14);
  CHECK(std::abs(image[1] - a[1]) < 1e-14);
}
