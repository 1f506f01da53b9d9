#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>

#include "lempert/errors.hpp"
#include "lempert/hyperbolic.hpp"
#include "lempert/rng.hpp"

using namespace lempert;

TEST_CASE("pseudo distance on pinned pairs") {
  CHECK(pseudo_distance(DiscPoint(0.0), DiscPoint(0.5)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pseudo_distance(DiscPoint(0.5), DiscPoint(0.5)) == doctest::Approx(0.0));
  CHECK(pseudo_distance(DiscPoint(0.5), DiscPoint(-0.5)) ==
        doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("poincare distance is atanh of the pseudo distance") {
  CHECK(poincare_distance(DiscPoint(0.0), DiscPoint(0.0)) == doctest::Approx(0.0));
  CHECK(poincare_distance(DiscPoint(0.0), DiscPoint(std::tanh(1.0))) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(poincare_distance(DiscPoint(0.5), DiscPoint(-0.5)) ==
        doctest::Approx(std::atanh(0.8)).epsilon(1e-13));
}

TEST_CASE("pseudo distance symmetry on sampled pairs") {
  SampleRng rng(42);
  for (int k = 0; k < 1000; ++k) {
    const DiscPoint w(rng.in_disc()), z(rng.in_disc());
    CHECK(pseudo_distance(w, z) == doctest::Approx(pseudo_distance(z, w)).epsilon(1e-15));
  }
}

TEST_CASE("moebius maps: pinned applications and round trips") {
  const MobiusMap id(1.0, DiscPoint(0.0));
  CHECK(std::abs(id.apply(cplx(0.3, 0.0)) - cplx(0.3, 0.0)) < 1e-15);

  const MobiusMap a(1.0, DiscPoint(0.5));
  CHECK(std::abs(a.apply(cplx(0.5, 0.0))) < 1e-15);
  CHECK(std::abs(a.inverse().apply(cplx(0.0, 0.0)) - cplx(0.5, 0.0)) < 1e-15);

  SampleRng rng(7);
  for (int k = 0; k < 500; ++k) {
    const MobiusMap m(std::polar(1.0, rng.uniform(0.0, 6.28)), DiscPoint(rng.in_disc()));
    const cplx z = rng.in_disc();
    CHECK(std::abs(m.inverse().apply(m.apply(z)) - z) < 1e-11);
    // unit circle maps to itself
    const cplx b = std::polar(1.0, rng.uniform(0.0, 6.28));
    CHECK(std::abs(std::abs(m.apply(b)) - 1.0) < 1e-12);
  }
}

TEST_CASE("moebius invariance of the pseudo distance") {
  SampleRng rng(3);
  for (int k = 0; k < 500; ++k) {
    const MobiusMap m(std::polar(1.0, rng.uniform(0.0, 6.28)), DiscPoint(rng.in_disc()));
    const DiscPoint w(rng.in_disc()), z(rng.in_disc());
    CHECK(std::abs(pseudo_distance(m.apply(w), m.apply(z)) - pseudo_distance(w, z)) < 1e-12);
  }
}

TEST_CASE("mobius_fit recovers pinned maps") {
  const auto id = mobius_fit({{{cplx(0.0), cplx(0.0)},
                               {cplx(0.5), cplx(0.5)},
                               {cplx(-0.5), cplx(-0.5)}}});
  CHECK(std::abs(id.apply(cplx(0.3, 0.2)) - cplx(0.3, 0.2)) < 1e-12);

  // boundary-extended fit: l -> (l + 1/3)/(1 + l/3)
  const auto m = mobius_fit({{{cplx(0.0), cplx(1.0 / 3.0)},
                              {cplx(1.0), cplx(1.0)},
                              {cplx(-1.0), cplx(-1.0)}}});
  CHECK(std::abs(m.center() - cplx(-1.0 / 3.0)) < 1e-10);
  CHECK(std::abs(m.rotation() - cplx(1.0)) < 1e-10);
  for (double x : {0.0, 0.4, -0.7})
    CHECK(std::abs(m.apply(cplx(x)) - (x + 1.0 / 3.0) / (1.0 + x / 3.0)) < 1e-12);
}

TEST_CASE("mobius_fit rejects incompatible pair sets") {
  CHECK_THROWS_AS(mobius_fit({{{cplx(0.0), cplx(1.0 / 3.0)},
                               {cplx(1.0), cplx(1.0)},
                               {cplx(-1.0), cplx(-0.5)}}}),
                  NoAutomorphism);
  CHECK_THROWS_AS(mobius_fit({{{cplx(0.0), cplx(0.0)},
                               {cplx(0.5), cplx(0.5)},
                               {cplx(-0.5), cplx(0.4)}}}),
                  NoAutomorphism);
}

TEST_CASE("mobius_fit recovers random automorphisms from three pairs") {
  SampleRng rng(11);
  for (int k = 0; k < 200; ++k) {
    const MobiusMap m(std::polar(1.0, rng.uniform(0.0, 6.28)), DiscPoint(rng.in_disc()));
    std::array<std::pair<cplx, cplx>, 3> pairs;
    for (auto& p : pairs) {
      const cplx z = rng.in_disc();
      p = {z, m.apply(z)};
    }
    if (std::abs(pairs[0].first - pairs[1].first) < 1e-3 ||
        std::abs(pairs[0].first - pairs[2].first) < 1e-3 ||
        std::abs(pairs[1].first - pairs[2].first) < 1e-3)
      continue;
    const auto fit = mobius_fit(pairs);
    double dev = 0.0;
    for (int j = 0; j < 20; ++j) {
      const cplx z = rng.in_disc();
      dev = std::max(dev, std::abs(fit.apply(z) - m.apply(z)));
    }
    CHECK(dev < 1e-10);
  }
}

TEST_CASE("disc points reject the boundary") {
  CHECK_THROWS_AS(DiscPoint(cplx(1.0, 0.0)), OutsideDomain);
  CHECK_THROWS_AS(DiscPoint(cplx(0.0, -1.0)), OutsideDomain);
  CHECK_NOTHROW(DiscPoint(cplx(0.999999, 0.0)));
}

TEST_CASE("moebius rotation must be unimodular") {
  CHECK_THROWS_AS(MobiusMap(cplx(1.1, 0.0), DiscPoint(0.0)), Error);
}
