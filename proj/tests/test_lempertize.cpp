#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "lempert/construction.hpp"
#include "lempert/covector.hpp"
#include "lempert/domains.hpp"
#include "lempert/errors.hpp"
#include "lempert/geodesics.hpp"
#include "lempert/grid.hpp"
#include "lempert/inverses.hpp"

using namespace lempert;

namespace {

CovectorField constant_field(cplx a, cplx b) {
  return CovectorField::analytic([a, b](cplx) { return C2{a, b}; }, "const field");
}

// the two royal fields grad(-Psi_{+1}) and grad(-Psi_{-1}), normalized; their
// midpoint reproduces the gradient of Phi along the royal curve
CovectorField royal_midpoint_field() {
  const auto royal = GeodesicSpec::royal();
  const auto vp = normalize_field(
      field_from_inverse(LeftInverseSpec::royal_minus_psi(cplx(1.0)), royal), royal);
  const auto vm = normalize_field(
      field_from_inverse(LeftInverseSpec::royal_minus_psi(cplx(-1.0)), royal), royal);
  return combine(vp, vm, 0.5);
}

}  // namespace

TEST_CASE("pulled-back fields, pinned values") {
  const auto diag = GeodesicSpec::diagonal();
  const cplx l(0.2, 0.3);

  const auto vp = field_from_inverse(LeftInverseSpec::bidisc_projection(1), diag);
  CHECK(std::abs(vp.eval(l)[0] - cplx(1.0)) < 1e-15);
  CHECK(std::abs(vp.eval(l)[1]) < 1e-15);

  // the family gradient on the diagonal is (1/2, 1/2) whatever h is
  for (const cplx c : {cplx(0.0), cplx(0.3), cplx(0.0, 0.5)}) {
    const auto v =
        field_from_inverse(LeftInverseSpec::bidisc_family(0.5, HSpec::constant(c)), diag);
    CHECK(std::abs(v.eval(l)[0] - cplx(0.5)) < 1e-13);
    CHECK(std::abs(v.eval(l)[1] - cplx(0.5)) < 1e-13);
  }

  const auto royal = GeodesicSpec::royal();
  const auto vr = field_from_inverse(LeftInverseSpec::royal_minus_psi(cplx(1.0)), royal);
  const cplx m(0.3);
  CHECK(std::abs(vr.eval(m)[0] - (1.0 + m) / (2.0 * (1.0 - m))) < 1e-13);
  CHECK(std::abs(vr.eval(m)[1] + 1.0 / (1.0 - m)) < 1e-13);
}

TEST_CASE("normalization") {
  const auto diag = GeodesicSpec::diagonal();

  const auto v = normalize_field(constant_field(2.0, 0.0), diag);
  CHECK(v.normalized());
  REQUIRE(v.base().has_value());
  CHECK(*v.base() == diag);
  CHECK(std::abs(v.eval(cplx(0.1, -0.4))[0] - cplx(1.0)) < 1e-15);
  CHECK(std::abs(v.eval(cplx(0.1, -0.4))[1]) < 1e-15);

  // a field that already pairs to 1 comes back unchanged
  const auto royal = GeodesicSpec::royal();
  const auto phi_field = field_from_inverse(LeftInverseSpec::royal_phi(), royal);
  const auto w = normalize_field(phi_field, royal);
  for (const cplx l : radial_angular_grid(32)) {
    CHECK(std::abs(w.eval(l)[0] - phi_field.eval(l)[0]) < 1e-15);
    CHECK(std::abs(w.eval(l)[1] - phi_field.eval(l)[1]) < 1e-15);
  }

  CHECK_THROWS_AS(normalize_field(constant_field(1.0, -1.0), diag), DegeneratePairing);
}

TEST_CASE("convex combination") {
  const auto diag = GeodesicSpec::diagonal();
  const auto v0 = normalize_field(constant_field(1.0, 0.0), diag);
  const auto v1 = normalize_field(constant_field(0.0, 1.0), diag);

  const cplx l(0.3, 0.1);
  CHECK(std::abs(combine(v0, v1, 0.0).eval(l)[0] - cplx(1.0)) < 1e-15);
  CHECK(std::abs(combine(v0, v1, 1.0).eval(l)[1] - cplx(1.0)) < 1e-15);
  const auto mid = combine(v0, v1, 0.3);
  CHECK(mid.normalized());
  CHECK(std::abs(mid.eval(l)[0] - cplx(0.7)) < 1e-15);
  CHECK(std::abs(mid.eval(l)[1] - cplx(0.3)) < 1e-15);

  CHECK_THROWS_AS(combine(v0, v1, 1.5), Error);
  CHECK_THROWS_AS(combine(v0, constant_field(0.0, 1.0), 0.5), Error);
  const auto other =
      normalize_field(field_from_inverse(LeftInverseSpec::royal_phi(), GeodesicSpec::royal()),
                      GeodesicSpec::royal());
  CHECK_THROWS_AS(combine(v0, other, 0.5), MixedGeodesics);
}

TEST_CASE("contour zero counting") {
  const auto diag = GeodesicSpec::diagonal();
  const LempertCandidate c{diag, normalize_field(constant_field(0.5, 0.5), diag)};
  const DomainPoint z{cplx(0.2), cplx(0.6)};  // fiber root at l = 0.4

  CHECK(zero_count(c, z, 0.9, 256) == 1);
  CHECK(zero_count(c, z, 0.3, 256) == 0);
  CHECK_THROWS_AS(zero_count(c, z, 0.4, 256), ZeroOnContour);

  CHECK_THROWS_AS(zero_count(c, z, 2.5, 256), Error);
  CHECK_THROWS_AS(zero_count(c, z, 0.0, 256), Error);
  CHECK_THROWS_AS(zero_count(c, z, 0.9, 48), Error);

  const LempertCandidate royal{GeodesicSpec::royal(), royal_midpoint_field()};
  const DomainPoint on_curve{cplx(1.0), cplx(0.25)};  // royal point of l = 0.5
  CHECK(zero_count(royal, on_curve, 0.9, 256) == 1);
  CHECK(zero_count(royal, on_curve, 0.4, 256) == 0);
  CHECK_THROWS_AS(zero_count(royal, on_curve, 0.5, 256), ZeroOnContour);
}

TEST_CASE("solver configuration validation") {
  RootSolveConfig cfg;
  cfg.contour_nodes = 48;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.contour_radii = {};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.contour_radii = {0.9, 0.8};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.contour_radii = {0.9, 1.0};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.newton_tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.newton_max_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  CHECK_NOTHROW(RootSolveConfig{}.validate());
}

TEST_CASE("point solving, pinned roots") {
  const auto diag = GeodesicSpec::diagonal();
  const LempertCandidate c{diag, normalize_field(constant_field(0.5, 0.5), diag)};
  CHECK(std::abs(cplx(solve_point(c, {cplx(0.2), cplx(0.6)})) - cplx(0.4)) < 1e-12);

  const LempertCandidate royal{GeodesicSpec::royal(), royal_midpoint_field()};
  CHECK(std::abs(cplx(solve_point(royal, {cplx(1.0), cplx(0.25)})) - cplx(0.5)) < 1e-12);

  // flat candidate with the Psi_1 field: (z - f(l)) . v(l) = 0.05 - 0.75 l
  const auto flat = GeodesicSpec::flat(cplx(0.0));
  const auto vf =
      normalize_field(field_from_inverse(LeftInverseSpec::psi_omega(cplx(1.0)), flat), flat);
  const LempertCandidate fc{flat, vf};
  CHECK(std::abs(cplx(solve_point(fc, {cplx(0.5), cplx(0.3)})) - cplx(1.0 / 15.0)) < 1e-12);
}

TEST_CASE("solver failure modes") {
  const auto diag = GeodesicSpec::diagonal();
  const LempertCandidate line{diag, normalize_field(constant_field(1.0, 0.0), diag)};

  // fiber root equals z1; park it on / beyond the contour schedule
  CHECK(std::abs(cplx(solve_point(line, {cplx(0.9), cplx(0.0)})) - cplx(0.9)) < 1e-12);
  CHECK_THROWS_AS(solve_point(line, {cplx(0.9995), cplx(0.0)}), NoRootInDisc);

  // quadratic fiber with both roots inside: 0.75 - l - 5 l^2 = -5(l - 0.3)(l + 0.5)
  const auto bent = normalize_field(
      CovectorField::analytic(
          [](cplx l) {
            const cplx a = -(50.0 / 3.0) * l * l;
            return C2{0.5 + a, 0.5 - a};
          },
          "quadratic perturbation"),
      diag);
  CHECK_THROWS_AS(solve_point({diag, bent}, {cplx(0.9), cplx(0.6)}), MultipleRoots);
}

TEST_CASE("solved roots satisfy the fiber equation") {
  const LempertCandidate royal{GeodesicSpec::royal(), royal_midpoint_field()};
  for (const auto& z : capped_samples(royal.domain, 50, 23)) {
    const cplx l = solve_point(royal, z);
    CHECK(std::abs(royal.fiber_value(z, l)) < 1e-11);
  }
}

TEST_CASE("solutions are stable under contour refinement") {
  const LempertCandidate royal{GeodesicSpec::royal(), royal_midpoint_field()};
  RootSolveConfig fine;
  fine.contour_nodes = 512;
  const DomainPoint z{cplx(0.5), cplx(0.3)};
  CHECK(std::abs(cplx(solve_point(royal, z)) - cplx(solve_point(royal, z, fine))) < 1e-10);
}

TEST_CASE("capped samples") {
  const DomainModel bidisc(DomainKind::Bidisc);
  const auto a = capped_samples(bidisc, 500, 42);
  const auto b = capped_samples(bidisc, 500, 42);
  REQUIRE(a.size() == 500);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].z1() == b[i].z1());
    CHECK(std::max(std::abs(a[i].z1()), std::abs(a[i].z2())) <= 0.99);
  }

  const DomainModel g2(DomainKind::SymBidisc);
  for (const auto& z : capped_samples(g2, 500, 42)) {
    const auto roots = pair_from_point(z);
    CHECK(std::max(std::abs(roots[0].value()), std::abs(roots[1].value())) <= 0.99);
  }
}

TEST_CASE("reconstructed inverse matches its affine source") {
  const auto diag = GeodesicSpec::diagonal();
  const LempertCandidate c{diag, normalize_field(constant_field(0.5, 0.5), diag)};
  const auto built = build_inverse(c);
  CHECK(built.is_constructed());
  CHECK(built.domain().kind() == DomainKind::Bidisc);

  const auto affine = LeftInverseSpec::bidisc_affine(0.5);
  for (const auto& z : capped_samples(c.domain, 1000, 3))
    CHECK(std::abs(built.eval(z) - affine.eval(z)) < 1e-10);

  const DomainPoint z{cplx(0.1), cplx(-0.2)};
  const auto grad = built.gradient(z);
  CHECK(std::abs(grad[0] - cplx(0.5)) < 1e-8);
  CHECK(std::abs(grad[1] - cplx(0.5)) < 1e-8);
}

TEST_CASE("midpoint of the royal field homotopy rebuilds Phi") {
  const LempertCandidate c{GeodesicSpec::royal(), royal_midpoint_field()};
  const auto built = build_inverse(c);
  const auto phi = LeftInverseSpec::royal_phi();
  for (const auto& z : capped_samples(c.domain, 300, 3))
    CHECK(std::abs(built.eval(z) - phi.eval(z)) < 1e-9);
}

TEST_CASE("boundary extension certificates") {
  const auto flat = GeodesicSpec::flat(cplx(0.0));
  const auto vf =
      normalize_field(field_from_inverse(LeftInverseSpec::psi_omega(cplx(0.0)), flat), flat);
  const auto flat_cert = extension_certificate({flat, vf}, cplx(1.0));
  CHECK(flat_cert.f_extends);
  CHECK(flat_cert.v_finite);
  CHECK(flat_cert.extends);
  CHECK(std::abs(flat_cert.pairing_bound - 1.0) < 1e-6);

  // the Phi field blows up like 1/(1 - l^2) at the royal boundary point l = 1
  const auto royal = GeodesicSpec::royal();
  const auto vr =
      normalize_field(field_from_inverse(LeftInverseSpec::royal_phi(), royal), royal);
  const auto royal_cert = extension_certificate({royal, vr}, cplx(1.0));
  CHECK(royal_cert.f_extends);
  CHECK_FALSE(royal_cert.v_finite);
  CHECK_FALSE(royal_cert.extends);
  REQUIRE(royal_cert.field_norms.size() >= 2);
  CHECK(royal_cert.field_norms.back() > 10.0 * royal_cert.field_norms.front());

  const auto diag = GeodesicSpec::diagonal();
  const auto diag_cert = extension_certificate(
      {diag, normalize_field(constant_field(0.5, 0.5), diag)}, cplx(0.0, 1.0));
  CHECK(diag_cert.extends);
}
