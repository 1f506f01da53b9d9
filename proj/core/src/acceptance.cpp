#include "lempert/acceptance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "lempert/construction.hpp"
#include "lempert/covector.hpp"
#include "lempert/distances.hpp"
#include "lempert/grid.hpp"
#include "lempert/verify.hpp"

namespace lempert {
namespace acceptance {

namespace {

const std::vector<double> kFiberSteps = {1e-3, 1e-2, 1e-1};

// solver-driven checks sample through capped_samples so the fiber root stays
// clear of the top contour radius at every seed

CovectorField flat_field(cplx omega) {
  std::ostringstream os;
  os << "flat-field(omega=" << omega.real();
  if (omega.imag() != 0.0) os << (omega.imag() > 0 ? "+" : "") << omega.imag() << "i";
  os << ")";
  return CovectorField::analytic(
      [omega](cplx l) -> C2 { return {0.5 * (std::conj(omega) * l - omega), cplx(1.0)}; },
      os.str());
}

VerificationReport a1(std::uint64_t) {
  auto r = verify::left_inverse_residual(GeodesicSpec::royal(), LeftInverseSpec::royal_phi(),
                                         64, false, 1e-12);
  r.check_name = "royal identity";
  return r;
}

VerificationReport a2(std::uint64_t seed) {
  auto r = verify::range_supremum(LeftInverseSpec::royal_phi(),
                                  DomainModel(DomainKind::SymBidisc), 100000, seed);
  r.check_name = "phi range";
  return r;
}

VerificationReport a3(std::uint64_t) {
  const GeodesicSpec royal = GeodesicSpec::royal();
  const LeftInverseSpec phi = LeftInverseSpec::royal_phi();
  auto r = verify::fiber_affinity(royal, phi, 32, kFiberSteps);
  r.check_name = "royal fiber affinity";

  // points reached along the kernel must satisfy the affine fiber relation
  const DomainModel g2(DomainKind::SymBidisc);
  double relation = 0.0;
  for (cplx l0 : radial_angular_grid(32)) {
    const DomainPoint z0 = royal.eval(l0);
    const C2 v = phi.gradient(z0);
    const C2 kernel{-v[1] / norm2(v), v[0] / norm2(v)};
    for (double tau : kFiberSteps) {
      const C2 p = z0.as_c2() + tau * kernel;
      const DomainPoint z(p[0], p[1]);
      if (!g2.contains(z)) continue;
      const cplx res = -z.z1() * l0 * l0 + 2.0 * l0 * (1.0 + z.z2()) - z.z1();
      relation = std::max(relation, std::abs(res));
    }
  }
  r.metrics["max_fiber_relation"] = relation;
  r.pass = r.pass && relation < 1e-10;
  return r;
}

VerificationReport a4(std::uint64_t) {
  auto axis = verify::fiber_affinity(GeodesicSpec::ball_axis(), LeftInverseSpec::ball_simple(),
                                     32, kFiberSteps);
  auto fam = verify::fiber_affinity(GeodesicSpec::ball_family(1.0),
                                    LeftInverseSpec::ball_refined(), 32, kFiberSteps);
  VerificationReport r;
  r.check_name = "non-lempert fiber detection";
  r.inputs = {{"first", "ball-axis / ball-simple"}, {"second", "ball(t=1) / ball-refined"}};
  r.grid_size = 32;
  r.tolerance = 1e-6;
  r.metrics["simple_kernel_dev"] = axis.metrics["metric_kernel"];
  r.metrics["refined_kernel_dev"] = fam.metrics["metric_kernel"];
  r.pass = !axis.pass && axis.metrics["metric_kernel"] > 1e-6 && !fam.pass &&
           fam.metrics["metric_kernel"] > 1e-6;
  return r;
}

VerificationReport a5(std::uint64_t seed) {
  const GeodesicSpec diag = GeodesicSpec::diagonal();
  const DomainModel bidisc(DomainKind::Bidisc);
  const auto samples = capped_samples(bidisc, 1000, seed);
  const RootSolveConfig cfg{};

  double solver_dev = 0.0, kernel_dev = 0.0;
  int configs = 0;
  for (double t : {0.3, 0.5}) {
    for (const HSpec& h :
         {HSpec::constant(0.3), HSpec::coordinate(1), HSpec::product()}) {
      ++configs;
      const auto fam = LeftInverseSpec::bidisc_family(t, h);
      const CovectorField v = normalize_field(field_from_inverse(fam, diag), diag);
      kernel_dev = std::max(kernel_dev,
                            verify::kernel_constancy(v, 64).metrics["max_projective_deviation"]);
      const LeftInverseSpec built = build_inverse(LempertCandidate(diag, v), cfg);
      const LeftInverseSpec affine = LeftInverseSpec::bidisc_affine(t);
      for (const auto& z : samples)
        solver_dev = std::max(solver_dev, std::abs(built.eval(z) - affine.eval(z)));
    }
  }

  VerificationReport r;
  r.check_name = "bidisc lempertization";
  r.seed = seed;
  r.tolerance = 1e-8;
  r.metrics["max_solver_dev"] = solver_dev;
  r.metrics["max_kernel_dev"] = kernel_dev;
  r.metrics["configs"] = configs;
  r.metrics["samples"] = samples.size();
  r.pass = solver_dev < 1e-8 && kernel_dev < 1e-9;
  return r;
}

VerificationReport a6(std::uint64_t seed) {
  const GeodesicSpec diag = GeodesicSpec::diagonal();
  const DomainModel bidisc(DomainKind::Bidisc);
  const auto samples = capped_samples(bidisc, 1000, seed);
  const RootSolveConfig cfg{};

  const CovectorField v0 =
      normalize_field(field_from_inverse(LeftInverseSpec::bidisc_projection(1), diag), diag);
  const CovectorField v1 =
      normalize_field(field_from_inverse(LeftInverseSpec::bidisc_projection(2), diag), diag);

  double dev = 0.0;
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    const LeftInverseSpec built = build_inverse(LempertCandidate(diag, combine(v0, v1, t)), cfg);
    for (const auto& z : samples)
      dev = std::max(dev, std::abs(built.eval(z) - ((1.0 - t) * z.z1() + t * z.z2())));
  }

  VerificationReport r;
  r.check_name = "homotopy endpoints";
  r.seed = seed;
  r.tolerance = 1e-10;
  r.metrics["max_dev"] = dev;
  r.metrics["samples"] = samples.size();
  r.pass = dev < 1e-10;
  return r;
}

VerificationReport a7(std::uint64_t seed) {
  const GeodesicSpec flat0 = GeodesicSpec::flat(0.0);
  const DomainModel g2(DomainKind::SymBidisc);
  const auto samples = capped_samples(g2, 1000, seed);
  const RootSolveConfig cfg{};

  struct Case {
    cplx w1, w2;
    double t;
  };
  double dev = 0.0;
  for (const Case& c : {Case{1.0, -1.0, 0.5}, Case{1.0, cplx(0.0, 1.0), 0.3}}) {
    const CovectorField u1 = normalize_field(flat_field(c.w1), flat0);
    const CovectorField u2 = normalize_field(flat_field(c.w2), flat0);
    // combine weights the second argument by t, so the t-weight lands on w1
    const CovectorField mixed = combine(u2, u1, c.t);
    const cplx mix = c.t * c.w1 + (1.0 - c.t) * c.w2;
    const LeftInverseSpec built = build_inverse(LempertCandidate(flat0, mixed), cfg);
    const LeftInverseSpec psi = LeftInverseSpec::psi_omega(mix);
    for (const auto& z : samples)
      dev = std::max(dev, std::abs(built.eval(z) - psi.eval(z)));
  }

  VerificationReport r;
  r.check_name = "flat recovery";
  r.seed = seed;
  r.tolerance = 1e-9;
  r.metrics["max_dev"] = dev;
  r.metrics["samples"] = samples.size();
  r.pass = dev < 1e-9;
  return r;
}

VerificationReport a8(std::uint64_t) {
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const cplx omega = std::polar(1.0, 2.0 * 3.141592653589793 * k / 8);
    const auto rep = verify::left_inverse_residual(
        GeodesicSpec::royal(), LeftInverseSpec::royal_minus_psi(omega), 64, false, 1e-12);
    worst = std::max(worst, rep.metrics.at("max_residual"));
  }
  VerificationReport r;
  r.check_name = "royal psi identities";
  r.grid_size = 64;
  r.tolerance = 1e-12;
  r.metrics["max_residual"] = worst;
  r.metrics["omegas"] = 8;
  r.pass = worst < 1e-12;
  return r;
}

VerificationReport a9(std::uint64_t seed) {
  auto r = verify::beta_alpha_checks(100000, seed);
  r.check_name = "image computations";
  return r;
}

VerificationReport a10(std::uint64_t) {
  const LeftInverseSpec psi1 = LeftInverseSpec::psi_omega(1.0);
  double worst = 0.0, lo = 1e300, hi = -1e300;
  for (double c : {0.25, 0.5, 0.75}) {
    const auto probe = verify::boundary_probe(psi1, verify::PathSpec::linear_g2(c), 12);
    worst = std::max(worst, std::abs(probe.limit - (1.0 - 2.0 * c)));
    lo = std::min(lo, probe.limit.real());
    hi = std::max(hi, probe.limit.real());
  }
  VerificationReport r;
  r.check_name = "cluster discrepancy";
  r.tolerance = 1e-6;
  r.metrics["max_limit_dev"] = worst;
  r.metrics["path_spread"] = hi - lo;
  r.pass = worst < 1e-6 && hi - lo >= 0.5;
  return r;
}

VerificationReport a11(std::uint64_t) {
  double residual = 0.0, center_dev = 0.0;
  bool all_pass = true;
  for (double t : {0.5, 1.0, 2.0}) {
    const auto rep = verify::left_inverse_residual(
        GeodesicSpec::ball_family(t), LeftInverseSpec::ball_refined(), 64, true, 1e-10);
    all_pass = all_pass && rep.pass;
    residual = std::max(residual, rep.metrics.at("max_residual"));
    const double expected = t * t / (2.0 + t * t);
    center_dev = std::max(center_dev, std::abs(rep.metrics.at("fitted_center_abs") - expected));
  }
  VerificationReport r;
  r.check_name = "ball family reduction";
  r.grid_size = 64;
  r.tolerance = 1e-9;
  r.metrics["max_residual"] = residual;
  r.metrics["max_center_dev"] = center_dev;
  r.pass = all_pass && residual < 1e-10 && center_dev < 1e-9;
  return r;
}

VerificationReport a12(std::uint64_t seed) {
  const auto bid = distance_consistency(DomainModel(DomainKind::Bidisc), 1000, seed);

  const DomainModel g2(DomainKind::SymBidisc);
  const GeodesicSpec royal = GeodesicSpec::royal();
  SampleRng rng(seed + 1);
  double royal_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const cplx l1 = rng.in_disc(), l2 = rng.in_disc();
    const double expect = pseudo_distance(DiscPoint(l1), DiscPoint(l2));
    const double got = caratheodory_star(g2, royal.eval(l1), royal.eval(l2)).value_star;
    royal_dev = std::max(royal_dev, std::abs(got - expect));
  }

  VerificationReport r;
  r.check_name = "distance consistency";
  r.seed = seed;
  r.tolerance = 1e-6;
  r.metrics["bidisc_max_gap"] = std::abs(bid.metrics.at("max_witness_gap"));
  r.metrics["royal_max_dev"] = royal_dev;
  r.pass = bid.pass && r.metrics["bidisc_max_gap"] < 1e-8 && royal_dev < 1e-6;
  return r;
}

VerificationReport a13(std::uint64_t) {
  const LeftInverseSpec simple = LeftInverseSpec::ball_simple();
  double worst = 0.0;
  std::vector<double> limits;
  for (double a : {0.0, 0.5}) {
    const auto probe = verify::boundary_probe(simple, verify::PathSpec::ball_vertical(a), 12);
    worst = std::max(worst, std::abs(probe.limit - a));
    limits.push_back(probe.limit.real());
  }
  const double spread = std::abs(limits[1] - limits[0]);
  VerificationReport r;
  r.check_name = "ball cluster values";
  r.tolerance = 1e-8;
  r.metrics["max_limit_dev"] = worst;
  r.metrics["path_spread"] = spread;
  r.pass = worst < 1e-8 && std::abs(spread - 0.5) < 1e-8;
  return r;
}

VerificationReport a14(std::uint64_t seed) {
  const GeodesicSpec diag = GeodesicSpec::diagonal();
  const GeodesicSpec flat0 = GeodesicSpec::flat(0.0);
  const RootSolveConfig cfg{};

  std::vector<LempertCandidate> cands;
  for (double t : {0.3, 0.5})
    for (const HSpec& h : {HSpec::constant(0.3), HSpec::coordinate(1), HSpec::product()})
      cands.emplace_back(diag, normalize_field(
                                   field_from_inverse(LeftInverseSpec::bidisc_family(t, h), diag),
                                   diag));
  {
    const CovectorField v0 =
        normalize_field(field_from_inverse(LeftInverseSpec::bidisc_projection(1), diag), diag);
    const CovectorField v1 =
        normalize_field(field_from_inverse(LeftInverseSpec::bidisc_projection(2), diag), diag);
    for (double t : {0.0, 0.25, 0.5, 1.0}) cands.emplace_back(diag, combine(v0, v1, t));
  }
  for (auto [w1, w2, t] : {std::tuple<cplx, cplx, double>{1.0, -1.0, 0.5},
                           {1.0, cplx(0.0, 1.0), 0.3}})
    cands.emplace_back(flat0, combine(normalize_field(flat_field(w2), flat0),
                                      normalize_field(flat_field(w1), flat0), t));

  int audited = 0, multiple = 0, bad_count = 0;
  for (size_t i = 0; i < cands.size(); ++i) {
    const auto samples = capped_samples(cands[i].domain, 1000, seed + i);
    for (const auto& z : samples) {
      cplx root;
      try {
        root = solve_point(cands[i], z, cfg);
      } catch (const MultipleRoots&) {
        ++multiple;
        continue;
      }
      const double radius = std::max(std::abs(root) + 0.05, 0.9);
      ++audited;
      if (zero_count(cands[i], z, radius, cfg.contour_nodes) != 1) ++bad_count;
    }
  }

  VerificationReport r;
  r.check_name = "uniqueness audit";
  r.seed = seed;
  r.tolerance = 0.0;
  r.metrics["candidates"] = cands.size();
  r.metrics["audited"] = audited;
  r.metrics["multiple_roots"] = multiple;
  r.metrics["bad_counts"] = bad_count;
  r.pass = multiple == 0 && bad_count == 0;
  return r;
}

VerificationReport a15(std::uint64_t seed) {
  struct Case {
    DomainPoint center;
    double R, rho;
  };
  const Case cases[] = {{DomainPoint(0.0, 0.0), 0.5, 0.5},
                        {DomainPoint(0.3, 0.0), 0.5, 0.5},
                        {DomainPoint(0.3, cplx(0.0, 0.2)), 0.7, 0.4}};
  double min_rate = 1.0;
  bool all_pass = true;
  for (const Case& c : cases) {
    const auto rep = verify::kobayashi_ball_identity(c.center, c.R, c.rho, 10000, seed);
    all_pass = all_pass && rep.pass;
    min_rate = std::min(min_rate, rep.metrics.at("agreement_rate"));
  }
  VerificationReport r;
  r.check_name = "kobayashi ball identity";
  r.seed = seed;
  r.tolerance = 0.0;
  r.metrics["min_agreement_rate"] = min_rate;
  r.metrics["cases"] = 3;
  r.pass = all_pass;
  return r;
}

struct Entry {
  const char* id;
  const char* title;
  VerificationReport (*run)(std::uint64_t);
};

const Entry kEntries[] = {
    {"A1", "royal identity", a1},
    {"A2", "phi range", a2},
    {"A3", "royal fiber affinity", a3},
    {"A4", "non-lempert fiber detection", a4},
    {"A5", "bidisc lempertization", a5},
    {"A6", "homotopy endpoints", a6},
    {"A7", "flat recovery", a7},
    {"A8", "royal psi identities", a8},
    {"A9", "image computations", a9},
    {"A10", "cluster discrepancy", a10},
    {"A11", "ball family reduction", a11},
    {"A12", "distance consistency", a12},
    {"A13", "ball cluster values", a13},
    {"A14", "uniqueness audit", a14},
    {"A15", "kobayashi ball identity", a15},
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::vector<Criterion> run_all(std::uint64_t seed) { return run_filtered(seed, ""); }

std::vector<Criterion> run_filtered(std::uint64_t seed, const std::string& only) {
  const std::string needle = lower(only);
  std::vector<Criterion> out;
  for (const Entry& e : kEntries) {
    if (!needle.empty()) {
      const std::string hay = lower(std::string(e.id) + " " + e.title);
      if (hay.find(needle) == std::string::npos) continue;
    }
    Criterion c;
    c.id = e.id;
    c.title = e.title;
    c.report = e.run(seed);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace acceptance
}  // namespace lempert
