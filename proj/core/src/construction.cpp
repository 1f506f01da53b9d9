#include "lempert/construction.hpp"

#include <cmath>
#include <sstream>

#include "lempert/contour.hpp"

namespace lempert {

namespace {

constexpr double kContourFloor = 1e-12;

struct CircleSamples {
  std::vector<cplx> phi;  // fiber values at the nodes
  double min_abs;
};

CircleSamples sample_circle(const LempertCandidate& c, const DomainPoint& z, double radius,
                            int nodes) {
  CircleSamples out;
  out.phi.resize(nodes);
  out.min_abs = 1e300;
  for (int k = 0; k < nodes; ++k) {
    const cplx l = std::polar(radius, 2.0 * M_PI * k / nodes);
    out.phi[k] = c.fiber_value(z, l);
    out.min_abs = std::min(out.min_abs, std::abs(out.phi[k]));
  }
  return out;
}

int winding_of(const CircleSamples& s) {
  double total = 0.0;
  const int n = static_cast<int>(s.phi.size());
  for (int k = 0; k < n; ++k) {
    total += std::arg(s.phi[(k + 1) % n] / s.phi[k]);
  }
  return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

// sum of the roots inside, by a Stieltjes sum for 1/(2 pi i) \oint l dlog(phi);
// crude (O(1/N^2)) but only used to seed Newton
cplx root_centroid(const CircleSamples& s, double radius, int count) {
  const int n = static_cast<int>(s.phi.size());
  cplx acc(0.0);
  for (int k = 0; k < n; ++k) {
    const cplx dlog = std::log(std::abs(s.phi[(k + 1) % n]) / std::abs(s.phi[k])) +
                      cplx(0.0, std::arg(s.phi[(k + 1) % n] / s.phi[k]));
    const cplx mid = std::polar(radius, 2.0 * M_PI * (k + 0.5) / n);
    acc += mid * dlog;
  }
  return acc / (cplx(0.0, 2.0 * M_PI) * static_cast<double>(count));
}

}  // namespace

LempertCandidate::LempertCandidate(GeodesicSpec f_, CovectorField v_)
    : f(std::move(f_)), v(std::move(v_)), domain(f.codomain()) {}

void RootSolveConfig::validate() const {
  if (!valid_contour_nodes(contour_nodes))
    throw Error("contour nodes must be a power of two >= 16");
  if (contour_radii.empty()) throw Error("radius schedule is empty");
  double prev = 0.0;
  for (double r : contour_radii) {
    if (!(r > prev && r < 1.0)) throw Error("radius schedule must increase strictly inside (0, 1)");
    prev = r;
  }
  if (!(newton_tolerance > 0.0) || newton_max_iterations < 1)
    throw Error("Newton parameters out of range");
}

int zero_count(const LempertCandidate& c, const DomainPoint& z, double radius, int nodes) {
  if (!valid_contour_nodes(nodes)) throw Error("contour nodes must be a power of two >= 16");
  // Radii beyond 1 are allowed: audits enclose near-boundary roots with a
  // safety margin, and the catalogue fiber maps stay holomorphic there.
  if (!(radius > 0.0 && radius <= 2.0)) throw Error("contour radius must lie in (0, 2]");
  const CircleSamples s = sample_circle(c, z, radius, nodes);
  if (s.min_abs < kContourFloor) {
    std::ostringstream os;
    os << "fiber function vanishes on the contour |l| = " << radius
       << " (min " << s.min_abs << ")";
    throw ZeroOnContour(os.str());
  }
  return winding_of(s);
}

DiscPoint solve_point(const LempertCandidate& c, const DomainPoint& z,
                      const RootSolveConfig& cfg) {
  cfg.validate();

  int grazed = 0;
  for (double radius : cfg.contour_radii) {
    CircleSamples s = sample_circle(c, z, radius, cfg.contour_nodes);
    if (s.min_abs < kContourFloor) {
      ++grazed;  // root sits on this contour; a larger radius will enclose it
      continue;
    }
    const int count = winding_of(s);
    if (count == 0) continue;
    if (count > 1) {
      std::ostringstream os;
      os << count << " roots inside |l| = " << radius << ": uniqueness failure";
      throw MultipleRoots(os.str());
    }

    // one root: argument-principle estimate, then Newton
    cplx l = root_centroid(s, radius, 1);
    if (std::abs(l) > radius) l *= radius / std::abs(l) * 0.99;
    const auto phi = [&](cplx x) { return c.fiber_value(z, x); };
    for (int it = 0; it < cfg.newton_max_iterations; ++it) {
      const cplx val = phi(l);
      if (std::abs(val) <= cfg.newton_tolerance) return DiscPoint(l);
      const double h = 0.5 * (1.0 - std::abs(l));
      if (!(h > 1e-9)) throw NewtonDivergence("iterate pinned against the boundary");
      const cplx deriv = circle_derivative(phi, l, h, 64);
      if (std::abs(deriv) < 1e-16) throw NewtonDivergence("vanishing derivative at iterate");
      cplx step = val / deriv;
      cplx next = l - step;
      // keep iterates inside the disc; halve the step rather than leave
      for (int back = 0; back < 30 && std::abs(next) >= 1.0 - 1e-12; ++back) {
        step *= 0.5;
        next = l - step;
      }
      if (std::abs(next) >= 1.0 - 1e-12)
        throw NewtonDivergence("iterate forced out of the unit disc");
      l = next;
    }
    if (std::abs(phi(l)) <= cfg.newton_tolerance * 10.0) return DiscPoint(l);
    throw NewtonDivergence("Newton did not reach the requested tolerance");
  }

  if (grazed == static_cast<int>(cfg.contour_radii.size()))
    throw ZeroOnContour("fiber function vanished on every contour of the schedule");
  throw NoRootInDisc("no root of (z - f(l)) . v(l) inside the radius schedule");
}

namespace {

class SolverInverse final : public ConstructedInverse {
 public:
  SolverInverse(LempertCandidate c, RootSolveConfig cfg)
      : cand_(std::move(c)), cfg_(std::move(cfg)) {}

  cplx eval(const DomainPoint& z) const override {
    return solve_point(cand_, z, cfg_).value();
  }

  C2 gradient(const DomainPoint& z) const override {
    return numeric_gradient([this](const DomainPoint& w) { return eval(w); },
                            cand_.domain, z);
  }

  DomainModel domain() const override { return cand_.domain; }

  std::string describe() const override {
    return "constructed(" + cand_.f.describe() + "; " + cand_.v.describe() + ")";
  }

 private:
  LempertCandidate cand_;
  RootSolveConfig cfg_;
};

}  // namespace

LeftInverseSpec build_inverse(const LempertCandidate& c, const RootSolveConfig& cfg) {
  cfg.validate();
  return LeftInverseSpec::constructed(std::make_shared<SolverInverse>(c, cfg));
}

ExtensionCertificate extension_certificate(const LempertCandidate& c, cplx l0,
                                           int schedule_len) {
  if (std::abs(std::abs(l0) - 1.0) > 1e-12)
    throw Error("extension certificates are taken at boundary points");
  if (schedule_len < 4) throw Error("schedule too short to extrapolate");
  l0 /= std::abs(l0);

  ExtensionCertificate out;
  out.f_extends = c.f.extends_through_boundary();

  std::vector<cplx> pairings;
  for (int k = 1; k <= schedule_len; ++k) {
    const cplx l = (1.0 - std::ldexp(1.0, -k)) * l0;
    const C2 v = c.v.eval(l);
    out.field_norms.push_back(norm2(v));
    pairings.push_back(dot(v, c.f.derivative(l)));
  }

  // Divergence sniff: |v| growing geometrically along delta_k = 2^{-k}
  const int n = static_cast<int>(out.field_norms.size());
  double growth = 0.0;
  for (int k = n - 3; k < n - 1; ++k)
    growth = std::max(growth, out.field_norms[k + 1] / (out.field_norms[k] + 1e-300));
  out.v_finite = growth < 1.5 && std::isfinite(out.field_norms.back());

  // Richardson on the pairing (ratio-2 geometric schedule, first order and up)
  std::vector<cplx> col(pairings.begin(), pairings.end());
  const int depth = std::min(4, n - 1);
  for (int j = 1; j <= depth; ++j) {
    const double w = std::ldexp(1.0, j);  // 2^j
    for (int i = n - 1; i >= j; --i) col[i] = (w * col[i] - col[i - 1]) / (w - 1.0);
  }
  out.pairing_bound = std::abs(col[n - 1]);
  out.extends = out.v_finite && out.pairing_bound > 1e-6;
  return out;
}

std::vector<DomainPoint> capped_samples(const DomainModel& d, int n, std::uint64_t seed,
                                        double cap) {
  std::vector<DomainPoint> out;
  out.reserve(n);
  std::uint64_t chunk_seed = seed;
  while (static_cast<int>(out.size()) < n) {
    for (const auto& z : d.sample(n, chunk_seed)) {
      if (static_cast<int>(out.size()) == n) break;
      bool ok = true;
      if (d.kind() == DomainKind::Bidisc) {
        ok = std::max(std::abs(z.z1()), std::abs(z.z2())) <= cap;
      } else if (d.kind() == DomainKind::SymBidisc) {
        const auto roots = pair_from_point(z);
        ok = std::max(std::abs(roots[0].value()), std::abs(roots[1].value())) <= cap;
      }
      if (ok) out.push_back(z);
    }
    chunk_seed += 1000003;
  }
  return out;
}

}  // namespace lempert
