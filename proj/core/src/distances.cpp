#include "lempert/distances.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "lempert/geodesics.hpp"
#include "lempert/hyperbolic.hpp"
#include "lempert/rng.hpp"

namespace lempert {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_queryable(const DomainModel& d, const DomainPoint& w, const DomainPoint& z) {
  if (w.dim() != d.dimension() || z.dim() != d.dimension())
    throw DimensionMismatch("query points do not match the domain dimension");
  if (!d.contains(w) || !d.contains(z)) throw OutsideDomain("query point outside " + d.name());
}

double disc_m(cplx a, cplx b) { return pseudo_distance(DiscPoint(a), DiscPoint(b)); }

cplx psi_value(const DomainPoint& sp, cplx omega) {
  return (2.0 * sp.z2() - omega * sp.z1()) / (2.0 - std::conj(omega) * sp.z1());
}

double psi_gap(const DomainPoint& w, const DomainPoint& z, double theta) {
  const cplx omega = std::polar(1.0, theta);
  return disc_m(psi_value(w, omega), psi_value(z, omega));
}

// maximize a smooth objective over an angle bracket
double golden_max(const std::function<double(double)>& g, double lo, double hi, double tol) {
  const double invphi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > tol) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - invphi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + invphi * (b - a);
      gd = g(d);
    }
  }
  return 0.5 * (a + b);
}

// Moebius disc witness g with g(0) = a, g(reach) = b; assumes reach > 0.
std::function<cplx(cplx)> disc_witness(cplx a, cplx b, double reach) {
  const MobiusMap to_zero(1.0, DiscPoint(a));
  const cplx ratio = to_zero.apply(b) / reach;  // |ratio| <= 1
  const MobiusMap back = to_zero.inverse();
  return [back, ratio](cplx l) { return back.apply(ratio * l); };
}

DiscMapWitness constant_witness(const DomainPoint& w) {
  DiscMapWitness out;
  out.map = [w](cplx) { return w; };
  out.reach = 0.0;
  out.form = "constant";
  return out;
}

}  // namespace

C2 ball_mobius(const C2& a, const C2& z) {
  const double na2 = norm2(a) * norm2(a);
  if (na2 < 1e-30) return {-z[0], -z[1]};
  const cplx inner = z[0] * std::conj(a[0]) + z[1] * std::conj(a[1]);
  const double s = std::sqrt(std::max(0.0, 1.0 - na2));
  const C2 proj = (inner / na2) * a;
  const C2 perp = z - proj;
  const C2 num = a - proj - s * perp;
  return (1.0 / (1.0 - inner)) * num;
}

DistanceResult caratheodory_star(const DomainModel& d, const DomainPoint& w,
                                 const DomainPoint& z) {
  require_queryable(d, w, z);
  DistanceResult out;
  switch (d.kind()) {
    case DomainKind::UnitDisc:
      out.value_star = disc_m(w.z1(), z.z1());
      out.method = "mobius";
      break;
    case DomainKind::Bidisc: {
      const double m1 = disc_m(w.z1(), z.z1());
      const double m2 = disc_m(w.z2(), z.z2());
      out.value_star = std::max(m1, m2);
      out.method = "coordinate-max";
      out.details["coordinate"] = m1 >= m2 ? 1 : 2;
      break;
    }
    case DomainKind::Ball2: {
      const cplx inner = z.z1() * std::conj(w.z1()) + z.z2() * std::conj(w.z2());
      const double nw = norm2(w.as_c2()), nz = norm2(z.as_c2());
      const double q = (1.0 - nw * nw) * (1.0 - nz * nz) / std::norm(1.0 - inner);
      out.value_star = std::sqrt(std::max(0.0, 1.0 - q));
      out.method = "ball-closed-form";
      break;
    }
    case DomainKind::SymBidisc: {
      const auto g = [&](double t) { return psi_gap(w, z, t); };
      const int grid = 256;
      int best = 0;
      double best_val = -1.0;
      for (int k = 0; k < grid; ++k) {
        const double v = g(2.0 * kPi * k / grid);
        if (v > best_val) {
          best_val = v;
          best = k;
        }
      }
      const double step = 2.0 * kPi / grid;
      const double theta = golden_max(g, (best - 1) * step, (best + 1) * step, 1e-10);
      out.value_star = g(theta);
      out.method = "psi-sup";
      double turns = theta / (2.0 * kPi);
      turns -= std::floor(turns);
      out.details["omega_turns"] = turns;
      out.details["grid"] = grid;
      break;
    }
  }
  return out;
}

LempertResult lempert_star(const DomainModel& d, const DomainPoint& w, const DomainPoint& z) {
  require_queryable(d, w, z);
  LempertResult out;

  const bool coincident = [&] {
    for (int i = 0; i < d.dimension(); ++i)
      if (std::abs(w.coord(i) - z.coord(i)) > 0.0) return false;
    return true;
  }();
  if (coincident) {
    out.base.value_star = 0.0;
    out.base.method = "coincident";
    out.witness = constant_witness(w);
    return out;
  }

  switch (d.kind()) {
    case DomainKind::UnitDisc: {
      const double m = disc_m(w.z1(), z.z1());
      out.base.value_star = m;
      out.base.method = "mobius";
      auto g = disc_witness(w.z1(), z.z1(), m);
      out.witness = DiscMapWitness{[g](cplx l) { return DomainPoint(g(l)); }, m, "moebius"};
      break;
    }
    case DomainKind::Bidisc: {
      const double m1 = disc_m(w.z1(), z.z1());
      const double m2 = disc_m(w.z2(), z.z2());
      const double m = std::max(m1, m2);
      out.base.value_star = m;
      out.base.method = "coordinate-max";
      out.base.details["coordinate"] = m1 >= m2 ? 1 : 2;
      auto g1 = disc_witness(w.z1(), z.z1(), m);
      auto g2 = disc_witness(w.z2(), z.z2(), m);
      out.witness = DiscMapWitness{
          [g1, g2](cplx l) { return DomainPoint(g1(l), g2(l)); }, m, "coordinate-moebius"};
      break;
    }
    case DomainKind::Ball2: {
      const C2 a = w.as_c2();
      const C2 img = ball_mobius(a, z.as_c2());
      const double m = norm2(img);
      out.base.value_star = m;
      out.base.method = "ball-slice";
      const C2 dir = (1.0 / m) * img;
      out.witness = DiscMapWitness{
          [a, dir](cplx l) {
            const C2 p = ball_mobius(a, l * dir);
            return DomainPoint(p[0], p[1]);
          },
          m, "ball-slice"};
      break;
    }
    case DomainKind::SymBidisc: {
      const cplx sw = w.z1(), pw = w.z2(), sz = z.z1(), pz = z.z2();
      const bool royal = std::abs(pw - 0.25 * sw * sw) < 1e-10 &&
                         std::abs(pz - 0.25 * sz * sz) < 1e-10;
      if (royal) {
        const cplx lw = 0.5 * sw, lz = 0.5 * sz;
        const double m = disc_m(lw, lz);
        out.base.value_star = m;
        out.base.method = "royal-witness";
        out.base.details["lambda_w_re"] = lw.real();
        out.base.details["lambda_w_im"] = lw.imag();
        out.base.details["lambda_z_re"] = lz.real();
        out.base.details["lambda_z_im"] = lz.imag();
        auto g = disc_witness(lw, lz, m);
        const GeodesicSpec f = GeodesicSpec::royal();
        out.witness = DiscMapWitness{[f, g](cplx l) { return f.eval(g(l)); }, m, "royal"};
        break;
      }
      bool flat = false;
      cplx beta = 0.0;
      if (std::abs(pw - pz) > 1e-12) {
        beta = std::conj((sw - sz) / (pw - pz));
        flat = std::abs(beta) < 1.0 - 1e-12 &&
               std::abs(sw - (beta + std::conj(beta) * pw)) < 1e-10 &&
               std::abs(sz - (beta + std::conj(beta) * pz)) < 1e-10;
      }
      if (flat) {
        const double m = disc_m(pw, pz);
        out.base.value_star = m;
        out.base.method = "flat-witness";
        out.base.details["lambda_w_re"] = pw.real();
        out.base.details["lambda_w_im"] = pw.imag();
        out.base.details["lambda_z_re"] = pz.real();
        out.base.details["lambda_z_im"] = pz.imag();
        auto g = disc_witness(pw, pz, m);
        const GeodesicSpec f = GeodesicSpec::flat(beta);
        out.witness = DiscMapWitness{[f, g](cplx l) { return f.eval(g(l)); }, m, "flat"};
        break;
      }
      out.base = caratheodory_star(d, w, z);
      out.base.method = "lempert-equality";
      break;
    }
  }
  return out;
}

VerificationReport distance_consistency(const DomainModel& d, int n_pairs, std::uint64_t seed,
                                        double tolerance) {
  if (n_pairs < 1) throw Error("need at least one pair");

  std::vector<std::pair<DomainPoint, DomainPoint>> pairs;
  const auto generic = d.sample(2 * n_pairs, seed);
  for (int i = 0; i < n_pairs; ++i) pairs.emplace_back(generic[2 * i], generic[2 * i + 1]);
  if (d.kind() == DomainKind::SymBidisc) {
    // add pairs lying on catalogue geodesics so the witness path is exercised
    SampleRng rng(seed + 1);
    const GeodesicSpec royal = GeodesicSpec::royal();
    for (int i = 0; i < n_pairs; ++i)
      pairs.emplace_back(royal.eval(rng.in_disc()), royal.eval(rng.in_disc()));
    for (int i = 0; i < n_pairs; ++i) {
      const GeodesicSpec f = GeodesicSpec::flat(rng.in_disc());
      pairs.emplace_back(f.eval(rng.in_disc()), f.eval(rng.in_disc()));
    }
  }

  double min_l_minus_c = 1e300, max_witness_gap = 0.0, max_witness_residual = 0.0;
  int witness_pairs = 0;
  auto coord_gap = [&](const DomainPoint& a, const DomainPoint& b) {
    double g = 0.0;
    for (int i = 0; i < d.dimension(); ++i) g = std::max(g, std::abs(a.coord(i) - b.coord(i)));
    return g;
  };
  for (const auto& [w, z] : pairs) {
    const DistanceResult c = caratheodory_star(d, w, z);
    const LempertResult l = lempert_star(d, w, z);
    const double gap = l.base.value_star - c.value_star;
    min_l_minus_c = std::min(min_l_minus_c, gap);
    if (!l.witness) continue;
    ++witness_pairs;
    max_witness_gap = std::max(max_witness_gap, std::abs(gap));
    max_witness_residual = std::max(max_witness_residual, coord_gap(l.witness->map(0.0), w));
    max_witness_residual =
        std::max(max_witness_residual, coord_gap(l.witness->map(l.witness->reach), z));
  }

  VerificationReport r;
  r.check_name = "distance_consistency";
  r.inputs = {{"domain", d.name()}};
  r.seed = seed;
  r.tolerance = tolerance;
  r.metrics["pairs"] = pairs.size();
  r.metrics["witness_pairs"] = witness_pairs;
  r.metrics["min_l_minus_c"] = min_l_minus_c;
  r.metrics["max_witness_gap"] = max_witness_gap;
  r.metrics["max_witness_residual"] = max_witness_residual;
  r.pass = min_l_minus_c >= -1e-9 && max_witness_gap < tolerance &&
           max_witness_residual < 1e-8;
  return r;
}

}  // namespace lempert
