#include <benchmark/benchmark.h>

#include "lempert/construction.hpp"
#include "lempert/covector.hpp"
#include "lempert/distances.hpp"
#include "lempert/domains.hpp"
#include "lempert/geodesics.hpp"
#include "lempert/inverses.hpp"

using namespace lempert;

namespace {

LempertCandidate affine_candidate() {
  const auto diag = GeodesicSpec::diagonal();
  auto v = normalize_field(
      CovectorField::analytic([](cplx) { return C2{cplx(0.5), cplx(0.5)}; }, "midpoint"),
      diag);
  return {diag, std::move(v)};
}

void solve_affine_point(benchmark::State& state) {
  const LempertCandidate c = affine_candidate();
  const DomainPoint z{cplx(0.2, 0.1), cplx(-0.4, 0.3)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_point(c, z));
}
BENCHMARK(solve_affine_point);

void caratheodory_g2_pair(benchmark::State& state) {
  const DomainModel g2(DomainKind::SymBidisc);
  const DomainPoint w{cplx(0.1, 0.2), cplx(-0.1, 0.05)};
  const DomainPoint z{cplx(0.5), cplx(0.3)};
  for (auto _ : state) benchmark::DoNotOptimize(caratheodory_star(g2, w, z));
}
BENCHMARK(caratheodory_g2_pair);

void phi_numeric_gradient(benchmark::State& state) {
  const DomainModel g2(DomainKind::SymBidisc);
  const auto phi = LeftInverseSpec::royal_phi();
  const DomainPoint z{cplx(0.5), cplx(0.3)};
  const auto eval = [&](const DomainPoint& w) { return phi.eval(w); };
  for (auto _ : state) benchmark::DoNotOptimize(numeric_gradient(eval, g2, z));
}
BENCHMARK(phi_numeric_gradient);

}  // namespace

BENCHMARK_MAIN();
