#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hinf/characteristics.hpp"
#include "hinf/gamma_example.hpp"
#include "hinf/halfplane.hpp"
#include "hinf/jones.hpp"
#include "hinf/outer.hpp"
#include "hinf/pick.hpp"
#include "hinf/quadrature.hpp"

using namespace hinf;

namespace {

PointSequence line_sequence(std::size_t n) {
  std::vector<HalfPlanePoint> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts.push_back({-50.0 + 100.0 * double(k) / double(n), 1.0 + 1e-4 * double(k % 97)});
  }
  return PointSequence(std::move(pts));
}

void BlaschkeEval(benchmark::State& state) {
  const PointSequence z = line_sequence(state.range(0));
  const std::complex<double> at{0.3, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(blaschke_eval(z, at));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BlaschkeEval)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void CharacteristicsGeometric(benchmark::State& state) {
  const GammaSequence seq = generate_Zgamma({1.0, int(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_HJ(seq.z_seq).value);
  }
}
BENCHMARK(CharacteristicsGeometric)->Arg(8)->Arg(14)->Arg(20);

void PickBisection(benchmark::State& state) {
  const GammaSequence seq = generate_Zgamma({1.0, int(state.range(0))});
  TargetValues w;
  for (int k : seq.k_of_index) w.values.push_back(std::abs(k) % 2 == 0 ? 1.0 : -1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_norm({seq.z_seq, w}, 1e-8).rho_star);
  }
}
BENCHMARK(PickBisection)->Arg(8)->Arg(14)->Arg(20);

void PsiQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_eval({0.3, 1.7}, 1e-8));
  }
}
BENCHMARK(PsiQuadrature);

void JonesGridCertificate(benchmark::State& state) {
  const PointSequence z({{0.0, 1.0}, {2.0, 0.5}, {-1.0, 3.0}});
  TargetValues w;
  w.values = {{1.0, 0.0}, {-0.5, 0.5}, {0.0, -1.0}};
  const InterpolantSpec spec(z, w, WeightFamily::standard_jones());
  for (auto _ : state) {
    benchmark::DoNotOptimize(norm_certificate(spec).empirical_sup);
  }
}
BENCHMARK(JonesGridCertificate);

}  // namespace

BENCHMARK_MAIN();
