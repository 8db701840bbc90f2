#include <benchmark/benchmark.h>

#include "nkverify/codazzi/checks.hpp"
#include "nkverify/humfit/fit.hpp"
#include "nkverify/lagrangian/analyzer.hpp"
#include "nkverify/lagrangian/examples.hpp"
#include "nkverify/nkgeom/connection.hpp"

namespace {

using namespace nkv;

void BM_GTensor(benchmark::State& state) {
  const quat::Quaternion p(0.5, 0.5, 0.5, 0.5), q(0.6, 0.0, 0.8, 0.0);
  const nkgeom::PointS3S3 base(p, q);
  const nkgeom::TangentVector x{base, {0.3, -0.2, 0.7}, {0.1, 0.4, -0.5}};
  const nkgeom::TangentVector y{base, {-0.6, 0.2, 0.1}, {0.9, -0.3, 0.2}};
  for (auto _ : state) benchmark::DoNotOptimize(nkgeom::G_tensor(x, y));
}
BENCHMARK(BM_GTensor);

void BM_FrameComponents(benchmark::State& state) {
  const auto imm = *lagrangian::find_builtin("diagonal");
  const lagrangian::Vec3 u(0.1, -0.2, 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(lagrangian::frame_components(imm, u));
}
BENCHMARK(BM_FrameComponents)->Unit(benchmark::kMillisecond);

void BM_CodazziSystemExact(benchmark::State& state) {
  const codazzi::FrameState st({exact::Rational(1), exact::Rational(2), exact::Rational(3)},
                               exact::rat_circle_point(exact::Rational(1, 3)),
                               exact::rat_circle_point(exact::Rational(2, 7)));
  const auto data = st.data();
  for (auto _ : state) {
    const codazzi::CodazziSystem<codazzi::QSqrt3> sys(data);
    benchmark::DoNotOptimize(
        codazzi::solve_triple_system(sys, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}}, codazzi::first_solve_unknowns()));
  }
}
BENCHMARK(BM_CodazziSystemExact)->Unit(benchmark::kMicrosecond);

void BM_Case3Check(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(codazzi::case3_check(7, state.range(0)));
}
BENCHMARK(BM_Case3Check)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HUmbilicalFit(benchmark::State& state) {
  const auto h = humfit::build_h_from_V(Eigen::Vector3d(0.4, -1.1, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(humfit::fit(h));
}
BENCHMARK(BM_HUmbilicalFit)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
