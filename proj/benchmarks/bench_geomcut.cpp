#include <benchmark/benchmark.h>

#include <geomcut/arrangement.hpp>
#include <geomcut/cut_solvers.hpp>
#include <geomcut/dual_graph.hpp>
#include <geomcut/fence.hpp>
#include <geomcut/generators.hpp>
#include <geomcut/steiner_dp.hpp>
#include <geomcut/visibility.hpp>

#include <string>

using namespace geomcut;

namespace {

Instance random_instance(int objects, int colors, std::uint64_t seed = 3) {
  RandomParams params;
  params.seed = seed;
  params.num_objects = objects;
  params.num_colors = colors;
  params.coordinate_range = 10;
  return gen_random(params);
}

void BM_SegmentIntersection(benchmark::State& state) {
  const Segment s{{Rational(0), Rational(0)}, {Rational(7, 3), Rational(5)}};
  const Segment t{{Rational(0), Rational(5)}, {Rational(3), Rational(1, 7)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(segment_intersection(s, t));
  }
}
BENCHMARK(BM_SegmentIntersection);

void BM_PointInPolygon(benchmark::State& state) {
  const Instance inst = gen_lower_bound(1, 0.01);
  const Point p{Rational(1), Rational(1, 2)};
  for (auto _ : state) {
    for (const auto& obj : inst.objects)
      benchmark::DoNotOptimize(point_in_polygon(p, obj));
  }
}
BENCHMARK(BM_PointInPolygon);

void BM_FreeSegments(benchmark::State& state) {
  const Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_segments(inst));
  }
}
BENCHMARK(BM_FreeSegments)->Arg(2)->Arg(4)->Arg(6);

void BM_BuildArrangement(benchmark::State& state) {
  const Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
  const auto set = free_segments(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_arrangement(set.segments));
  }
}
BENCHMARK(BM_BuildArrangement)->Arg(2)->Arg(4)->Arg(6);

void BM_Pipeline(benchmark::State& state) {
  const Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_pipeline(inst));
  }
}
BENCHMARK(BM_Pipeline)->Arg(2)->Arg(4);

void BM_SolveTwoColors(benchmark::State& state) {
  const Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_instance(inst));
  }
}
BENCHMARK(BM_SolveTwoColors)->Arg(2)->Arg(4);

void BM_SolveThreeColors(benchmark::State& state) {
  const Instance inst = random_instance(4, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_instance(inst));
  }
}
BENCHMARK(BM_SolveThreeColors);

void BM_MaxFlow(benchmark::State& state) {
  const Pipeline pipe = build_pipeline(random_instance(5, 2, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        max_flow_min_cut(pipe.dual, pipe.dual.terminals[0],
                         pipe.dual.terminals[1]));
  }
}
BENCHMARK(BM_MaxFlow);

void BM_ExhaustiveLabeling(benchmark::State& state) {
  // Pick a seed whose dual is small enough for the exhaustive solver.
  Pipeline pipe;
  for (std::uint64_t seed = 1;; ++seed) {
    pipe = build_pipeline(random_instance(3, 2, seed));
    if (pipe.arr.faces.size() <= 18) break;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_labeling(pipe.dual, 2));
  }
}
BENCHMARK(BM_ExhaustiveLabeling);

void BM_TreeDuplication(benchmark::State& state) {
  std::string text = "1";
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    text = "1 ( " + text + " 1 )";
  const auto tree = parse_tree(text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_duplication(tree));
  }
}
BENCHMARK(BM_TreeDuplication)->Arg(8)->Arg(64)->Arg(512);

void BM_GenLowerBound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gen_lower_bound(static_cast<int>(state.range(0)), 0.01));
  }
}
BENCHMARK(BM_GenLowerBound)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
