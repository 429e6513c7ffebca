#include "indcalc/compare.hpp"
#include "indcalc/compile.hpp"
#include "indcalc/family.hpp"
#include "indcalc/history.hpp"
#include "indcalc/induction.hpp"
#include "indcalc/programs.hpp"
#include "indcalc/realisers.hpp"
#include "indcalc/validate.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace indcalc;

namespace {

BatteryItem item(const std::string& name) {
  for (auto& it : battery())
    if (it.name == name) return it;
  throw std::invalid_argument(name);
}

StepFunctional random_table(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::optional<std::uint64_t>> t(std::size_t{1} << n);
  for (auto& v : t) v = rng() & ((std::uint64_t{1} << n) - 1);
  return StepFunctional(n, t);
}

}  // namespace

static void BM_iterate(benchmark::State& state) {
  auto f = random_table(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(iterate(f));
}
BENCHMARK(BM_iterate)->Arg(4)->Arg(8)->Arg(12);

static void BM_eval(benchmark::State& state) {
  auto it = item("nested-in");
  for (auto _ : state) benchmark::DoNotOptimize(eval_p(it.e, it.env, 1'000'000));
}
BENCHMARK(BM_eval);

static void BM_eval_total(benchmark::State& state) {
  auto it = item("chain");
  for (auto _ : state) benchmark::DoNotOptimize(eval_t(it.e, it.env, 1'000'000));
}
BENCHMARK(BM_eval_total);

static void BM_stage_compare(benchmark::State& state) {
  auto a = item("chain"), b = item("ind-compose");
  for (auto _ : state) benchmark::DoNotOptimize(stage_compare(Comp{a.e, a.env}, Comp{b.e, b.env}));
}
BENCHMARK(BM_stage_compare);

static void BM_compile(benchmark::State& state) {
  auto it = item("ind-compose");
  for (auto _ : state) benchmark::DoNotOptimize(compile_computation(it.e, it.env, it.env.oracles[0], 1'000'000));
}
BENCHMARK(BM_compile);

static void BM_validate(benchmark::State& state) {
  auto it = item("ind-compose");
  auto rep = std::get<Representation>(representation_of(compile_computation(it.e, it.env, it.env.oracles[0], 1'000'000)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_representation(it.e, it.env, rep));
}
BENCHMARK(BM_validate);

static void BM_history(benchmark::State& state) {
  auto it = item("chain");
  auto fam = compiled_family(it.e, it.env, {it.env.oracles[0]});
  for (auto _ : state) benchmark::DoNotOptimize(honest_history(fam, it.env.oracles[0]));
}
BENCHMARK(BM_history);

static void BM_consistency(benchmark::State& state) {
  auto it = item("oracle-compose");
  auto fam = compiled_family(it.e, it.env, oracle_tables(2, it.family_range, it.family_values));
  for (auto _ : state) benchmark::DoNotOptimize(consistency_check(fam.members));
}
BENCHMARK(BM_consistency);

static void BM_pincherle(benchmark::State& state) {
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<std::size_t> t(std::size_t{1} << depth);
  for (auto& v : t) v = rng() % (depth + 1);
  DepthOracle f(depth, t);
  for (auto _ : state) benchmark::DoNotOptimize(pincherle(f));
}
BENCHMARK(BM_pincherle)->Arg(4)->Arg(8)->Arg(14);

static void BM_recover(benchmark::State& state) {
  auto f = random_table(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(recover_pwo(f));
}
BENCHMARK(BM_recover)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
