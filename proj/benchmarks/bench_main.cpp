#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "ltsconf/ltsconf.hpp"

using namespace ltsconf;

namespace {

RuleSystem rules(const char* name) {
  std::ifstream in(std::string(LTSCONF_FIXTURES) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str());
}

// A ring of n states alternating a/b transitions with a few chords.
Lts ring(unsigned n) {
  std::vector<StateId> states;
  std::vector<Transition> ts;
  for (unsigned i = 0; i < n; ++i) {
    states.push_back(i);
    ts.push_back({i, Label::plain(i % 2 ? "b" : "a"), (i + 1) % n});
    if (i % 5 == 0) ts.push_back({i, Label::plain("d"), (i + 3) % n});
  }
  return Lts(states, ts);
}

void BM_DetectChainLoop(benchmark::State& state) {
  auto sys = rules("chain_loop.rules");
  for (auto _ : state) benchmark::DoNotOptimize(detect_critical_pairs(sys.rules[0], sys.rules[1]));
}
BENCHMARK(BM_DetectChainLoop);

void BM_OracleChainLoop(benchmark::State& state) {
  auto sys = rules("chain_loop.rules");
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::oracle_critical_pairs(sys.rules[0], sys.rules[1]));
  }
}
BENCHMARK(BM_OracleChainLoop);

void BM_DetectBoundary(benchmark::State& state) {
  auto sys = rules("boundary.rules");
  for (auto _ : state) benchmark::DoNotOptimize(detect_critical_pairs(sys.rules[0], sys.rules[1]));
}
BENCHMARK(BM_DetectBoundary);

void BM_OracleBoundary(benchmark::State& state) {
  auto sys = rules("boundary.rules");
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::oracle_critical_pairs(sys.rules[0], sys.rules[1]));
  }
}
BENCHMARK(BM_OracleBoundary);

void BM_MatchRing(benchmark::State& state) {
  auto sys = rules("chain_loop.rules");
  Lts host = ring(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_matches(sys.rules[0], host));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatchRing)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CheckTriangle(benchmark::State& state) {
  auto sys = rules("triangle.rules");
  for (auto _ : state) benchmark::DoNotOptimize(check_confluence(sys));
}
BENCHMARK(BM_CheckTriangle);

void BM_NormalFormsRing(benchmark::State& state) {
  auto sys = rules("triangle.rules");
  Lts host = ring(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derive_normal_forms(host, sys));
}
BENCHMARK(BM_NormalFormsRing)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
