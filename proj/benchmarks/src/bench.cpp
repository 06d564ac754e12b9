#include <benchmark/benchmark.h>

#include <string>

#include "siacp/analysis/bisim.hpp"
#include "siacp/analysis/traces.hpp"
#include "siacp/frontend/parser.hpp"
#include "siacp/rewrite/eliminate.hpp"
#include "siacp/rewrite/reduce.hpp"
#include "siacp/sos/lts.hpp"
#include "siacp/strategy/round_robin.hpp"
#include "siacp/strategy/semaphore.hpp"

namespace {

using namespace siacp;

struct MutexSystem {
  SystemConfig cfg;
  strategy::StrategyPtr strat;
  Term term;
  std::vector<analysis::MutexRegion> regions;
};

// n processes P_r . enter_i . exit_i . V_r . eps, each repeated `rounds` times.
MutexSystem mutex_system(int n, int rounds) {
  MutexSystem m;
  m.strat = strategy::sem_strategy(1, {"r"}, strategy::TurnsConvention::Prose);
  strategy::declare_semaphores(m.cfg, {"r"});
  analysis::MutexRegion region{"r", {}, {}};
  std::string src = "si[" + std::to_string(n) + "; ; init](";
  for (int i = 1; i <= n; ++i) {
    const std::string in = "enter" + std::to_string(i), out = "exit" + std::to_string(i);
    m.cfg.declare(in);
    m.cfg.declare(out);
    region.enter_actions[i] = in;
    region.exit_actions[i] = out;
    if (i > 1) src += ", ";
    for (int k = 0; k < rounds; ++k) src += "P_r . " + in + " . " + out + " . V_r . ";
    src += "eps";
  }
  src += ")";
  m.term = frontend::parse_term(src, m.cfg, *m.strat);
  m.regions = {region};
  return m;
}

void BM_MutexLts(benchmark::State& state) {
  const auto m = mutex_system(static_cast<int>(state.range(0)), 2);
  std::size_t states = 0;
  for (auto _ : state) {
    const auto l = sos::build_lts(m.term, m.cfg, *m.strat);
    states = l.size();
    benchmark::DoNotOptimize(l);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_MutexLts)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CheckMutex(benchmark::State& state) {
  const auto m = mutex_system(static_cast<int>(state.range(0)), 2);
  const auto l = sos::build_lts(m.term, m.cfg, *m.strat);
  for (auto _ : state) benchmark::DoNotOptimize(analysis::check_mutex(l, m.regions));
}
BENCHMARK(BM_CheckMutex)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

// Free merge of n two-step processes: the state space grows as 3^n.
Term free_merge(int n, SystemConfig& cfg) {
  std::string src;
  for (int i = 1; i <= n; ++i) {
    const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    cfg.declare(a);
    cfg.declare(b);
    if (i > 1) src = "(" + src + ") || ";
    src += a + " . " + b;
  }
  return frontend::parse_term(src, cfg, *strategy::rr_strategy());
}

void BM_Minimize(benchmark::State& state) {
  SystemConfig cfg;
  const auto rr = strategy::rr_strategy();
  const auto l = sos::build_lts(free_merge(static_cast<int>(state.range(0)), cfg), cfg, *rr);
  for (auto _ : state) benchmark::DoNotOptimize(analysis::minimize(l));
  state.counters["states"] = static_cast<double>(l.size());
}
BENCHMARK(BM_Minimize)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_Eliminate(benchmark::State& state) {
  SystemConfig cfg;
  const auto rr = strategy::rr_strategy();
  const Term t = free_merge(static_cast<int>(state.range(0)), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite::eliminate(t, cfg, *rr));
}
BENCHMARK(BM_Eliminate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& state) {
  const auto m = mutex_system(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite::reduce_spec(m.term, m.cfg, *m.strat));
}
BENCHMARK(BM_Reduce)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
