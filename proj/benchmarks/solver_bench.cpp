#include <benchmark/benchmark.h>

#include <random>

#include "tnorder/generate.hpp"
#include "tnorder/reduction.hpp"
#include "tnorder/rewrite.hpp"
#include "tnorder/solver.hpp"

using namespace tnorder;

namespace {

TensorNetwork dense_net(std::size_t n, Representation rep) {
  std::mt19937_64 rng(7);
  RandomNetworkOptions opt;
  opt.vertices = n;
  opt.representation = rep;
  opt.edge_percent = 80;
  opt.max_weight = rep == Representation::additive ? 9 : 6;
  return make_random_network(rng, opt);
}

}  // namespace

static void BM_SolveDpPt(benchmark::State& state) {
  TensorNetwork net = dense_net(state.range(0), Representation::additive);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_dp(net, Objective::pt));
  }
}
BENCHMARK(BM_SolveDpPt)->Arg(6)->Arg(9)->Arg(12);

static void BM_SolveDpOpn(benchmark::State& state) {
  TensorNetwork net = dense_net(state.range(0), Representation::multiplicative);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_dp(net, Objective::opn));
  }
}
BENCHMARK(BM_SolveDpOpn)->Arg(6)->Arg(9)->Arg(12);

static void BM_BruteForcePt(benchmark::State& state) {
  TensorNetwork net = dense_net(state.range(0), Representation::additive);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(net, Objective::pt));
  }
}
BENCHMARK(BM_BruteForcePt)->Arg(5)->Arg(6)->Arg(7);

static void BM_EvaluateChain(benchmark::State& state) {
  TensorNetwork net = make_complete_network(state.range(0));
  ContractionSequence chain = chain_sequence(net);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_sequence(net, chain, Objective::pt));
  }
}
BENCHMARK(BM_EvaluateChain)->Arg(9)->Arg(13);

static void BM_PartitionGadgetDecide(benchmark::State& state) {
  // Equal items guarantee an even total, so the full DP always runs.
  std::vector<BigInt> items(state.range(0), BigInt(4));
  ExactPartitionInstance inst{items};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_exact_partition(exact_to_cms0(inst)));
  }
}
BENCHMARK(BM_PartitionGadgetDecide)->Arg(6)->Arg(8)->Arg(10);

static void BM_StarOmsDecide(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::vector<BigInt> items;
  for (int i = 0; i < state.range(0); ++i) {
    items.push_back(BigInt(1 + rng() % 7));
  }
  SppfToOmsStarCertificate cert = sppf_to_oms_star(SPPFInstance{items});
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_sppf(cert));
  }
}
BENCHMARK(BM_StarOmsDecide)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
