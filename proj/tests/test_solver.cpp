#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/helpers.hpp"
#include "tnorder/error.hpp"
#include "tnorder/generate.hpp"
#include "tnorder/solver.hpp"

using namespace tnorder;

TEST_CASE("the OMS and CMS optima of the diverging example differ in shape") {
  TensorNetwork mult = tntest::load_network("figure4b.json");
  SolveResult oms = solve_dp(mult, Objective::opn);
  CHECK(oms.optimum_opn() == BigInt("100009900000000"));
  // Optimal contraction pairs B with C first.
  CHECK(oms.sequence.steps.front() == ContractionStep{{"B"}, {"C"}});
  CHECK(count_optimal_sequences(mult, Objective::opn) == 1);

  TensorNetwork add = tntest::load_network("figure4c.json");
  SolveResult cms = solve_dp(add, Objective::pt);
  CHECK(cms.optimum_power() ==
        12 + Rational("997817597299/500000000000"));
  // (A,B) or (A,C) first; ties resolve to the smallest bitmask.
  CHECK(cms.sequence.steps.front() == ContractionStep{{"A"}, {"B"}});
  CHECK(cms.sequence.steps.front() != oms.sequence.steps.front());
}

TEST_CASE("complete graphs on 2n+1 vertices reach n^2 + 2n") {
  for (std::size_t n : {2, 3}) {
    TensorNetwork net = make_complete_network(2 * n + 1);
    SolveResult res = solve_dp(net, Objective::pt);
    CHECK(res.optimum_power() == Rational(n * n + 2 * n));
    CHECK(find_structured_step(res.sequence, {1, n, n}).has_value());
  }
  // n = 2 cross-checked by the independent brute force.
  TensorNetwork k5 = make_complete_network(5);
  CHECK(brute_force(k5, Objective::pt).optimum_power() == 8);
}

TEST_CASE("the worked example's chain is an upper bound for its optimum") {
  TensorNetwork net = tntest::load_network("figure2.json");
  SolveResult slow = brute_force(net, Objective::opn);
  CHECK(slow.optimum_opn() <= 96875);
  CHECK(slow.optimum_opn() == solve_dp(net, Objective::opn).optimum_opn());
}

TEST_CASE("a two-vertex network has the single one-step sequence") {
  TensorNetwork net(Representation::additive);
  net.add_vertex("a", 1);
  net.add_vertex("b", 2);
  net.add_edge("a", "b", 3);
  for (auto objective : {Objective::pt, Objective::ps}) {
    SolveResult res = brute_force(net, objective);
    REQUIRE(res.sequence.steps.size() == 1);
    CHECK(res.sequence.steps[0] == ContractionStep{{"a"}, {"b"}});
  }
  CHECK(solve_dp(net, Objective::pt).optimum_power() == 6);
}

TEST_CASE("solver limits and objective guards") {
  TensorNetwork big = make_complete_network(9);
  CHECK_THROWS_AS(brute_force(big, Objective::pt), LimitError);
  SolverLimits tight;
  tight.dp_max_vertices = 5;
  CHECK_THROWS_AS(solve_dp(make_complete_network(6), Objective::pt, tight),
                  LimitError);
  CHECK_THROWS_AS(solve_dp(make_complete_network(4), Objective::ps),
                  NetworkError);
  CHECK_THROWS_AS(solve_dp(make_complete_network(4), Objective::opn),
                  NetworkError);
  TensorNetwork single(Representation::additive);
  single.add_vertex("a", 0);
  CHECK_THROWS_AS(solve_dp(single, Objective::pt), NetworkError);
}

TEST_CASE("oracle equivalence on random networks") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    RandomNetworkOptions opt;
    opt.vertices = 4 + trial % 3;  // 4..6
    opt.representation = trial % 2 ? Representation::multiplicative
                                   : Representation::additive;
    TensorNetwork net = make_random_network(rng, opt);
    const Objective objective =
        trial % 2 ? Objective::opn : Objective::pt;
    SolveResult fast = solve_dp(net, objective);
    SolveResult slow = brute_force(net, objective);
    CHECK(fast.optimum == slow.optimum);
  }
}

TEST_CASE("solving a mid-contraction state keeps original-id groups") {
  TensorNetwork net = tntest::load_network("figure2.json");
  TensorNetwork mid = contract_pair(net, "A", "B").first;
  SolveResult res = solve_dp(mid, Objective::opn);
  CHECK(evaluate_sequence(mid, res.sequence, Objective::opn).total_opn ==
        res.optimum_opn());
  for (const auto& step : res.sequence.steps) {
    for (const Group* side : {&step.left, &step.right}) {
      for (const auto& id : *side) {
        CHECK(Group{"A", "B", "C", "D"}.contains(id));
      }
    }
  }
}

TEST_CASE("oracle equivalence holds on sparse and disconnected networks") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 40; ++trial) {
    RandomNetworkOptions opt;
    opt.vertices = 5;
    opt.edge_percent = trial % 2 ? 20 : 0;  // often disconnected
    opt.representation = trial % 4 < 2 ? Representation::additive
                                       : Representation::multiplicative;
    TensorNetwork net = make_random_network(rng, opt);
    const Objective objective =
        opt.representation == Representation::additive ? Objective::pt
                                                       : Objective::opn;
    CHECK(solve_dp(net, objective).optimum ==
          brute_force(net, objective).optimum);
  }
}

TEST_CASE("returned sequences re-evaluate to the reported optimum") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    RandomNetworkOptions opt;
    opt.vertices = 5;
    opt.representation = trial % 2 ? Representation::multiplicative
                                   : Representation::additive;
    TensorNetwork net = make_random_network(rng, opt);
    if (trial % 2) {
      SolveResult res = solve_dp(net, Objective::opn);
      CHECK(evaluate_sequence(net, res.sequence, Objective::opn).total_opn ==
            res.optimum_opn());
    } else {
      SolveResult dp = solve_dp(net, Objective::pt);
      CHECK(evaluate_sequence(net, dp.sequence, Objective::pt).pt ==
            dp.optimum_power());
      SolveResult ps = brute_force(net, Objective::ps);
      CHECK(evaluate_sequence(net, ps.sequence, Objective::ps).ps ==
            ps.optimum_power());
    }
  }
}

TEST_CASE("space power optimum is never above other sequences") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    RandomNetworkOptions opt;
    opt.vertices = 5;
    TensorNetwork net = make_random_network(rng, opt);
    SolveResult best = brute_force(net, Objective::ps);
    for (int probe = 0; probe < 5; ++probe) {
      ContractionSequence seq = tntest::random_sequence(rng, net);
      CHECK(best.optimum_power() <=
            evaluate_sequence(net, seq, Objective::ps).ps);
    }
  }
}

TEST_CASE("adding edge weight never lowers the time-power optimum") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    RandomNetworkOptions opt;
    opt.vertices = 5;
    TensorNetwork net = make_random_network(rng, opt);
    if (net.edge_count() == 0) continue;
    const Rational before = solve_dp(net, Objective::pt).optimum_power();

    // Rebuild with one edge bumped.
    std::size_t pick = rng() % net.edge_count();
    TensorNetwork bumped(Representation::additive);
    for (const auto& [id, w] : net.vertices()) bumped.add_vertex(id, w);
    std::size_t at = 0;
    for (const auto& [key, w] : net.edges()) {
      bumped.add_edge(key.a, key.b, at++ == pick ? w + 2 : w);
    }
    CHECK(solve_dp(bumped, Objective::pt).optimum_power() >= before);
  }
}

TEST_CASE("find_structured_step locates decompositions by size multiset") {
  TensorNetwork k5 = make_complete_network(5);
  ContractionSequence chain;
  chain.steps = {{{"v0"}, {"v1"}},
                 {{"v0", "v1"}, {"v2"}},
                 {{"v0", "v1", "v2"}, {"v3"}},
                 {{"v0", "v1", "v2", "v3"}, {"v4"}}};
  auto triple = find_structured_step(chain, {1, 2, 2});
  REQUIRE(triple.has_value());
  CHECK(triple->p == Group{"v0", "v1"});
  CHECK(triple->q == Group{"v2"});
  CHECK(triple->r == Group{"v3", "v4"});

  ContractionSequence balanced;
  balanced.steps = {{{"v0"}, {"v1"}},
                    {{"v2"}, {"v3"}},
                    {{"v0", "v1"}, {"v2", "v3"}}};
  auto first = find_structured_step(balanced, {1, 1, 2});
  REQUIRE(first.has_value());
  CHECK(first->p == Group{"v0"});
  CHECK(find_structured_step(balanced, {4, 1, 1}) == std::nullopt);

  // K_7 optimum contains a (1,3,3) decomposition.
  SolveResult k7 = solve_dp(make_complete_network(7), Objective::pt);
  CHECK(find_structured_step(k7.sequence, {1, 3, 3}).has_value());
}

TEST_CASE("optimal tree enumeration is exhaustive at small sizes") {
  // 3 zero-weight vertices with equal edges: all three trees are optimal.
  TensorNetwork k3 = make_complete_network(3);
  CHECK(count_optimal_sequences(k3, Objective::pt) == 3);
  auto all = enumerate_optimal_sequences(k3, Objective::pt, 10);
  CHECK(all.size() == 3);
  for (const auto& seq : all) {
    CHECK(evaluate_sequence(k3, seq, Objective::pt).pt == 3);
  }

  // The enumeration cap is honored.
  CHECK(enumerate_optimal_sequences(k3, Objective::pt, 2).size() == 2);

  // Counting matches brute-force tallying on random instances, and the
  // first enumerated tree is the solver's deterministic pick.
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    RandomNetworkOptions opt;
    opt.vertices = 4;
    TensorNetwork net = make_random_network(rng, opt);
    SolveResult best = solve_dp(net, Objective::pt);
    auto optima = enumerate_optimal_sequences(net, Objective::pt, 1000);
    CHECK(BigInt(optima.size()) ==
          count_optimal_sequences(net, Objective::pt));
    REQUIRE(!optima.empty());
    CHECK(optima.front() == best.sequence);
    for (const auto& seq : optima) {
      CHECK(evaluate_sequence(net, seq, Objective::pt).pt ==
            best.optimum_power());
    }
  }
}
