#include "check_suites.hpp"

#include <random>
#include <sstream>

#include "tnorder/cost.hpp"
#include "tnorder/error.hpp"
#include "tnorder/generate.hpp"
#include "tnorder/rewrite.hpp"

namespace tnorder::checks {

namespace {

TensorNetwork random_cms0(std::mt19937_64& rng, std::size_t n) {
  RandomNetworkOptions opt;
  opt.vertices = n;
  opt.zero_vertex_weights = true;
  opt.edge_percent = 70;
  return make_random_network(rng, opt);
}

ContractionSequence random_order(std::mt19937_64& rng,
                                 const TensorNetwork& net) {
  std::vector<Group> live;
  for (const auto& [id, _] : net.vertices()) live.push_back(net.members(id));
  ContractionSequence seq;
  while (live.size() > 1) {
    const std::size_t i = rng() % live.size();
    std::size_t j = rng() % (live.size() - 1);
    if (j >= i) ++j;
    seq.steps.push_back({live[i], live[j]});
    Group merged = live[i];
    merged.insert(live[j].begin(), live[j].end());
    live.erase(live.begin() + std::max(i, j));
    live.erase(live.begin() + std::min(i, j));
    live.push_back(std::move(merged));
  }
  return seq;
}

void fail(SuiteResult& result, const std::string& line) {
  ++result.failures;
  if (result.details.size() < 20) result.details.push_back(line);
}

}  // namespace

SuiteResult run_theorem1(const CheckConfig& config) {
  SuiteResult result;
  result.name = "theorem1";
  std::mt19937_64 rng(config.seed);
  for (std::size_t c = 0; c < config.cases; ++c) {
    ++result.cases;
    TensorNetwork net = random_cms0(rng, 3);
    auto ids = net.vertex_ids();
    const Rational edge_total = net.edge_weight(ids[0], ids[1]) +
                                net.edge_weight(ids[0], ids[2]) +
                                net.edge_weight(ids[1], ids[2]);
    bool ok = true;
    for (int pick = 0; pick < 3 && ok; ++pick) {
      ContractionSequence seq;
      seq.steps = {{{ids[pick]}, {ids[(pick + 1) % 3]}},
                   {{ids[pick], ids[(pick + 1) % 3]}, {ids[(pick + 2) % 3]}}};
      CostReport report = evaluate_sequence(net, seq, Objective::pt);
      ok = report.pt == edge_total && report.step_pt[0] == edge_total;
    }
    if (!ok) fail(result, "case " + std::to_string(c) + ": orders diverge");
  }
  return result;
}

SuiteResult run_theorem2(const CheckConfig& config) {
  SuiteResult result;
  result.name = "theorem2";
  std::mt19937_64 rng(config.seed + 1);
  for (std::size_t c = 0; c < config.cases; ++c) {
    ++result.cases;
    TensorNetwork net = random_cms0(rng, 3 + c % 4);
    ContractionSequence seq = random_order(rng, net);
    CostReport report = evaluate_sequence(net, seq, Objective::pt);
    Rational earlier(0);
    for (std::size_t i = 0; i + 1 < report.step_pt.size(); ++i) {
      earlier = std::max(earlier, report.step_pt[i]);
    }
    if (report.step_pt.back() > earlier) {
      fail(result, "case " + std::to_string(c) + ": final step dominates");
    }
  }
  return result;
}

SuiteResult run_theorem3(const CheckConfig& config) {
  SuiteResult result;
  result.name = "theorem3";
  std::mt19937_64 rng(config.seed + 2);
  for (std::size_t c = 0; c < config.cases; ++c) {
    TensorNetwork net = random_cms0(rng, 4 + c % 3);
    ContractionSequence seq = random_order(rng, net);
    const Rational before = evaluate_sequence(net, seq, Objective::pt).pt;
    for (const auto& v : net.vertex_ids()) {
      ++result.cases;
      ContractionSequence moved = make_vertex_last(net, seq, v);
      bool ok = evaluate_sequence(net, moved, Objective::pt).pt == before;
      const ContractionStep& last = moved.steps.back();
      ok = ok && (last.left == Group{v} || last.right == Group{v});
      for (std::size_t i = 0; ok && i + 1 < moved.steps.size(); ++i) {
        ok = !moved.steps[i].left.contains(v) &&
             !moved.steps[i].right.contains(v);
      }
      if (!ok) {
        fail(result, "case " + std::to_string(c) + ": vertex " + v);
      }
    }
  }
  return result;
}

SuiteResult run_theorem4(const CheckConfig& config) {
  SuiteResult result;
  result.name = "theorem4";
  std::mt19937_64 rng(config.seed + 3);
  for (std::size_t c = 0; c < config.cases; ++c) {
    TensorNetwork net = random_cms0(rng, 4 + c % 3);
    ContractionSequence seq = random_order(rng, net);
    const Rational before = evaluate_sequence(net, seq, Objective::pt).pt;
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
      ++result.cases;
      ContractionSequence iso = isolate_step(net, seq, k);
      if (evaluate_sequence(net, iso, Objective::pt).pt != before) {
        fail(result,
             "case " + std::to_string(c) + ": step " + std::to_string(k));
      }
    }
  }
  return result;
}

SuiteResult run_theorem8(const CheckConfig& config) {
  SuiteResult result;
  result.name = "theorem8";
  for (std::size_t n = 2; n <= 4; ++n) {
    ++result.cases;
    TensorNetwork net = make_complete_network(2 * n + 1);
    SolveResult best = solve_dp(net, Objective::pt, config.limits);
    const Rational expected(n * n + 2 * n);
    if (best.optimum_power() != expected) {
      fail(result, "n=" + std::to_string(n) + ": optimum off");
      continue;
    }
    const std::size_t cap = std::max<std::size_t>(config.cases, 100);
    for (const auto& seq :
         enumerate_optimal_sequences(net, Objective::pt, cap, config.limits)) {
      ++result.cases;
      if (!find_structured_step(seq, {1, n, n})) {
        fail(result, "n=" + std::to_string(n) + ": optimal tree lacks (1,n,n)");
      }
    }
  }
  return result;
}

SuiteResult run_corollary3(const CheckConfig& config) {
  SuiteResult result;
  result.name = "corollary3";
  for (std::size_t n = 2; n <= 5; ++n) {
    ++result.cases;
    TensorNetwork net = make_complete_network(2 * n + 1);
    ContractionSequence chain = chain_sequence(net);
    CostReport report = evaluate_sequence(net, chain, Objective::pt);
    const Rational peak(n * n + 2 * n);
    bool ok = report.pt == peak;
    std::size_t peaks = 0;
    for (std::size_t k = 0; ok && k < report.step_pt.size(); ++k) {
      const std::size_t p = k + 1;
      const std::size_t r = 2 * n - 1 - k;
      ok = report.step_pt[k] == Rational(p * 1 + 1 * r + r * p);
      if (ok && report.step_pt[k] == peak) ++peaks;
    }
    ok = ok && peaks == 1 && find_structured_step(chain, {1, n, n}).has_value();
    if (ok && 2 * n + 1 <= config.limits.dp_max_vertices) {
      ok = solve_dp(net, Objective::pt, config.limits).optimum_power() == peak;
    }
    if (!ok) fail(result, "n=" + std::to_string(n));
  }
  return result;
}

std::vector<SuiteResult> run_suites(const std::string& name,
                                    const CheckConfig& config) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if (all || name == "theorem1") out.push_back(run_theorem1(config));
  if (all || name == "theorem2") out.push_back(run_theorem2(config));
  if (all || name == "theorem3") out.push_back(run_theorem3(config));
  if (all || name == "theorem4") out.push_back(run_theorem4(config));
  if (all || name == "theorem8") out.push_back(run_theorem8(config));
  if (all || name == "corollary3") out.push_back(run_corollary3(config));
  if (out.empty()) {
    throw InstanceError("unknown check suite '" + name + "'");
  }
  return out;
}

}  // namespace tnorder::checks
