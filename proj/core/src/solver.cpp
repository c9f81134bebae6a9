#include "tnorder/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>

#include "tnorder/error.hpp"

namespace tnorder {

namespace {

using Mask = std::uint32_t;

int lowest_index(Mask m) { return std::countr_zero(m); }

// Dense indexed view of a network for bitmask work.
struct Indexed {
  std::vector<VertexId> ids;
  std::vector<Group> groups;  // member set per index
  std::size_t n = 0;

  explicit Indexed(const TensorNetwork& net) {
    ids = net.vertex_ids();
    n = ids.size();
    groups.reserve(n);
    for (const auto& id : ids) groups.push_back(net.members(id));
  }

  Group group_of(Mask mask) const {
    Group out;
    for (Mask m = mask; m; m &= m - 1) {
      const Group& g = groups[lowest_index(m)];
      out.insert(g.begin(), g.end());
    }
    return out;
  }
};

void check_dp_input(const TensorNetwork& net, Objective objective,
                    const SolverLimits& limits) {
  if (objective == Objective::ps) {
    throw NetworkError("no exact DP is provided for space power; use brute_force");
  }
  const bool additive = net.representation() == Representation::additive;
  if ((objective == Objective::opn) == additive) {
    throw NetworkError("objective does not match the network representation");
  }
  if (net.vertex_count() < 2) {
    throw NetworkError("need at least 2 vertices to contract");
  }
  if (net.vertex_count() > limits.dp_max_vertices) {
    throw LimitError("network exceeds dp_max_vertices = " +
                     std::to_string(limits.dp_max_vertices));
  }
}

// Subset tables for the additive objective. Values are doubled time powers
// so the P_T identity 2*P_T(P,Q) = WD(P) + WD(Q) + WD(P+Q) stays integral
// in the rationals until the final halving.
struct PtTables {
  std::vector<Rational> wd_mask;

  PtTables(const TensorNetwork& net, const Indexed& ix) {
    const std::size_t n = ix.n;
    std::vector<std::vector<Rational>> pair(n, std::vector<Rational>(n, 0));
    for (const auto& [key, weight] : net.edges()) {
      auto ia = std::lower_bound(ix.ids.begin(), ix.ids.end(), key.a) -
                ix.ids.begin();
      auto ib = std::lower_bound(ix.ids.begin(), ix.ids.end(), key.b) -
                ix.ids.begin();
      pair[ia][ib] = weight;
      pair[ib][ia] = weight;
    }
    std::vector<Rational> wd1(n);
    for (std::size_t i = 0; i < n; ++i) {
      wd1[i] = net.vertex_weight(ix.ids[i]);
      for (std::size_t j = 0; j < n; ++j) wd1[i] += pair[i][j];
    }
    wd_mask.assign(std::size_t(1) << n, Rational(0));
    for (Mask mask = 1; mask < wd_mask.size(); ++mask) {
      const int v = lowest_index(mask);
      const Mask rest = mask & (mask - 1);
      if (!rest) {
        wd_mask[mask] = wd1[v];
        continue;
      }
      Rational cross(0);
      for (Mask m = rest; m; m &= m - 1) cross += pair[v][lowest_index(m)];
      wd_mask[mask] = wd_mask[rest] + wd1[v] - 2 * cross;
    }
  }

  // 2 * P_T of contracting P with Q, S = P | Q.
  Rational doubled_step(Mask p, Mask q, Mask s) const {
    return wd_mask[p] + wd_mask[q] + wd_mask[s];
  }
};

// Subset tables for the multiplicative objective.
struct OpnTables {
  std::size_t n;
  std::vector<BigInt> vertex_product;           // prod of vertex weights in S
  std::vector<BigInt> boundary_product;         // prod of edges leaving S
  std::vector<std::vector<BigInt>> cross_table;  // [v][mask] prod of v-mask edges

  OpnTables(const TensorNetwork& net, const Indexed& ix) : n(ix.n) {
    std::vector<std::vector<BigInt>> pair(n, std::vector<BigInt>(n, 1));
    for (const auto& [key, weight] : net.edges()) {
      auto ia = std::lower_bound(ix.ids.begin(), ix.ids.end(), key.a) -
                ix.ids.begin();
      auto ib = std::lower_bound(ix.ids.begin(), ix.ids.end(), key.b) -
                ix.ids.begin();
      BigInt w = boost::multiprecision::numerator(weight);
      pair[ia][ib] = w;
      pair[ib][ia] = std::move(w);
    }
    const std::size_t size = std::size_t(1) << n;
    cross_table.assign(n, std::vector<BigInt>(size, 1));
    for (std::size_t v = 0; v < n; ++v) {
      for (Mask mask = 1; mask < size; ++mask) {
        cross_table[v][mask] =
            cross_table[v][mask & (mask - 1)] * pair[v][lowest_index(mask)];
      }
    }
    vertex_product.assign(size, BigInt(1));
    for (Mask mask = 1; mask < size; ++mask) {
      const int v = lowest_index(mask);
      vertex_product[mask] =
          vertex_product[mask & (mask - 1)] *
          boost::multiprecision::numerator(net.vertex_weight(ix.ids[v]));
    }
    const Mask full = Mask(size - 1);
    boundary_product.assign(size, BigInt(1));
    for (Mask mask = 1; mask < size; ++mask) {
      BigInt acc(1);
      const Mask outside = full & ~mask;
      for (Mask m = mask; m; m &= m - 1) {
        acc *= cross_table[lowest_index(m)][outside];
      }
      boundary_product[mask] = std::move(acc);
    }
  }

  // OPN of contracting P with Q: both group weights times every involved
  // edge (P-Q once, plus all edges leaving S = P | Q).
  BigInt step(Mask p, Mask q, Mask s) const {
    Mask small = p, large = q;
    if (std::popcount(small) > std::popcount(large)) std::swap(small, large);
    BigInt between(1);
    for (Mask m = small; m; m &= m - 1) {
      between *= cross_table[lowest_index(m)][large];
    }
    return vertex_product[s] * boundary_product[s] * between;
  }
};

template <typename Value>
struct DpOutcome {
  std::vector<Value> best;
  std::vector<Mask> best_split;                // smallest optimal P per mask
  std::vector<std::vector<Mask>> all_splits;   // filled when collect_all
};

// Shared subset DP. StepFn(p, q, s) yields the step cost; Combine is max
// for PT and plus for OPN. Bipartitions are enumerated with P containing
// the lowest vertex of S, submasks ascending, so the first optimum found
// is the lexicographically smallest split.
template <typename Value, typename StepFn, typename Combine>
DpOutcome<Value> run_dp(std::size_t n, StepFn step, Combine combine,
                        bool collect_all) {
  const std::size_t size = std::size_t(1) << n;
  DpOutcome<Value> out;
  out.best.assign(size, Value(0));
  out.best_split.assign(size, 0);
  if (collect_all) out.all_splits.assign(size, {});

  for (Mask mask = 1; mask < size; ++mask) {
    if (std::popcount(mask) < 2) continue;
    const Mask low = mask & ~(mask - 1);
    const Mask others = mask ^ low;
    bool seeded = false;
    Value best{};
    Mask best_p = 0;
    std::vector<Mask> ties;
    for (Mask sub = 0;; sub = (sub - others) & others) {
      if (sub == others) break;  // Q must stay non-empty
      const Mask p = low | sub;
      const Mask q = mask ^ p;
      Value cand = combine(out.best[p], out.best[q], step(p, q, mask));
      if (!seeded || cand < best) {
        seeded = true;
        best = std::move(cand);
        best_p = p;
        if (collect_all) {
          ties.clear();
          ties.push_back(p);
        }
      } else if (collect_all && cand == best) {
        ties.push_back(p);
      }
    }
    out.best[mask] = std::move(best);
    out.best_split[mask] = best_p;
    if (collect_all) out.all_splits[mask] = std::move(ties);
  }
  return out;
}

template <typename Value>
DpOutcome<Value> run_objective_dp(const TensorNetwork& net, const Indexed& ix,
                                  bool collect_all);

template <>
DpOutcome<Rational> run_objective_dp<Rational>(const TensorNetwork& net,
                                               const Indexed& ix,
                                               bool collect_all) {
  PtTables tables(net, ix);
  auto step = [&](Mask p, Mask q, Mask s) { return tables.doubled_step(p, q, s); };
  auto combine = [](const Rational& a, const Rational& b, Rational c) {
    return std::max({a, b, std::move(c)});
  };
  return run_dp<Rational>(ix.n, step, combine, collect_all);
}

template <>
DpOutcome<BigInt> run_objective_dp<BigInt>(const TensorNetwork& net,
                                           const Indexed& ix,
                                           bool collect_all) {
  OpnTables tables(net, ix);
  auto step = [&](Mask p, Mask q, Mask s) { return tables.step(p, q, s); };
  auto combine = [](const BigInt& a, const BigInt& b, BigInt c) {
    return a + b + std::move(c);
  };
  return run_dp<BigInt>(ix.n, step, combine, collect_all);
}

void emit_steps(const Indexed& ix, const std::vector<Mask>& split, Mask mask,
                ContractionSequence& seq) {
  if (std::popcount(mask) < 2) return;
  const Mask p = split[mask];
  const Mask q = mask ^ p;
  emit_steps(ix, split, p, seq);
  emit_steps(ix, split, q, seq);
  seq.steps.push_back({ix.group_of(p), ix.group_of(q)});
}

// All optimal trees of a subset, capped. Lists are assembled bottom-up in
// split order, so the enumeration is deterministic.
std::vector<std::vector<ContractionStep>> expand_trees(
    const Indexed& ix, const std::vector<std::vector<Mask>>& splits, Mask mask,
    std::size_t cap) {
  if (std::popcount(mask) < 2) return {{}};
  std::vector<std::vector<ContractionStep>> out;
  for (Mask p : splits[mask]) {
    const Mask q = mask ^ p;
    for (const auto& left : expand_trees(ix, splits, p, cap)) {
      for (const auto& right : expand_trees(ix, splits, q, cap)) {
        std::vector<ContractionStep> steps = left;
        steps.insert(steps.end(), right.begin(), right.end());
        steps.push_back({ix.group_of(p), ix.group_of(q)});
        out.push_back(std::move(steps));
        if (out.size() >= cap) return out;
      }
    }
  }
  return out;
}

}  // namespace

SolveResult solve_dp(const TensorNetwork& net, Objective objective,
                     const SolverLimits& limits) {
  check_dp_input(net, objective, limits);
  Indexed ix(net);
  const Mask full = Mask((std::size_t(1) << ix.n) - 1);

  SolveResult result;
  result.objective = objective;
  if (objective == Objective::pt) {
    auto dp = run_objective_dp<Rational>(net, ix, false);
    result.optimum = dp.best[full] / 2;
    emit_steps(ix, dp.best_split, full, result.sequence);
  } else {
    auto dp = run_objective_dp<BigInt>(net, ix, false);
    result.optimum = dp.best[full];
    emit_steps(ix, dp.best_split, full, result.sequence);
  }
  return result;
}

BigInt count_optimal_sequences(const TensorNetwork& net, Objective objective,
                               const SolverLimits& limits) {
  check_dp_input(net, objective, limits);
  Indexed ix(net);
  const std::size_t size = std::size_t(1) << ix.n;

  std::vector<std::vector<Mask>> splits;
  if (objective == Objective::pt) {
    splits = run_objective_dp<Rational>(net, ix, true).all_splits;
  } else {
    splits = run_objective_dp<BigInt>(net, ix, true).all_splits;
  }
  std::vector<BigInt> count(size, 0);
  for (Mask mask = 1; mask < size; ++mask) {
    if (std::popcount(mask) < 2) {
      count[mask] = 1;
      continue;
    }
    BigInt acc(0);
    for (Mask p : splits[mask]) acc += count[p] * count[mask ^ p];
    count[mask] = std::move(acc);
  }
  return count[size - 1];
}

std::vector<ContractionSequence> enumerate_optimal_sequences(
    const TensorNetwork& net, Objective objective, std::size_t max_count,
    const SolverLimits& limits) {
  check_dp_input(net, objective, limits);
  if (max_count == 0) return {};
  Indexed ix(net);
  const Mask full = Mask((std::size_t(1) << ix.n) - 1);

  std::vector<std::vector<Mask>> splits;
  if (objective == Objective::pt) {
    splits = run_objective_dp<Rational>(net, ix, true).all_splits;
  } else {
    splits = run_objective_dp<BigInt>(net, ix, true).all_splits;
  }
  std::vector<ContractionSequence> out;
  for (auto& steps : expand_trees(ix, splits, full, max_count)) {
    out.push_back(ContractionSequence{std::move(steps)});
  }
  return out;
}

namespace {

// Step cost read directly off the current network state; shares no tables
// with the DP path.
struct BruteOpn {
  static BigInt step(const TensorNetwork& state, const TensorNetwork&,
                     const VertexId& u, const VertexId& v, const VertexId&) {
    return step_opn(state, {{u}, {v}});
  }
  static BigInt fold(const BigInt& acc, BigInt step) {
    return acc + std::move(step);
  }
};

struct BrutePt {
  static Rational step(const TensorNetwork& state, const TensorNetwork&,
                       const VertexId& u, const VertexId& v, const VertexId&) {
    return wd(state, {u}) + wd(state, {v}) - state.edge_weight(u, v);
  }
  static Rational fold(const Rational& acc, Rational step) {
    return std::max(acc, std::move(step));
  }
};

struct BrutePs {
  static Rational step(const TensorNetwork& state, const TensorNetwork& next,
                       const VertexId& u, const VertexId& v,
                       const VertexId& merged) {
    return std::max({wd(state, {u}), wd(state, {v}), wd(next, {merged})});
  }
  static Rational fold(const Rational& acc, Rational step) {
    return std::max(acc, std::move(step));
  }
};

template <typename Value, typename Eval>
struct BruteSearch {
  std::optional<Value> best;
  std::vector<ContractionStep> best_steps;
  std::vector<ContractionStep> current;

  void run(const TensorNetwork& state, const Value& acc) {
    const auto ids = state.vertex_ids();
    if (ids.size() == 1) {
      if (!best || acc < *best) {
        best = acc;
        best_steps = current;
      }
      return;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        auto [next, merged] = contract_pair(state, ids[i], ids[j]);
        Value folded =
            Eval::fold(acc, Eval::step(state, next, ids[i], ids[j], merged));
        current.push_back({state.members(ids[i]), state.members(ids[j])});
        run(next, folded);
        current.pop_back();
      }
    }
  }
};

}  // namespace

SolveResult brute_force(const TensorNetwork& net, Objective objective,
                        const SolverLimits& limits) {
  const bool additive = net.representation() == Representation::additive;
  if ((objective == Objective::opn) == additive) {
    throw NetworkError("objective does not match the network representation");
  }
  if (net.vertex_count() < 2) {
    throw NetworkError("need at least 2 vertices to contract");
  }
  if (net.vertex_count() > limits.brute_max_vertices) {
    throw LimitError("network exceeds brute_max_vertices = " +
                     std::to_string(limits.brute_max_vertices));
  }

  SolveResult result;
  result.objective = objective;
  if (objective == Objective::opn) {
    BruteSearch<BigInt, BruteOpn> search;
    search.run(net, BigInt(0));
    result.optimum = std::move(*search.best);
    result.sequence.steps = std::move(search.best_steps);
  } else if (objective == Objective::pt) {
    BruteSearch<Rational, BrutePt> search;
    search.run(net, Rational(0));
    result.optimum = std::move(*search.best);
    result.sequence.steps = std::move(search.best_steps);
  } else {
    BruteSearch<Rational, BrutePs> search;
    search.run(net, Rational(0));
    result.optimum = std::move(*search.best);
    result.sequence.steps = std::move(search.best_steps);
  }
  return result;
}

std::optional<GroupTriple> find_structured_step(
    const ContractionSequence& seq, const std::array<std::size_t, 3>& sizes) {
  Group all;
  for (const auto& step : seq.steps) {
    all.insert(step.left.begin(), step.left.end());
    all.insert(step.right.begin(), step.right.end());
  }
  std::array<std::size_t, 3> want = sizes;
  std::sort(want.begin(), want.end());
  for (const auto& step : seq.steps) {
    std::array<std::size_t, 3> have = {
        step.left.size(), step.right.size(),
        all.size() - step.left.size() - step.right.size()};
    std::sort(have.begin(), have.end());
    if (have != want) continue;
    GroupTriple triple;
    triple.p = step.left;
    triple.q = step.right;
    for (const auto& id : all) {
      if (!step.left.contains(id) && !step.right.contains(id)) {
        triple.r.insert(id);
      }
    }
    return triple;
  }
  return std::nullopt;
}

}  // namespace tnorder
