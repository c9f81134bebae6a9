#include "tnorder/cost.hpp"

#include <algorithm>

#include "tnorder/error.hpp"

namespace tnorder {

namespace {

void check_step_groups(const TensorNetwork& net, const ContractionStep& step) {
  if (step.left.empty() || step.right.empty()) {
    throw SequenceError("step groups must be non-empty");
  }
  for (const auto& id : step.left) {
    if (step.right.contains(id)) {
      throw SequenceError("step groups overlap at '" + id + "'");
    }
  }
  for (const Group* side : {&step.left, &step.right}) {
    for (const auto& id : *side) {
      if (!net.has_vertex(id)) {
        throw SequenceError("unknown group member '" + id + "'");
      }
    }
  }
}

void require_additive(const TensorNetwork& net) {
  if (net.representation() != Representation::additive) {
    throw NetworkError("time/space powers are defined on additive networks");
  }
}

// Total weight of the edges with one endpoint in each group.
Rational between_weight(const TensorNetwork& net, const Group& left,
                        const Group& right) {
  const bool additive = net.representation() == Representation::additive;
  Rational acc = net.identity_weight();
  for (const auto& [key, weight] : net.edges()) {
    const bool cross = (left.contains(key.a) && right.contains(key.b)) ||
                       (left.contains(key.b) && right.contains(key.a));
    if (cross) acc = additive ? Rational(acc + weight) : Rational(acc * weight);
  }
  return acc;
}

}  // namespace

Rational step_time_power(const TensorNetwork& net,
                         const ContractionStep& step) {
  require_additive(net);
  check_step_groups(net, step);
  return wd(net, step.left) + wd(net, step.right) -
         between_weight(net, step.left, step.right);
}

Rational step_space_power(const TensorNetwork& net,
                          const ContractionStep& step) {
  require_additive(net);
  check_step_groups(net, step);
  Group merged = step.left;
  merged.insert(step.right.begin(), step.right.end());
  return std::max({wd(net, step.left), wd(net, step.right), wd(net, merged)});
}

BigInt step_opn(const TensorNetwork& net, const ContractionStep& step) {
  if (net.representation() != Representation::multiplicative) {
    throw NetworkError("operation numbers are defined on multiplicative networks");
  }
  check_step_groups(net, step);
  BigInt acc(1);
  for (const Group* side : {&step.left, &step.right}) {
    for (const auto& id : *side) {
      acc *= boost::multiprecision::numerator(net.vertex_weight(id));
    }
  }
  // Every edge incident to either group except the ones already consumed
  // inside a group; the left-right edges enter the product once.
  for (const auto& [key, weight] : net.edges()) {
    const bool a_left = step.left.contains(key.a);
    const bool a_right = step.right.contains(key.a);
    const bool b_left = step.left.contains(key.b);
    const bool b_right = step.right.contains(key.b);
    const bool internal = (a_left && b_left) || (a_right && b_right);
    if (!internal && (a_left || a_right || b_left || b_right)) {
      acc *= boost::multiprecision::numerator(weight);
    }
  }
  return acc;
}

void validate_sequence(const TensorNetwork& net, const ContractionSequence& seq,
                       bool require_full) {
  std::set<Group> live;
  for (const auto& [id, _] : net.vertices()) live.insert(net.members(id));

  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const ContractionStep& step = seq.steps[i];
    const auto bad = [&](const char* what) {
      throw SequenceError("step " + std::to_string(i + 1) + ": " + what);
    };
    if (step.left.empty() || step.right.empty()) bad("empty group");
    if (!live.contains(step.left)) bad("left group is not live");
    if (!live.contains(step.right)) bad("right group is not live");
    if (step.left == step.right) bad("left and right coincide");
    live.erase(step.left);
    live.erase(step.right);
    Group merged = step.left;
    merged.insert(step.right.begin(), step.right.end());
    live.insert(std::move(merged));
  }
  if (require_full && live.size() != 1) {
    throw SequenceError("sequence does not contract the network to one vertex");
  }
}

CostReport evaluate_sequence(const TensorNetwork& net,
                             const ContractionSequence& seq,
                             Objective objective) {
  const bool additive = net.representation() == Representation::additive;
  if ((objective == Objective::opn) == additive) {
    throw NetworkError("objective does not match the network representation");
  }
  validate_sequence(net, seq);

  CostReport report;
  report.objective = objective;
  report.total_opn = 0;
  report.pt = 0;
  report.ps = 0;

  // Live groups resolve the original-id steps against the evolving network.
  std::map<Group, VertexId> live;
  TensorNetwork state = net;
  for (const auto& [id, _] : net.vertices()) live.emplace(net.members(id), id);

  for (const ContractionStep& step : seq.steps) {
    const VertexId u = live.at(step.left);
    const VertexId v = live.at(step.right);
    ContractionStep here{{u}, {v}};
    if (additive) {
      Rational tp = step_time_power(state, here);
      Rational sp = step_space_power(state, here);
      report.pt = std::max(report.pt, tp);
      report.ps = std::max(report.ps, sp);
      report.step_pt.push_back(std::move(tp));
      report.step_ps.push_back(std::move(sp));
    } else {
      BigInt opn = step_opn(state, here);
      report.total_opn += opn;
      report.step_opn.push_back(std::move(opn));
    }
    auto [next, merged] = contract_pair(state, u, v);
    state = std::move(next);
    live.erase(step.left);
    live.erase(step.right);
    Group key = step.left;
    key.insert(step.right.begin(), step.right.end());
    live.emplace(std::move(key), std::move(merged));
  }
  return report;
}

}  // namespace tnorder
