#pragma once

// Step and sequence cost evaluation: operation number for multiplicative
// networks, time power and space power for additive networks.

#include <vector>

#include "tnorder/network.hpp"

namespace tnorder {

enum class Objective {
  opn,  // total operation number (multiplicative networks)
  pt,   // max per-step time power (additive networks)
  ps,   // max per-step space power (additive networks)
};

/// One pairwise contraction: the two disjoint groups being merged.
struct ContractionStep {
  Group left;
  Group right;

  bool operator==(const ContractionStep&) const = default;
};

/// Ordered list of pairwise contractions forming a binary contraction tree:
/// each side of a step is either a live vertex of the starting network or
/// exactly the union produced by an earlier step, and every group is
/// consumed at most once. A full sequence over n vertices has n-1 steps.
struct ContractionSequence {
  std::vector<ContractionStep> steps;

  bool operator==(const ContractionSequence&) const = default;
};

/// A step seen as the decomposition (P, Q, R): the two contracted groups
/// plus the complement R of everything else.
struct GroupTriple {
  Group p;
  Group q;
  Group r;

  bool operator==(const GroupTriple&) const = default;
};

/// Per-step and aggregate costs of one sequence under one objective.
/// Only the fields of the evaluated objective are populated; additive
/// evaluations fill both powers since they share the replay.
struct CostReport {
  Objective objective = Objective::opn;
  std::vector<BigInt> step_opn;
  std::vector<Rational> step_pt;
  std::vector<Rational> step_ps;
  BigInt total_opn;  // sum of step_opn
  Rational pt;       // max of step_pt
  Rational ps;       // max of step_ps
};

/// Time power of contracting two disjoint groups of current vertices,
/// evaluated against `net`: WD(left) + WD(right) - (edges between them).
Rational step_time_power(const TensorNetwork& net, const ContractionStep& step);

/// Space power: max of WD(left), WD(right) and WD of their union.
Rational step_space_power(const TensorNetwork& net, const ContractionStep& step);

/// Operation number of one step on a multiplicative network: the product of
/// both group weights and of every edge incident to either group, with the
/// edges between the groups counted once.
BigInt step_opn(const TensorNetwork& net, const ContractionStep& step);

/// Throws SequenceError unless `seq` is a valid (optionally full)
/// contraction of `net`. Steps address vertices by their original ids.
void validate_sequence(const TensorNetwork& net, const ContractionSequence& seq,
                       bool require_full = false);

/// Replays the sequence with contract_pair, step by step, and reports
/// per-step and aggregate costs. Partial sequences are allowed.
CostReport evaluate_sequence(const TensorNetwork& net,
                             const ContractionSequence& seq,
                             Objective objective);

}  // namespace tnorder
