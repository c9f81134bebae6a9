#pragma once

// Exact optimal-sequence search: a subset dynamic program over vertex
// bitmasks for OPN and PT, and a structurally independent brute-force
// enumeration of all contraction trees used as its oracle.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "tnorder/cost.hpp"
#include "tnorder/network.hpp"

namespace tnorder {

struct SolverLimits {
  std::size_t dp_max_vertices = 20;
  std::size_t brute_max_vertices = 8;
};

struct SolveResult {
  Objective objective = Objective::opn;
  std::variant<BigInt, Rational> optimum;
  ContractionSequence sequence;

  const BigInt& optimum_opn() const { return std::get<BigInt>(optimum); }
  const Rational& optimum_power() const { return std::get<Rational>(optimum); }
};

/// Optimal contraction over all pairwise trees, by dynamic programming on
/// vertex subsets: best(S) minimizes over bipartitions S = P + Q, combining
/// with sum for OPN and max for PT. Step costs are evaluated against the
/// input network. Ties resolve to the lexicographically smallest subset
/// bitmask, so results are reproducible. Objective::ps is not supported
/// here; use brute_force.
SolveResult solve_dp(const TensorNetwork& net, Objective objective,
                     const SolverLimits& limits = {});

/// Exhaustive enumeration of every contraction order, replaying each step
/// on a copy of the network. Independent of solve_dp by construction; also
/// the only solver for Objective::ps.
SolveResult brute_force(const TensorNetwork& net, Objective objective,
                        const SolverLimits& limits = {});

/// Number of distinct optimal contraction trees under the DP objective.
BigInt count_optimal_sequences(const TensorNetwork& net, Objective objective,
                               const SolverLimits& limits = {});

/// Up to `max_count` optimal contraction trees (each linearized once), in a
/// deterministic order. The count may be astronomically large; callers cap.
std::vector<ContractionSequence> enumerate_optimal_sequences(
    const TensorNetwork& net, Objective objective, std::size_t max_count,
    const SolverLimits& limits = {});

/// First step of `seq` whose group sizes {|P|, |Q|, |R|} match `sizes` as a
/// multiset, where R is the complement of the step within the contracted
/// vertex set. Returns the full (P, Q, R) decomposition.
std::optional<GroupTriple> find_structured_step(
    const ContractionSequence& seq, const std::array<std::size_t, 3>& sizes);

}  // namespace tnorder
