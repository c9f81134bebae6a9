#pragma once

// Deterministic network generators for fixtures, property suites and the
// command line. All randomness flows through the caller's engine, so a
// fixed seed reproduces a fixture bit for bit.

#include <cstdint>
#include <random>

#include "tnorder/network.hpp"

namespace tnorder {

struct RandomNetworkOptions {
  std::size_t vertices = 6;
  Representation representation = Representation::additive;
  /// Chance of each vertex pair carrying an edge, in percent.
  unsigned edge_percent = 60;
  /// Weights are drawn uniformly from [0, max_weight] (additive) or
  /// [1, max_weight] (multiplicative and all edges).
  std::uint64_t max_weight = 9;
  bool zero_vertex_weights = false;
};

/// Complete graph K_n with uniform weights; defaults give the unit-edge,
/// zero-vertex CMS-0 instance.
TensorNetwork make_complete_network(std::size_t n,
                                    const Rational& edge_weight = 1,
                                    const Rational& vertex_weight = 0,
                                    Representation rep = Representation::additive);

TensorNetwork make_random_network(std::mt19937_64& rng,
                                  const RandomNetworkOptions& options = {});

/// Random spanning tree: connected, exactly n-1 edges.
TensorNetwork make_random_tree_network(std::mt19937_64& rng,
                                       const RandomNetworkOptions& options = {});

/// Star gadget over the given positive items (even count), with the
/// center/edge constants of the SPPF reduction.
TensorNetwork make_star_network(const std::vector<BigInt>& items);

}  // namespace tnorder
