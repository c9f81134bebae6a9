#pragma once

// Shared helpers for the test suites: fixture loading and seeded random
// network / sequence generation.

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnorder/cost.hpp"
#include "tnorder/generate.hpp"
#include "tnorder/json_io.hpp"
#include "tnorder/network.hpp"

namespace tntest {

inline std::string read_fixture(const std::string& name) {
  const std::string path = std::string(TN_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline tnorder::TensorNetwork load_network(const std::string& name) {
  return tnorder::network_from_json(read_fixture(name));
}

inline tnorder::ContractionSequence load_sequence(const std::string& name) {
  return tnorder::sequence_from_json(read_fixture(name));
}

/// Uniformly random full contraction order: repeatedly merges two random
/// live groups. Independent of the solver's tree machinery.
inline tnorder::ContractionSequence random_sequence(
    std::mt19937_64& rng, const tnorder::TensorNetwork& net) {
  std::vector<tnorder::Group> live;
  for (const auto& [id, _] : net.vertices()) live.push_back(net.members(id));
  tnorder::ContractionSequence seq;
  while (live.size() > 1) {
    const std::size_t i = rng() % live.size();
    std::size_t j = rng() % (live.size() - 1);
    if (j >= i) ++j;
    seq.steps.push_back({live[i], live[j]});
    tnorder::Group merged = live[i];
    merged.insert(live[j].begin(), live[j].end());
    live.erase(live.begin() + std::max(i, j));
    live.erase(live.begin() + std::min(i, j));
    live.push_back(std::move(merged));
  }
  return seq;
}

}  // namespace tntest
