#include "tnorder/reduction.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "tnorder/error.hpp"
#include "tnorder/rewrite.hpp"

namespace tnorder {

namespace {

constexpr std::size_t kBruteDecideLimit = 20;

// Bound on co-optimal sequences inspected by decide_sppf's fallback path.
constexpr std::size_t kCoOptimaCap = 4096;

void check_items(const std::vector<BigInt>& items, const char* what) {
  if (items.size() > kBruteDecideLimit) {
    throw LimitError(std::string(what) + ": more than " +
                     std::to_string(kBruteDecideLimit) + " items");
  }
  for (const BigInt& a : items) {
    if (a <= 0) throw InstanceError(std::string(what) + ": items must be positive");
  }
}

BigInt subset_sum(const std::vector<BigInt>& items, std::uint32_t mask) {
  BigInt acc(0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask >> i & 1u) acc += items[i];
  }
  return acc;
}

BigInt subset_product(const std::vector<BigInt>& items, std::uint32_t mask) {
  BigInt acc(1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask >> i & 1u) acc *= items[i];
  }
  return acc;
}

std::vector<std::size_t> mask_indices(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) out.push_back(i);
  }
  return out;
}

VertexId fresh_id(const TensorNetwork& net, VertexId base) {
  while (net.has_vertex(base)) base += "_";
  return base;
}

}  // namespace

Decision brute_decide(const PartitionInstance& inst) {
  check_items(inst.items, "partition");
  BigInt total = subset_sum(inst.items, ~0u);
  if (boost::multiprecision::bit_test(total, 0)) {
    return {false, {}, "odd total"};
  }
  const BigInt half = total / 2;
  const std::uint32_t end = 1u << inst.items.size();
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (subset_sum(inst.items, mask) == half) {
      return {true, mask_indices(mask, inst.items.size()), {}};
    }
  }
  return {false, {}, {}};
}

Decision brute_decide(const ExactPartitionInstance& inst) {
  check_items(inst.items, "exact-partition");
  if (inst.items.size() % 2 != 0) return {false, {}, "odd item count"};
  const std::size_t half_size = inst.items.size() / 2;
  BigInt total = subset_sum(inst.items, ~0u);
  if (boost::multiprecision::bit_test(total, 0)) {
    return {false, {}, "odd total"};
  }
  const BigInt half = total / 2;
  const std::uint32_t end = 1u << inst.items.size();
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (std::popcount(mask) != int(half_size)) continue;
    if (subset_sum(inst.items, mask) == half) {
      return {true, mask_indices(mask, inst.items.size()), {}};
    }
  }
  return {false, {}, {}};
}

Decision brute_decide(const SubsetProductInstance& inst) {
  check_items(inst.items, "subset-product");
  if (inst.k <= 1) throw InstanceError("subset-product: K must exceed 1");
  const std::uint32_t end = 1u << inst.items.size();
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (subset_product(inst.items, mask) == inst.k) {
      return {true, mask_indices(mask, inst.items.size()), {}};
    }
  }
  return {false, {}, {}};
}

Decision brute_decide(const PPFInstance& inst) {
  check_items(inst.items, "ppf");
  const BigInt total = subset_product(inst.items, ~0u);
  const std::uint32_t end = 1u << inst.items.size();
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    BigInt p = subset_product(inst.items, mask);
    if (p * p == total) {
      return {true, mask_indices(mask, inst.items.size()), {}};
    }
  }
  return {false, {}, {}};
}

Decision brute_decide(const SPPFInstance& inst) {
  check_items(inst.items, "sppf");
  if (inst.items.size() % 2 != 0) return {false, {}, "odd item count"};
  const std::size_t half_size = inst.items.size() / 2;
  const BigInt total = subset_product(inst.items, ~0u);
  const std::uint32_t end = 1u << inst.items.size();
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (std::popcount(mask) != int(half_size)) continue;
    BigInt p = subset_product(inst.items, mask);
    if (p * p == total) {
      return {true, mask_indices(mask, inst.items.size()), {}};
    }
  }
  return {false, {}, {}};
}

// ---------------------------------------------------------------------

CmsToCms0Certificate cms_to_cms0(const TensorNetwork& net) {
  if (net.representation() != Representation::additive) {
    throw NetworkError("cms_to_cms0 expects an additive network");
  }
  CmsToCms0Certificate cert{net, TensorNetwork(Representation::additive), {}};
  cert.anchor = fresh_id(net, "v0");
  cert.target.add_vertex(cert.anchor, 0);
  for (const auto& [id, weight] : net.vertices()) {
    cert.target.add_vertex(id, 0);
  }
  for (const auto& [key, weight] : net.edges()) {
    cert.target.add_edge(key.a, key.b, weight);
  }
  // Vertex weights reappear as edges to the anchor; zero weights add none.
  for (const auto& [id, weight] : net.vertices()) {
    if (weight != 0) cert.target.add_edge(cert.anchor, id, weight);
  }
  return cert;
}

ContractionSequence lift_cms0_sequence(const CmsToCms0Certificate& cert,
                                       const ContractionSequence& target_seq) {
  ContractionSequence anchored =
      make_vertex_last(cert.target, target_seq, cert.anchor);
  if (anchored.steps.empty()) {
    throw SequenceError("target sequence has no steps to lift");
  }
  anchored.steps.pop_back();
  return anchored;
}

// ---------------------------------------------------------------------

namespace {

// Minimal positive gap between subset sums of all weights; weights must be
// integers, so the result is a positive integer.
BigInt exact_weight_gap(const std::vector<BigInt>& weights) {
  if (weights.size() > kBruteDecideLimit) {
    throw LimitError("exact-gap mode enumerates 2^(V+E) subset sums; network too large");
  }
  std::vector<BigInt> sums;
  sums.reserve(std::size_t(1) << weights.size());
  const std::uint32_t end = 1u << weights.size();
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    sums.push_back(subset_sum(weights, mask));
  }
  std::sort(sums.begin(), sums.end());
  BigInt gap(-1);
  for (std::size_t i = 1; i < sums.size(); ++i) {
    BigInt d = sums[i] - sums[i - 1];
    if (d > 0 && (gap < 0 || d < gap)) gap = std::move(d);
  }
  return gap < 0 ? BigInt(1) : gap;  // all sums equal: any base works
}

// Smallest integer N >= 2 with N^gap >= n^2.
BigInt scale_base_for(std::size_t n, const BigInt& gap) {
  const BigInt target = BigInt(n) * BigInt(n);
  // 2^64 covers any n the solver can touch, so large gaps settle at 2.
  if (gap >= 64) return BigInt(2);
  BigInt lo(2), hi(2);
  const unsigned g = gap.convert_to<unsigned>();
  while (boost::multiprecision::pow(hi, g) < target) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, g) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

CmsToOmsCertificate cms_to_oms(const TensorNetwork& net, bool exact_gap) {
  if (net.representation() != Representation::additive) {
    throw NetworkError("cms_to_oms expects an additive network");
  }
  if (net.vertex_count() < 3) {
    throw InstanceError("cms_to_oms needs at least 3 vertices");
  }
  std::vector<BigInt> weights;
  auto take = [&](const Rational& w) {
    if (boost::multiprecision::denominator(w) != 1) {
      throw InstanceError("cms_to_oms requires integer weights");
    }
    weights.push_back(boost::multiprecision::numerator(w));
  };
  for (const auto& [id, weight] : net.vertices()) take(weight);
  for (const auto& [key, weight] : net.edges()) take(weight);

  CmsToOmsCertificate cert{net, TensorNetwork(Representation::multiplicative),
                           0, 0};
  cert.gap = exact_gap ? exact_weight_gap(weights) : BigInt(1);
  cert.scale_base = scale_base_for(net.vertex_count(), cert.gap);

  auto lift = [&](const Rational& w) {
    return Rational(boost::multiprecision::pow(
        cert.scale_base,
        boost::multiprecision::numerator(w).convert_to<unsigned>()));
  };
  for (const auto& [id, weight] : net.vertices()) {
    cert.target.add_vertex(id, lift(weight));
  }
  for (const auto& [key, weight] : net.edges()) {
    cert.target.add_edge(key.a, key.b, lift(weight));
  }
  return cert;
}

// ---------------------------------------------------------------------

PartitionToExactCertificate partition_to_exact(const PartitionInstance& inst) {
  check_items(inst.items, "partition");
  if (inst.items.empty()) throw InstanceError("partition: items must be non-empty");
  PartitionToExactCertificate cert{inst, {}, subset_sum(inst.items, ~0u)};
  for (const BigInt& a : inst.items) cert.target.items.push_back(a + cert.total);
  cert.target.items.insert(cert.target.items.end(), inst.items.size(),
                           cert.total);
  return cert;
}

std::vector<std::size_t> partition_witness_from_exact(
    const PartitionToExactCertificate& cert,
    const std::vector<std::size_t>& exact_witness) {
  const std::size_t n = cert.source.items.size();
  std::vector<std::size_t> out;
  for (std::size_t idx : exact_witness) {
    if (idx < n) out.push_back(idx);
  }
  BigInt sum(0);
  for (std::size_t idx : out) sum += cert.source.items[idx];
  if (sum * 2 != cert.total) {
    throw Error("back-mapped partition witness does not reach half the total");
  }
  return out;
}

// ---------------------------------------------------------------------

ExactToCms0Certificate exact_to_cms0(const ExactPartitionInstance& inst) {
  check_items(inst.items, "exact-partition");
  if (inst.items.size() % 2 != 0) {
    throw InstanceError("exact-partition instances have an even item count");
  }
  if (inst.items.size() < 4) {
    throw InstanceError("the gadget needs at least 4 items (n >= 2)");
  }
  ExactToCms0Certificate cert;
  cert.source = inst;
  cert.total = subset_sum(inst.items, ~0u);
  if (boost::multiprecision::bit_test(cert.total, 0)) {
    cert.feasible = false;
    cert.reason = "odd total: a_0 = s/2 is not integral";
    return cert;
  }
  cert.feasible = true;
  const std::size_t n = inst.items.size() / 2;
  cert.x = boost::multiprecision::pow(cert.total + 1, 3) + 1;
  cert.anchor_weight = Rational(cert.total) / 2;

  // a_0 = s/2 first, then the 2n instance items.
  std::vector<BigInt> values;
  values.push_back(cert.total / 2);
  values.insert(values.end(), inst.items.begin(), inst.items.end());

  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < values.size(); ++i) {
    VertexId id = "v" + std::to_string(i);
    cert.network.add_vertex(id, 0);
    ids.push_back(std::move(id));
  }
  cert.anchor = ids[0];
  cert.item_vertex.assign(ids.begin() + 1, ids.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      BigInt w = cert.x - values[i] * values[j];
      if (w <= 0) throw Error("gadget edge weight must stay positive");
      cert.network.add_edge(ids[i], ids[j], Rational(std::move(w)));
    }
  }
  cert.threshold =
      Rational(cert.x) * Rational(n * n + 2 * n) -
      Rational(3) * Rational(cert.total) * Rational(cert.total) / 4;
  return cert;
}

Decision decide_exact_partition(const ExactToCms0Certificate& cert,
                                const SolverLimits& limits) {
  if (!cert.feasible) return {false, {}, cert.reason};
  const std::size_t n = cert.source.items.size() / 2;
  SolveResult res = solve_dp(cert.network, Objective::pt, limits);
  const Rational& optimum = res.optimum_power();
  if (optimum < cert.threshold) {
    throw Error("gadget optimum fell below the threshold; construction broken");
  }
  if (optimum != cert.threshold) return {false, {}, {}};

  // The optimal sequence must contain a (1, n, n) step whose singleton is
  // the anchor; its two halves spell the equal-sum split.
  const Group all = cert.network.all_members();
  for (const auto& step : res.sequence.steps) {
    Group rest;
    for (const auto& id : all) {
      if (!step.left.contains(id) && !step.right.contains(id)) rest.insert(id);
    }
    std::array<const Group*, 3> parts = {&step.left, &step.right, &rest};
    std::array<std::size_t, 3> sizes = {step.left.size(), step.right.size(),
                                        rest.size()};
    std::array<std::size_t, 3> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<std::size_t, 3>{1, n, n}) continue;

    const Group anchor_group{cert.anchor};
    std::optional<std::size_t> singleton;
    for (std::size_t i = 0; i < 3; ++i) {
      if (*parts[i] == anchor_group) singleton = i;
    }
    if (!singleton) continue;

    std::array<const Group*, 2> halves{};
    std::size_t at = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != *singleton) halves[at++] = parts[i];
    }
    auto indices_of = [&](const Group& g) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < cert.item_vertex.size(); ++i) {
        if (g.contains(cert.item_vertex[i])) out.push_back(i);
      }
      return out;
    };
    std::vector<std::size_t> first = indices_of(*halves[0]);
    std::vector<std::size_t> second = indices_of(*halves[1]);
    BigInt sum_first(0), sum_second(0);
    for (std::size_t i : first) sum_first += cert.source.items[i];
    for (std::size_t i : second) sum_second += cert.source.items[i];
    if (first.size() != n || second.size() != n || sum_first != sum_second) {
      throw Error("anchored (1,n,n) step does not spell an equal-sum split");
    }
    return {true, std::move(first), {}};
  }
  throw Error("optimum met the threshold but no anchored (1,n,n) step exists");
}

// ---------------------------------------------------------------------

SpToPpfCertificate sp_to_ppf(const SubsetProductInstance& inst) {
  check_items(inst.items, "subset-product");
  if (inst.k <= 1) throw InstanceError("subset-product: K must exceed 1");
  SpToPpfCertificate cert{inst, {}, subset_product(inst.items, ~0u),
                          inst.k * inst.k, 0, 0};
  cert.target.items = inst.items;
  cert.product_index = cert.target.items.size();
  cert.target.items.push_back(cert.all_product);
  cert.square_index = cert.target.items.size();
  cert.target.items.push_back(cert.k_squared);
  return cert;
}

std::vector<std::size_t> sp_witness_from_ppf(
    const SpToPpfCertificate& cert,
    const std::vector<std::size_t>& ppf_witness) {
  const std::size_t n = cert.source.items.size();
  const bool has_product =
      std::find(ppf_witness.begin(), ppf_witness.end(), cert.product_index) !=
      ppf_witness.end();
  const bool has_square =
      std::find(ppf_witness.begin(), ppf_witness.end(), cert.square_index) !=
      ppf_witness.end();
  if (has_product == has_square) {
    throw Error("PPF witness must split N and K^2 across the halves");
  }
  std::vector<std::size_t> out;
  if (has_product) {
    for (std::size_t idx : ppf_witness) {
      if (idx < n) out.push_back(idx);
    }
  } else {
    std::vector<bool> chosen(n, false);
    for (std::size_t idx : ppf_witness) {
      if (idx < n) chosen[idx] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!chosen[i]) out.push_back(i);
    }
  }
  BigInt prod(1);
  for (std::size_t i : out) prod *= cert.source.items[i];
  if (prod != cert.source.k) {
    throw Error("back-mapped subset-product witness misses K");
  }
  return out;
}

// ---------------------------------------------------------------------

PpfToSppfCertificate ppf_to_sppf(const PPFInstance& inst) {
  check_items(inst.items, "ppf");
  PpfToSppfCertificate cert{inst, {}};
  cert.target.items = inst.items;
  cert.target.items.insert(cert.target.items.end(), inst.items.size(),
                           BigInt(1));
  return cert;
}

std::vector<std::size_t> ppf_witness_from_sppf(
    const PpfToSppfCertificate& cert,
    const std::vector<std::size_t>& sppf_witness) {
  const std::size_t n = cert.source.items.size();
  std::vector<std::size_t> out;
  for (std::size_t idx : sppf_witness) {
    if (idx < n) out.push_back(idx);
  }
  BigInt prod(1);
  for (std::size_t i : out) prod *= cert.source.items[i];
  BigInt rest(1);
  std::vector<bool> chosen(n, false);
  for (std::size_t i : out) chosen[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!chosen[i]) rest *= cert.source.items[i];
  }
  if (prod != rest) {
    throw Error("back-mapped PPF witness does not balance the products");
  }
  return out;
}

// ---------------------------------------------------------------------

SppfToOmsStarCertificate sppf_to_oms_star(const SPPFInstance& inst) {
  check_items(inst.items, "sppf");
  SppfToOmsStarCertificate cert;
  cert.source = inst;
  const std::size_t n = inst.items.size();
  if (n < 2 || n % 2 != 0) {
    cert.feasible = false;
    cert.reason = "item count must be even and at least 2";
    return cert;
  }
  cert.feasible = true;
  BigInt base_product = subset_product(inst.items, ~0u);
  cert.leaf_scale = BigInt(2 * n) * base_product;  // M
  BigInt scaled_product(1);
  for (const BigInt& b : inst.items) {
    cert.edge_weights.push_back(cert.leaf_scale * b);
    scaled_product *= cert.edge_weights.back();
  }
  cert.center_weight = BigInt(2 * n) * scaled_product;  // a

  cert.center = "v0";
  cert.network.add_vertex(cert.center, Rational(cert.center_weight));
  for (std::size_t i = 0; i < n; ++i) {
    VertexId id = "v" + std::to_string(i + 1);
    cert.network.add_vertex(id, 1);
    cert.network.add_edge(cert.center, id, Rational(cert.edge_weights[i]));
    cert.item_vertex.push_back(std::move(id));
  }
  return cert;
}

namespace {

// Leaf-only final merge of a star sequence: the step whose union is the
// full leaf set. Returns the two sides, or nothing when the sequence
// interleaves the center earlier.
std::optional<std::pair<Group, Group>> final_leaf_merge(
    const ContractionSequence& seq, const Group& leaves) {
  for (const auto& step : seq.steps) {
    Group merged = step.left;
    merged.insert(step.right.begin(), step.right.end());
    if (merged == leaves) return std::make_pair(step.left, step.right);
  }
  return std::nullopt;
}

}  // namespace

Decision decide_sppf(const SppfToOmsStarCertificate& cert,
                     const SolverLimits& limits) {
  if (!cert.feasible) return {false, {}, cert.reason};
  const std::size_t n = cert.source.items.size();
  Group leaves;
  for (const auto& id : cert.item_vertex) leaves.insert(id);

  auto test_split = [&](const std::pair<Group, Group>& split)
      -> std::optional<std::vector<std::size_t>> {
    if (split.first.size() != n / 2) return std::nullopt;
    BigInt left(1), right(1);
    std::vector<std::size_t> witness;
    for (std::size_t i = 0; i < n; ++i) {
      if (split.first.contains(cert.item_vertex[i])) {
        left *= cert.source.items[i];
        witness.push_back(i);
      } else {
        right *= cert.source.items[i];
      }
    }
    if (left != right) return std::nullopt;
    return witness;
  };

  SolveResult res = solve_dp(cert.network, Objective::opn, limits);
  if (auto split = final_leaf_merge(res.sequence, leaves)) {
    if (auto witness = test_split(*split)) return {true, std::move(*witness), {}};
  }
  // The primary optimum failed the product test; inspect the co-optima.
  for (const auto& seq :
       enumerate_optimal_sequences(cert.network, Objective::opn, kCoOptimaCap,
                                   limits)) {
    if (auto split = final_leaf_merge(seq, leaves)) {
      if (auto witness = test_split(*split)) {
        return {true, std::move(*witness), {}};
      }
    }
  }
  return {false, {}, {}};
}

// ---------------------------------------------------------------------

Decision decide_partition_via_cms0(const PartitionInstance& inst,
                                   const SolverLimits& limits) {
  PartitionToExactCertificate to_exact = partition_to_exact(inst);
  ExactToCms0Certificate gadget = exact_to_cms0(to_exact.target);
  Decision exact = decide_exact_partition(gadget, limits);
  if (!exact.yes) return exact;
  return {true, partition_witness_from_exact(to_exact, exact.witness), {}};
}

Decision decide_exact_partition_via_cms0(const ExactPartitionInstance& inst,
                                         const SolverLimits& limits) {
  return decide_exact_partition(exact_to_cms0(inst), limits);
}

Decision decide_sp_via_oms(const SubsetProductInstance& inst,
                           const SolverLimits& limits) {
  SpToPpfCertificate to_ppf = sp_to_ppf(inst);
  PpfToSppfCertificate to_sppf = ppf_to_sppf(to_ppf.target);
  Decision sppf = decide_sppf(sppf_to_oms_star(to_sppf.target), limits);
  if (!sppf.yes) return sppf;
  std::vector<std::size_t> ppf_witness =
      ppf_witness_from_sppf(to_sppf, sppf.witness);
  return {true, sp_witness_from_ppf(to_ppf, ppf_witness), {}};
}

Decision decide_ppf_via_oms(const PPFInstance& inst,
                            const SolverLimits& limits) {
  PpfToSppfCertificate to_sppf = ppf_to_sppf(inst);
  Decision sppf = decide_sppf(sppf_to_oms_star(to_sppf.target), limits);
  if (!sppf.yes) return sppf;
  return {true, ppf_witness_from_sppf(to_sppf, sppf.witness), {}};
}

Decision decide_sppf_via_oms(const SPPFInstance& inst,
                             const SolverLimits& limits) {
  return decide_sppf(sppf_to_oms_star(inst), limits);
}

}  // namespace tnorder
