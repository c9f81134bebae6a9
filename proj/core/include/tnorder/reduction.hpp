#pragma once

// Constructive reductions between partition-style decision problems and
// contraction ordering, modeled as instance transformers with decision
// thresholds and solution back-maps. Subset-enumeration deciders for the
// source problems double as oracles for the soundness tests. Every
// threshold and comparison is exact; no floating point enters a decision.

#include <cstddef>
#include <string>
#include <vector>

#include "tnorder/cost.hpp"
#include "tnorder/network.hpp"
#include "tnorder/solver.hpp"

namespace tnorder {

struct PartitionInstance {
  std::vector<BigInt> items;
};

struct ExactPartitionInstance {
  std::vector<BigInt> items;  // 2n items; a balanced half must hit sum/2
};

struct SubsetProductInstance {
  std::vector<BigInt> items;
  BigInt k;  // target product, > 1
};

struct PPFInstance {
  std::vector<BigInt> items;
};

struct SPPFInstance {
  std::vector<BigInt> items;  // balanced-cardinality variant, even count
};

/// YES/NO answer plus, on YES, the indices of the chosen subset of the
/// source items. `reason` is set when a gadget short-circuits (odd totals
/// and the like).
struct Decision {
  bool yes = false;
  std::vector<std::size_t> witness;
  std::string reason;
};

// Exact decisions by subset enumeration (instances up to 20 items).
Decision brute_decide(const PartitionInstance&);
Decision brute_decide(const ExactPartitionInstance&);
Decision brute_decide(const SubsetProductInstance&);
Decision brute_decide(const PPFInstance&);
Decision brute_decide(const SPPFInstance&);

// ---------------------------------------------------------------------
// CMS -> CMS-0: add an anchor vertex, turn vertex weights into edges to
// it, zero all vertex weights. The optimum time power is unchanged.

struct CmsToCms0Certificate {
  TensorNetwork source;
  TensorNetwork target;
  VertexId anchor;
};

CmsToCms0Certificate cms_to_cms0(const TensorNetwork& net);

/// Back-map: reorder a full target sequence so the anchor is contracted
/// last (time-power-neutral), then drop that final step. The remainder is
/// a full sequence of the source with the same time power.
ContractionSequence lift_cms0_sequence(const CmsToCms0Certificate& cert,
                                       const ContractionSequence& target_seq);

// ---------------------------------------------------------------------
// CMS -> OMS: exponentiate integer weights to N^w with N large enough
// that any OMS-optimal sequence of the target is CMS-optimal for the
// source. With the default gap = 1 this is N = max(n^2, 2); the exact-gap
// mode computes the true minimal positive subset-sum gap (exponential in
// the number of weights) to allow a smaller N.

struct CmsToOmsCertificate {
  TensorNetwork source;
  TensorNetwork target;
  BigInt scale_base;  // N
  BigInt gap;         // the Delta the base was derived from
};

CmsToOmsCertificate cms_to_oms(const TensorNetwork& net,
                               bool exact_gap = false);

// ---------------------------------------------------------------------
// Partition -> Exact-Partition: shift every item by the total S and pad
// with n copies of S.

struct PartitionToExactCertificate {
  PartitionInstance source;
  ExactPartitionInstance target;
  BigInt total;  // S
};

PartitionToExactCertificate partition_to_exact(const PartitionInstance&);

/// Source witness from a target witness (either half): the source items
/// whose shifted copies were selected.
std::vector<std::size_t> partition_witness_from_exact(
    const PartitionToExactCertificate& cert,
    const std::vector<std::size_t>& exact_witness);

// ---------------------------------------------------------------------
// Exact-Partition -> CMS-0: the complete-graph gadget on 2n+1 vertices
// with edge weights x - a_i * a_j, anchor item a_0 = s/2 and
// x = (s+1)^3 + 1. The instance is a YES exactly when the CMS-0 optimum
// hits the threshold x(n^2 + 2n) - 3 s^2 / 4.

struct ExactToCms0Certificate {
  ExactPartitionInstance source;
  bool feasible = false;  // false when the total is odd: answer NO
  std::string reason;
  TensorNetwork network{Representation::additive};
  BigInt x;
  BigInt total;             // s
  Rational anchor_weight;   // a_0 = s/2
  Rational threshold;
  VertexId anchor;
  std::vector<VertexId> item_vertex;  // gadget vertex per source item
};

ExactToCms0Certificate exact_to_cms0(const ExactPartitionInstance&);

/// Runs the exact CMS-0 solver on the gadget and compares the optimum with
/// the threshold; on YES, extracts the balanced halves from the anchored
/// (1, n, n) step of the optimal sequence.
Decision decide_exact_partition(const ExactToCms0Certificate& cert,
                                const SolverLimits& limits = {});

// ---------------------------------------------------------------------
// Subset-Product -> PPF: append N = prod(items) and K^2.

struct SpToPpfCertificate {
  SubsetProductInstance source;
  PPFInstance target;
  BigInt all_product;  // N
  BigInt k_squared;
  std::size_t product_index;  // position of N in target
  std::size_t square_index;   // position of K^2 in target
};

SpToPpfCertificate sp_to_ppf(const SubsetProductInstance&);

std::vector<std::size_t> sp_witness_from_ppf(
    const SpToPpfCertificate& cert, const std::vector<std::size_t>& ppf_witness);

// ---------------------------------------------------------------------
// PPF -> SPPF: pad with n ones to free the cardinality constraint.

struct PpfToSppfCertificate {
  PPFInstance source;
  SPPFInstance target;
};

PpfToSppfCertificate ppf_to_sppf(const PPFInstance&);

std::vector<std::size_t> ppf_witness_from_sppf(
    const PpfToSppfCertificate& cert,
    const std::vector<std::size_t>& sppf_witness);

// ---------------------------------------------------------------------
// SPPF -> OMS: the star gadget. Center weight a = 2n * prod(b_i) with
// b_i = M * b'_i and M = 2n * prod(b'_i); leaves weigh 1, edge i weighs
// b_i. An OMS-optimal sequence must finish the leaves with a balanced
// split, and the instance is a YES exactly when that split also balances
// the products of the original items.

struct SppfToOmsStarCertificate {
  SPPFInstance source;
  bool feasible = false;  // false for odd item counts: answer NO
  std::string reason;
  TensorNetwork network{Representation::multiplicative};
  BigInt leaf_scale;     // M
  BigInt center_weight;  // a
  std::vector<BigInt> edge_weights;
  VertexId center;
  std::vector<VertexId> item_vertex;
};

SppfToOmsStarCertificate sppf_to_oms_star(const SPPFInstance&);

/// Solves OMS on the star exactly and inspects the final leaf-only merge
/// of the optimal sequence (and of every co-optimal sequence if the first
/// fails the product test).
Decision decide_sppf(const SppfToOmsStarCertificate& cert,
                     const SolverLimits& limits = {});

// ---------------------------------------------------------------------
// End-to-end pipelines: reduce, solve, decide, back-map.

Decision decide_partition_via_cms0(const PartitionInstance&,
                                   const SolverLimits& limits = {});
Decision decide_exact_partition_via_cms0(const ExactPartitionInstance&,
                                         const SolverLimits& limits = {});
Decision decide_sp_via_oms(const SubsetProductInstance&,
                           const SolverLimits& limits = {});
Decision decide_ppf_via_oms(const PPFInstance&, const SolverLimits& limits = {});
Decision decide_sppf_via_oms(const SPPFInstance&,
                             const SolverLimits& limits = {});

}  // namespace tnorder
