#pragma once

// Constructive sequence transformations on CMS-0 networks (additive, all
// vertex weights zero). Both rewrites keep the max per-step time power
// exactly invariant; the tests assert that invariant as rational equality.

#include <vector>

#include "tnorder/cost.hpp"
#include "tnorder/network.hpp"

namespace tnorder {

/// Reorders a full contraction sequence so that vertex `v` takes part only
/// in the final step, without changing the sequence's time power. Follows
/// the inductive swap procedure: while the group enclosing v at the
/// three-group stage has size > 1, contract the other two groups first and
/// split v's group one level.
ContractionSequence make_vertex_last(const TensorNetwork& net,
                                     const ContractionSequence& seq,
                                     const VertexId& v);

/// Rebuilds the sequence around the step at `step_index` contracting groups
/// V1 and V2: the steps creating V1 and V2 are kept (in their original
/// relative order), everything else is contracted into a single group V3,
/// and the sequence ends with (V1, V2) then (V1+V2, V3). Time power is
/// unchanged. If the chosen step is the final one there is no remainder and
/// the sequence is returned as is.
ContractionSequence isolate_step(const TensorNetwork& net,
                                 const ContractionSequence& seq,
                                 std::size_t step_index);

/// Left-deep chain: contract the first two vertices, then absorb one
/// further vertex per step. `order` defaults to the id-sorted vertex list
/// and must otherwise be a permutation of it.
ContractionSequence chain_sequence(const TensorNetwork& net,
                                   const std::vector<VertexId>& order = {});

}  // namespace tnorder
