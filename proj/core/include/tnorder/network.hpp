#pragma once

// Tensor networks as weighted undirected simple graphs, plus the pairwise
// contraction semantics on them. All arithmetic is exact: additive weights
// are rationals, multiplicative weights are arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tnorder {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using VertexId = std::string;

/// Non-empty set of original vertex ids that were merged into one vertex.
using Group = std::set<VertexId>;

enum class Representation {
  /// Weights are index counts (logarithms of dimensions); they combine by
  /// addition and must be non-negative rationals.
  additive,
  /// Weights are products of index dimensions; they combine by
  /// multiplication and must be integers >= 1.
  multiplicative,
};

/// Unordered vertex pair, stored with `a <= b`.
struct EdgeKey {
  VertexId a;
  VertexId b;

  EdgeKey(VertexId u, VertexId v);
  auto operator<=>(const EdgeKey&) const = default;
};

/// Weighted simple graph under a declared representation. Vertices carry
/// the set of original ids they stand for; vertices added directly are
/// singleton groups of themselves. Merged vertices get a fresh id built
/// from the sorted member list ("A+B+C"), so ids stay stable and readable.
class TensorNetwork {
 public:
  explicit TensorNetwork(Representation rep) : rep_(rep) {}

  Representation representation() const { return rep_; }
  std::size_t vertex_count() const { return weights_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Identity element for weight combination: 0 additive, 1 multiplicative.
  Rational identity_weight() const;

  void add_vertex(const VertexId& id, const Rational& weight);
  void add_edge(const VertexId& u, const VertexId& v, const Rational& weight);

  bool has_vertex(const VertexId& id) const { return weights_.contains(id); }
  bool has_edge(const VertexId& u, const VertexId& v) const;

  const Rational& vertex_weight(const VertexId& id) const;

  /// Weight of the edge u-v; an absent edge is the identity weight.
  Rational edge_weight(const VertexId& u, const VertexId& v) const;

  /// Original vertex ids merged into `id` (singleton for original vertices).
  const Group& members(const VertexId& id) const;

  const std::map<VertexId, Rational>& vertices() const { return weights_; }
  const std::map<EdgeKey, Rational>& edges() const { return edges_; }

  /// Sorted list of current vertex ids.
  std::vector<VertexId> vertex_ids() const;

  /// Union of all member sets: the original vertices of the network.
  Group all_members() const;

  bool operator==(const TensorNetwork&) const = default;

 private:
  friend std::pair<TensorNetwork, VertexId> contract_pair(
      const TensorNetwork&, const VertexId&, const VertexId&);
  friend TensorNetwork convert(const TensorNetwork&, Representation,
                               const BigInt&);

  void check_weight(const Rational& weight, const char* what) const;

  Representation rep_;
  std::map<VertexId, Rational> weights_;
  std::map<VertexId, Group> members_;
  std::map<EdgeKey, Rational> edges_;
};

/// Contracts vertices u and v (which need not be adjacent: an absent edge
/// contributes the identity weight). Returns the reduced network and the id
/// of the merged vertex. The merged vertex weight is W(u) (+ or *) W(v);
/// parallel edges to every third vertex are combined the same way; the u-v
/// edge disappears.
std::pair<TensorNetwork, VertexId> contract_pair(const TensorNetwork& net,
                                                 const VertexId& u,
                                                 const VertexId& v);

/// Weight-plus-degree of a group of current vertices: the weight of the
/// vertex that would result from contracting the group internally. Additive:
/// sum of member weights plus all edges leaving the group; multiplicative:
/// the same with products.
Rational wd(const TensorNetwork& net, const Group& group);

/// Exact representation change. Multiplicative -> additive replaces every
/// weight by log_base(weight) and requires all weights to be exact powers of
/// `base`; additive -> multiplicative replaces w by base^w and requires all
/// weights to be non-negative integers. Round-trips are identities.
TensorNetwork convert(const TensorNetwork& net, Representation target,
                      const BigInt& base);

}  // namespace tnorder
