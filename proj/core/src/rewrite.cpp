#include "tnorder/rewrite.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tnorder/error.hpp"

namespace tnorder {

namespace {

void require_cms0(const TensorNetwork& net) {
  if (net.representation() != Representation::additive) {
    throw NetworkError("rewrites are defined on additive networks");
  }
  for (const auto& [id, weight] : net.vertices()) {
    if (weight != 0) {
      throw NetworkError("rewrites require zero vertex weights; vertex '" +
                         id + "' is weighted");
    }
  }
}

// Contraction tree over a full sequence. Leaves are the network's current
// vertices; internal nodes record which step created them.
struct Tree {
  struct Node {
    Group group;
    int left = -1;
    int right = -1;
    bool leaf() const { return left < 0; }
  };
  std::vector<Node> nodes;
  std::vector<int> step_node;  // node created by step i
  int root = -1;

  int add_leaf(Group g) {
    nodes.push_back({std::move(g), -1, -1});
    return int(nodes.size()) - 1;
  }
  int add_merge(int a, int b) {
    Group g = nodes[a].group;
    g.insert(nodes[b].group.begin(), nodes[b].group.end());
    nodes.push_back({std::move(g), a, b});
    return int(nodes.size()) - 1;
  }
};

Tree build_tree(const TensorNetwork& net, const ContractionSequence& seq) {
  validate_sequence(net, seq, /*require_full=*/true);
  Tree tree;
  std::map<Group, int> live;
  for (const auto& [id, _] : net.vertices()) {
    live.emplace(net.members(id), tree.add_leaf(net.members(id)));
  }
  for (const auto& step : seq.steps) {
    const int li = live.at(step.left);
    const int ri = live.at(step.right);
    const int merged = tree.add_merge(li, ri);
    live.erase(step.left);
    live.erase(step.right);
    live.emplace(tree.nodes[merged].group, merged);
    tree.step_node.push_back(merged);
    tree.root = merged;
  }
  return tree;
}

void emit(const Tree& tree, int node, ContractionSequence& out) {
  const Tree::Node& n = tree.nodes[node];
  if (n.leaf()) return;
  emit(tree, n.left, out);
  emit(tree, n.right, out);
  out.steps.push_back({tree.nodes[n.left].group, tree.nodes[n.right].group});
}

// Restructures the part of the tree outside `target` so that the root
// becomes (target, rest), leaving the subtree under `target` alone.
// At every stage the three live groups are (g1 containing the target,
// g2, g3): if g1 is the target we finish by merging g2 with g3; otherwise
// g2 and g3 are contracted first and g1 is opened up one level, so g1
// shrinks strictly. Returns the new root, whose left child is `target`.
int rebuild_with_target_last(Tree& tree, int root, int target) {
  const VertexId rep = *tree.nodes[target].group.begin();
  auto holds = [&](int n) { return tree.nodes[n].group.contains(rep); };

  const int a = tree.nodes[root].left;
  const int b = tree.nodes[root].right;
  const int x = holds(a) ? a : b;
  const int other = x == a ? b : a;
  if (x == target) return tree.add_merge(target, other);

  int g1 = holds(tree.nodes[x].left) ? tree.nodes[x].left : tree.nodes[x].right;
  int g2 = g1 == tree.nodes[x].left ? tree.nodes[x].right : tree.nodes[x].left;
  int g3 = other;
  while (g1 != target) {
    const int merged = tree.add_merge(g2, g3);
    const int l = tree.nodes[g1].left;
    const int r = tree.nodes[g1].right;
    const int next = holds(l) ? l : r;
    g2 = next == l ? r : l;
    g3 = merged;
    g1 = next;
  }
  const int rest = tree.add_merge(g2, g3);
  return tree.add_merge(g1, rest);
}

}  // namespace

ContractionSequence make_vertex_last(const TensorNetwork& net,
                                     const ContractionSequence& seq,
                                     const VertexId& v) {
  require_cms0(net);
  if (!net.has_vertex(v)) throw NetworkError("unknown vertex '" + v + "'");
  if (net.vertex_count() == 1) return seq;

  Tree tree = build_tree(net, seq);
  const Group& target_group = net.members(v);
  const int root = tree.root;
  if (tree.nodes[tree.nodes[root].left].group == target_group ||
      tree.nodes[tree.nodes[root].right].group == target_group) {
    return seq;  // already last, keep the caller's sequence verbatim
  }
  int target = -1;
  for (int i = 0; i < int(tree.nodes.size()); ++i) {
    if (tree.nodes[i].leaf() && tree.nodes[i].group == target_group) {
      target = i;
      break;
    }
  }
  const int new_root = rebuild_with_target_last(tree, root, target);
  ContractionSequence out;
  emit(tree, new_root, out);
  return out;
}

ContractionSequence isolate_step(const TensorNetwork& net,
                                 const ContractionSequence& seq,
                                 std::size_t step_index) {
  require_cms0(net);
  if (step_index >= seq.steps.size()) {
    throw SequenceError("step index " + std::to_string(step_index) +
                        " out of range");
  }
  Tree tree = build_tree(net, seq);
  const int pivot = tree.step_node[step_index];
  if (pivot == tree.root) return seq;  // final step: no remainder to gather

  // Everything outside the pivot's subtree becomes one group, via the same
  // procedure as make_vertex_last with the pivot treated as a leaf.
  const int new_root = rebuild_with_target_last(tree, tree.root, pivot);

  ContractionSequence out;
  // Steps creating V1 and V2, in their original relative order.
  std::vector<bool> inside(tree.nodes.size(), false);
  std::vector<int> stack{tree.nodes[pivot].left, tree.nodes[pivot].right};
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    inside[n] = true;
    if (!tree.nodes[n].leaf()) {
      stack.push_back(tree.nodes[n].left);
      stack.push_back(tree.nodes[n].right);
    }
  }
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    if (i != step_index && inside[tree.step_node[i]]) {
      out.steps.push_back(seq.steps[i]);
    }
  }
  // The remainder group V3, then the three-group finish (V1,V2), (V1+V2,V3).
  const int rest = tree.nodes[new_root].right;
  emit(tree, rest, out);
  out.steps.push_back(seq.steps[step_index]);
  ContractionStep finish{tree.nodes[pivot].group, tree.nodes[rest].group};
  const ContractionStep& original_finish = seq.steps.back();
  if (original_finish.left == finish.right &&
      original_finish.right == finish.left) {
    finish = original_finish;  // same merge; keep the caller's orientation
  }
  out.steps.push_back(std::move(finish));
  return out;
}

ContractionSequence chain_sequence(const TensorNetwork& net,
                                   const std::vector<VertexId>& order) {
  if (net.vertex_count() < 2) {
    throw NetworkError("need at least 2 vertices to contract");
  }
  const std::vector<VertexId> ids = order.empty() ? net.vertex_ids() : order;
  if (!order.empty()) {
    std::vector<VertexId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != net.vertex_ids()) {
      throw NetworkError("order must be a permutation of the vertex ids");
    }
  }
  ContractionSequence out;
  Group acc = net.members(ids[0]);
  for (std::size_t i = 1; i < ids.size(); ++i) {
    const Group& next = net.members(ids[i]);
    out.steps.push_back({acc, next});
    acc.insert(next.begin(), next.end());
  }
  return out;
}

}  // namespace tnorder
