#include "tnorder/network.hpp"

#include <sstream>

#include "tnorder/error.hpp"

namespace tnorder {

namespace {

std::string quote_id(const VertexId& id) { return "'" + id + "'"; }

VertexId merged_id(const Group& members) {
  std::string out;
  for (const auto& m : members) {
    if (!out.empty()) out += '+';
    out += m;
  }
  return out;
}

}  // namespace

EdgeKey::EdgeKey(VertexId u, VertexId v) : a(std::move(u)), b(std::move(v)) {
  if (a > b) std::swap(a, b);
}

Rational TensorNetwork::identity_weight() const {
  return rep_ == Representation::additive ? Rational(0) : Rational(1);
}

void TensorNetwork::check_weight(const Rational& weight,
                                 const char* what) const {
  if (rep_ == Representation::additive) {
    if (weight < 0) {
      throw NetworkError(std::string(what) +
                         " weight must be non-negative in an additive network");
    }
  } else {
    if (boost::multiprecision::denominator(weight) != 1 || weight < 1) {
      throw NetworkError(
          std::string(what) +
          " weight must be an integer >= 1 in a multiplicative network");
    }
  }
}

void TensorNetwork::add_vertex(const VertexId& id, const Rational& weight) {
  if (id.empty()) throw NetworkError("vertex id must be non-empty");
  if (weights_.contains(id)) {
    throw NetworkError("duplicate vertex " + quote_id(id));
  }
  check_weight(weight, "vertex");
  weights_.emplace(id, weight);
  members_.emplace(id, Group{id});
}

void TensorNetwork::add_edge(const VertexId& u, const VertexId& v,
                             const Rational& weight) {
  if (u == v) throw NetworkError("self-loop on " + quote_id(u));
  if (!has_vertex(u)) throw NetworkError("unknown vertex " + quote_id(u));
  if (!has_vertex(v)) throw NetworkError("unknown vertex " + quote_id(v));
  EdgeKey key(u, v);
  if (edges_.contains(key)) {
    throw NetworkError("duplicate edge " + quote_id(u) + "-" + quote_id(v));
  }
  check_weight(weight, "edge");
  edges_.emplace(key, weight);
}

bool TensorNetwork::has_edge(const VertexId& u, const VertexId& v) const {
  return edges_.contains(EdgeKey(u, v));
}

const Rational& TensorNetwork::vertex_weight(const VertexId& id) const {
  auto it = weights_.find(id);
  if (it == weights_.end()) throw NetworkError("unknown vertex " + quote_id(id));
  return it->second;
}

Rational TensorNetwork::edge_weight(const VertexId& u,
                                    const VertexId& v) const {
  if (!has_vertex(u)) throw NetworkError("unknown vertex " + quote_id(u));
  if (!has_vertex(v)) throw NetworkError("unknown vertex " + quote_id(v));
  auto it = edges_.find(EdgeKey(u, v));
  return it == edges_.end() ? identity_weight() : it->second;
}

const Group& TensorNetwork::members(const VertexId& id) const {
  auto it = members_.find(id);
  if (it == members_.end()) throw NetworkError("unknown vertex " + quote_id(id));
  return it->second;
}

std::vector<VertexId> TensorNetwork::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(weights_.size());
  for (const auto& [id, _] : weights_) ids.push_back(id);
  return ids;
}

Group TensorNetwork::all_members() const {
  Group all;
  for (const auto& [_, group] : members_) all.insert(group.begin(), group.end());
  return all;
}

std::pair<TensorNetwork, VertexId> contract_pair(const TensorNetwork& net,
                                                 const VertexId& u,
                                                 const VertexId& v) {
  if (u == v) throw NetworkError("cannot contract " + quote_id(u) + " with itself");
  if (!net.has_vertex(u)) throw NetworkError("unknown vertex " + quote_id(u));
  if (!net.has_vertex(v)) throw NetworkError("unknown vertex " + quote_id(v));

  const bool additive = net.representation() == Representation::additive;
  Group merged_members = net.members(u);
  const Group& vm = net.members(v);
  merged_members.insert(vm.begin(), vm.end());
  VertexId merged = merged_id(merged_members);
  if (net.has_vertex(merged)) {
    throw NetworkError("merged id " + quote_id(merged) +
                       " collides with an existing vertex");
  }

  TensorNetwork out(net.representation());
  for (const auto& [id, weight] : net.vertices()) {
    if (id == u || id == v) continue;
    out.weights_.emplace(id, weight);
    out.members_.emplace(id, net.members(id));
  }
  Rational w = additive ? Rational(net.vertex_weight(u) + net.vertex_weight(v))
                        : Rational(net.vertex_weight(u) * net.vertex_weight(v));
  out.weights_.emplace(merged, std::move(w));
  out.members_.emplace(merged, std::move(merged_members));

  // Carry edges over, folding parallel edges to the merged vertex.
  std::map<VertexId, Rational> folded;
  for (const auto& [key, weight] : net.edges()) {
    const bool a_in = key.a == u || key.a == v;
    const bool b_in = key.b == u || key.b == v;
    if (a_in && b_in) continue;  // internal u-v edge disappears
    if (!a_in && !b_in) {
      out.edges_.emplace(key, weight);
      continue;
    }
    const VertexId& other = a_in ? key.b : key.a;
    auto [it, inserted] = folded.emplace(other, weight);
    if (!inserted) {
      it->second = additive ? Rational(it->second + weight)
                             : Rational(it->second * weight);
    }
  }
  for (auto& [other, weight] : folded) {
    out.edges_.emplace(EdgeKey(merged, other), std::move(weight));
  }
  return {std::move(out), std::move(merged)};
}

Rational wd(const TensorNetwork& net, const Group& group) {
  if (group.empty()) throw NetworkError("wd of an empty group");
  for (const auto& id : group) {
    if (!net.has_vertex(id)) {
      throw NetworkError("unknown group member " + quote_id(id));
    }
  }
  const bool additive = net.representation() == Representation::additive;
  Rational acc = net.identity_weight();
  for (const auto& id : group) {
    const Rational& w = net.vertex_weight(id);
    acc = additive ? Rational(acc + w) : Rational(acc * w);
  }
  for (const auto& [key, weight] : net.edges()) {
    if (group.contains(key.a) != group.contains(key.b)) {
      acc = additive ? Rational(acc + weight) : Rational(acc * weight);
    }
  }
  return acc;
}

namespace {

// Exact log_base of an integer >= 1; throws when w is not a power of base.
BigInt exact_log(const BigInt& w, const BigInt& base) {
  BigInt rest = w;
  BigInt exponent = 0;
  while (rest > 1) {
    if (rest % base != 0) {
      std::ostringstream msg;
      msg << "weight " << w << " is not a power of " << base;
      throw NetworkError(msg.str());
    }
    rest /= base;
    ++exponent;
  }
  return exponent;
}

BigInt exact_pow(const BigInt& base, const BigInt& exponent) {
  if (exponent > 1u << 20) {
    throw NetworkError("exponent too large for exact conversion");
  }
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

}  // namespace

TensorNetwork convert(const TensorNetwork& net, Representation target,
                      const BigInt& base) {
  if (base < 2) throw NetworkError("conversion base must be >= 2");
  if (net.representation() == target) return net;

  const bool to_additive = target == Representation::additive;
  auto convert_weight = [&](const Rational& w) -> Rational {
    if (to_additive) {
      return Rational(exact_log(boost::multiprecision::numerator(w), base));
    }
    if (boost::multiprecision::denominator(w) != 1) {
      std::ostringstream msg;
      msg << "additive weight " << w << " is not an integer exponent";
      throw NetworkError(msg.str());
    }
    return Rational(exact_pow(base, boost::multiprecision::numerator(w)));
  };

  TensorNetwork out(target);
  out.members_ = net.members_;
  for (const auto& [id, weight] : net.vertices()) {
    Rational w = convert_weight(weight);
    out.check_weight(w, "vertex");
    out.weights_.emplace(id, std::move(w));
  }
  for (const auto& [key, weight] : net.edges()) {
    Rational w = convert_weight(weight);
    out.check_weight(w, "edge");
    out.edges_.emplace(key, std::move(w));
  }
  return out;
}

}  // namespace tnorder
