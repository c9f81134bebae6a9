#include "tnorder/generate.hpp"

#include <string>

#include "tnorder/error.hpp"
#include "tnorder/reduction.hpp"

namespace tnorder {

namespace {

// Engine-stable uniform draw; std::uniform_int_distribution is not pinned
// across standard libraries, and fixtures must be reproducible.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t lo,
                      std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

VertexId nth_id(std::size_t i) { return "v" + std::to_string(i); }

}  // namespace

TensorNetwork make_complete_network(std::size_t n, const Rational& edge_weight,
                                    const Rational& vertex_weight,
                                    Representation rep) {
  if (n < 2) throw NetworkError("complete network needs at least 2 vertices");
  TensorNetwork net(rep);
  for (std::size_t i = 0; i < n; ++i) net.add_vertex(nth_id(i), vertex_weight);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      net.add_edge(nth_id(i), nth_id(j), edge_weight);
    }
  }
  return net;
}

TensorNetwork make_random_network(std::mt19937_64& rng,
                                  const RandomNetworkOptions& options) {
  if (options.vertices < 2) {
    throw NetworkError("random network needs at least 2 vertices");
  }
  const bool additive = options.representation == Representation::additive;
  TensorNetwork net(options.representation);
  for (std::size_t i = 0; i < options.vertices; ++i) {
    Rational w(0);
    if (!options.zero_vertex_weights) {
      w = bounded(rng, additive ? 0 : 1, options.max_weight);
    } else if (!additive) {
      w = 1;
    }
    net.add_vertex(nth_id(i), w);
  }
  for (std::size_t i = 0; i < options.vertices; ++i) {
    for (std::size_t j = i + 1; j < options.vertices; ++j) {
      if (bounded(rng, 0, 99) < options.edge_percent) {
        net.add_edge(nth_id(i), nth_id(j),
                     Rational(bounded(rng, 1, options.max_weight)));
      }
    }
  }
  return net;
}

TensorNetwork make_random_tree_network(std::mt19937_64& rng,
                                       const RandomNetworkOptions& options) {
  if (options.vertices < 2) {
    throw NetworkError("random tree needs at least 2 vertices");
  }
  const bool additive = options.representation == Representation::additive;
  TensorNetwork net(options.representation);
  for (std::size_t i = 0; i < options.vertices; ++i) {
    Rational w(0);
    if (!options.zero_vertex_weights) {
      w = bounded(rng, additive ? 0 : 1, options.max_weight);
    } else if (!additive) {
      w = 1;
    }
    net.add_vertex(nth_id(i), w);
  }
  for (std::size_t i = 1; i < options.vertices; ++i) {
    net.add_edge(nth_id(bounded(rng, 0, i - 1)), nth_id(i),
                 Rational(bounded(rng, 1, options.max_weight)));
  }
  return net;
}

TensorNetwork make_star_network(const std::vector<BigInt>& items) {
  SppfToOmsStarCertificate cert = sppf_to_oms_star(SPPFInstance{items});
  if (!cert.feasible) throw InstanceError("star gadget: " + cert.reason);
  return cert.network;
}

}  // namespace tnorder
