#include "tnorder/json_io.hpp"

#include <json.hpp>

#include "tnorder/error.hpp"

namespace tnorder {

namespace {

using nlohmann::json;

constexpr int kIndent = 2;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

Rational number_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
  throw ParseError(std::string("field \"") + key +
                   "\" must be a decimal string or an integer");
}

BigInt integer_of(const json& v, const char* what) {
  Rational r;
  if (v.is_string()) {
    r = rational_from_string(v.get<std::string>());
  } else if (v.is_number_integer()) {
    r = Rational(v.get<std::int64_t>());
  } else if (v.is_number_unsigned()) {
    r = Rational(v.get<std::uint64_t>());
  } else {
    throw ParseError(std::string(what) + " must be a decimal string or an integer");
  }
  if (boost::multiprecision::denominator(r) != 1) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return boost::multiprecision::numerator(r);
}

json network_obj(const TensorNetwork& net) {
  json vertices = json::array();
  for (const auto& [id, weight] : net.vertices()) {
    vertices.push_back({{"id", id}, {"weight", to_decimal_string(weight)}});
  }
  json edges = json::array();
  for (const auto& [key, weight] : net.edges()) {
    edges.push_back({{"u", key.a},
                     {"v", key.b},
                     {"weight", to_decimal_string(weight)}});
  }
  return {{"representation", net.representation() == Representation::additive
                                 ? "additive"
                                 : "multiplicative"},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

TensorNetwork network_of(const json& j) {
  const std::string rep = string_field(j, "representation");
  if (rep != "additive" && rep != "multiplicative") {
    throw ParseError("representation must be \"additive\" or \"multiplicative\"");
  }
  TensorNetwork net(rep == "additive" ? Representation::additive
                                      : Representation::multiplicative);
  const json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw ParseError("\"vertices\" must be an array");
  try {
    for (const json& v : vertices) {
      net.add_vertex(string_field(v, "id"), number_field(v, "weight"));
    }
    const json& edges = field(j, "edges");
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
    for (const json& e : edges) {
      net.add_edge(string_field(e, "u"), string_field(e, "v"),
                   number_field(e, "weight"));
    }
  } catch (const NetworkError& err) {
    throw ParseError(err.what());
  }
  return net;
}

json group_obj(const Group& group) {
  json out = json::array();
  for (const auto& id : group) out.push_back(id);
  return out;
}

Group group_of(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of ids");
  Group out;
  for (const json& v : j) {
    if (!v.is_string()) {
      throw ParseError(std::string(what) + " must contain string ids");
    }
    out.insert(v.get<std::string>());
  }
  return out;
}

json sequence_obj(const ContractionSequence& seq) {
  json steps = json::array();
  for (const auto& step : seq.steps) {
    steps.push_back(
        {{"left", group_obj(step.left)}, {"right", group_obj(step.right)}});
  }
  return {{"steps", std::move(steps)}};
}

json instance_obj(const ProblemInstance& instance) {
  json out;
  auto items_of = [](const std::vector<BigInt>& items) {
    json arr = json::array();
    for (const BigInt& a : items) arr.push_back(to_decimal_string(a));
    return arr;
  };
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, PartitionInstance>) {
          out = {{"problem", "partition"}, {"items", items_of(inst.items)}};
        } else if constexpr (std::is_same_v<T, ExactPartitionInstance>) {
          out = {{"problem", "exact_partition"}, {"items", items_of(inst.items)}};
        } else if constexpr (std::is_same_v<T, SubsetProductInstance>) {
          out = {{"problem", "sp"},
                 {"items", items_of(inst.items)},
                 {"k", to_decimal_string(inst.k)}};
        } else if constexpr (std::is_same_v<T, PPFInstance>) {
          out = {{"problem", "ppf"}, {"items", items_of(inst.items)}};
        } else {
          out = {{"problem", "sppf"}, {"items", items_of(inst.items)}};
        }
      },
      instance);
  return out;
}


json decision_obj(const Decision& decision) {
  json out = {{"answer", decision.yes}};
  json witness = json::array();
  for (std::size_t idx : decision.witness) witness.push_back(idx);
  out["witness"] = std::move(witness);
  if (!decision.reason.empty()) out["reason"] = decision.reason;
  return out;
}

}  // namespace

std::string to_decimal_string(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string to_decimal_string(const BigInt& value) { return value.str(); }

Rational rational_from_string(const std::string& text) {
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw ParseError("not a decimal number: \"" + text + "\"");
  }
}

BigInt bigint_from_string(const std::string& text) {
  Rational r = rational_from_string(text);
  if (boost::multiprecision::denominator(r) != 1) {
    throw ParseError("not an integer: \"" + text + "\"");
  }
  return boost::multiprecision::numerator(r);
}

TensorNetwork network_from_json(const std::string& text) {
  return network_of(parse(text));
}

std::string network_to_json(const TensorNetwork& net) {
  return network_obj(net).dump(kIndent);
}

ContractionSequence sequence_from_json(const std::string& text) {
  const json j = parse(text);
  const json& steps = field(j, "steps");
  if (!steps.is_array()) throw ParseError("\"steps\" must be an array");
  ContractionSequence seq;
  for (const json& s : steps) {
    seq.steps.push_back({group_of(field(s, "left"), "\"left\""),
                         group_of(field(s, "right"), "\"right\"")});
  }
  return seq;
}

std::string sequence_to_json(const ContractionSequence& seq) {
  return sequence_obj(seq).dump(kIndent);
}

std::string cost_report_to_json(const CostReport& report) {
  json per_step;
  json out;
  if (report.objective == Objective::opn) {
    json opn = json::array();
    for (const BigInt& v : report.step_opn) opn.push_back(to_decimal_string(v));
    per_step["opn"] = std::move(opn);
    out["objective"] = "opn";
    out["total_opn"] = to_decimal_string(report.total_opn);
  } else {
    json pt = json::array();
    for (const Rational& v : report.step_pt) pt.push_back(to_decimal_string(v));
    json ps = json::array();
    for (const Rational& v : report.step_ps) ps.push_back(to_decimal_string(v));
    per_step["pt"] = std::move(pt);
    per_step["ps"] = std::move(ps);
    out["objective"] = report.objective == Objective::pt ? "pt" : "ps";
    out["pt"] = to_decimal_string(report.pt);
    out["ps"] = to_decimal_string(report.ps);
  }
  out["per_step"] = std::move(per_step);
  return out.dump(kIndent);
}

std::string solve_result_to_json(const SolveResult& result) {
  json out;
  switch (result.objective) {
    case Objective::opn: out["objective"] = "opn"; break;
    case Objective::pt: out["objective"] = "pt"; break;
    case Objective::ps: out["objective"] = "ps"; break;
  }
  if (std::holds_alternative<BigInt>(result.optimum)) {
    out["optimum"] = to_decimal_string(std::get<BigInt>(result.optimum));
  } else {
    out["optimum"] = to_decimal_string(std::get<Rational>(result.optimum));
  }
  out["sequence"] = sequence_obj(result.sequence);
  return out.dump(kIndent);
}

std::string decision_to_json(const Decision& decision) {
  return decision_obj(decision).dump(kIndent);
}

ProblemInstance instance_from_json(const std::string& text) {
  const json j = parse(text);
  const std::string problem = string_field(j, "problem");
  const json& items_json = field(j, "items");
  if (!items_json.is_array()) throw ParseError("\"items\" must be an array");
  std::vector<BigInt> items;
  for (const json& v : items_json) items.push_back(integer_of(v, "item"));

  if (problem == "partition") return PartitionInstance{std::move(items)};
  if (problem == "exact_partition") {
    return ExactPartitionInstance{std::move(items)};
  }
  if (problem == "sp") {
    return SubsetProductInstance{std::move(items), integer_of(field(j, "k"), "k")};
  }
  if (problem == "ppf") return PPFInstance{std::move(items)};
  if (problem == "sppf") return SPPFInstance{std::move(items)};
  throw ParseError("unknown problem \"" + problem + "\"");
}

std::string instance_to_json(const ProblemInstance& instance) {
  return instance_obj(instance).dump(kIndent);
}

std::string certificate_to_json(const CmsToCms0Certificate& cert) {
  json out = {{"kind", "cms-to-cms0"},
              {"source", network_obj(cert.source)},
              {"target", network_obj(cert.target)},
              {"anchor", cert.anchor}};
  return out.dump(kIndent);
}

std::string certificate_to_json(const CmsToOmsCertificate& cert) {
  json out = {{"kind", "cms-to-oms"},
              {"source", network_obj(cert.source)},
              {"target", network_obj(cert.target)},
              {"scale_base", to_decimal_string(cert.scale_base)},
              {"gap", to_decimal_string(cert.gap)}};
  return out.dump(kIndent);
}

std::string certificate_to_json(const PartitionToExactCertificate& cert) {
  json out = {{"kind", "partition-to-exact"},
              {"source", instance_obj(ProblemInstance{cert.source})},
              {"target", instance_obj(ProblemInstance{cert.target})},
              {"total", to_decimal_string(cert.total)}};
  return out.dump(kIndent);
}

std::string certificate_to_json(const ExactToCms0Certificate& cert) {
  json out = {{"kind", "exact-to-cms0"},
              {"source", instance_obj(ProblemInstance{cert.source})},
              {"feasible", cert.feasible}};
  if (!cert.feasible) {
    out["reason"] = cert.reason;
    return out.dump(kIndent);
  }
  out["network"] = network_obj(cert.network);
  out["x"] = to_decimal_string(cert.x);
  out["total"] = to_decimal_string(cert.total);
  out["anchor_weight"] = to_decimal_string(cert.anchor_weight);
  out["threshold"] = to_decimal_string(cert.threshold);
  out["anchor"] = cert.anchor;
  out["item_vertex"] = cert.item_vertex;
  return out.dump(kIndent);
}

std::string certificate_to_json(const SpToPpfCertificate& cert) {
  json out = {{"kind", "sp-to-ppf"},
              {"source", instance_obj(ProblemInstance{cert.source})},
              {"target", instance_obj(ProblemInstance{cert.target})},
              {"all_product", to_decimal_string(cert.all_product)},
              {"k_squared", to_decimal_string(cert.k_squared)},
              {"product_index", cert.product_index},
              {"square_index", cert.square_index}};
  return out.dump(kIndent);
}

std::string certificate_to_json(const PpfToSppfCertificate& cert) {
  json out = {{"kind", "ppf-to-sppf"},
              {"source", instance_obj(ProblemInstance{cert.source})},
              {"target", instance_obj(ProblemInstance{cert.target})}};
  return out.dump(kIndent);
}

std::string certificate_to_json(const SppfToOmsStarCertificate& cert) {
  json out = {{"kind", "sppf-to-oms"},
              {"source", instance_obj(ProblemInstance{cert.source})},
              {"feasible", cert.feasible}};
  if (!cert.feasible) {
    out["reason"] = cert.reason;
    return out.dump(kIndent);
  }
  json edges = json::array();
  for (const BigInt& b : cert.edge_weights) {
    edges.push_back(to_decimal_string(b));
  }
  out["network"] = network_obj(cert.network);
  out["leaf_scale"] = to_decimal_string(cert.leaf_scale);
  out["center_weight"] = to_decimal_string(cert.center_weight);
  out["edge_weights"] = std::move(edges);
  out["center"] = cert.center;
  out["item_vertex"] = cert.item_vertex;
  return out.dump(kIndent);
}

}  // namespace tnorder
