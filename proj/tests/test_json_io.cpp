#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include "support/helpers.hpp"
#include "tnorder/error.hpp"
#include "tnorder/generate.hpp"
#include "tnorder/json_io.hpp"
#include "tnorder/reduction.hpp"

using namespace tnorder;
using nlohmann::json;

TEST_CASE("networks round-trip through JSON exactly") {
  TensorNetwork net(Representation::additive);
  net.add_vertex("A", Rational("997817597299/500000000000"));
  net.add_vertex("B", 0);
  net.add_vertex("C", Rational(7) / 2);
  net.add_edge("A", "B", 2);
  net.add_edge("B", "C", Rational("123456789123456789123456789"));

  TensorNetwork back = network_from_json(network_to_json(net));
  CHECK(back == net);

  TensorNetwork mult = tntest::load_network("figure2.json");
  CHECK(network_from_json(network_to_json(mult)) == mult);
}

TEST_CASE("weights serialize as decimal strings") {
  TensorNetwork net(Representation::additive);
  net.add_vertex("A", Rational(3) / 4);
  json j = json::parse(network_to_json(net));
  CHECK(j["vertices"][0]["weight"] == "3/4");
  CHECK(j["representation"] == "additive");
}

TEST_CASE("integer weights are accepted as JSON numbers") {
  TensorNetwork net = network_from_json(R"({
    "representation": "multiplicative",
    "vertices": [{"id": "a", "weight": 5}, {"id": "b", "weight": "25"}],
    "edges": [{"u": "a", "v": "b", "weight": 125}]
  })");
  CHECK(net.vertex_weight("a") == 5);
  CHECK(net.edge_weight("a", "b") == 125);
}

TEST_CASE("malformed networks raise ParseError") {
  CHECK_THROWS_AS(network_from_json("not json"), ParseError);
  CHECK_THROWS_AS(network_from_json("{}"), ParseError);
  CHECK_THROWS_AS(network_from_json(R"({"representation":"other",
    "vertices":[],"edges":[]})"),
                  ParseError);
  // Domain violations surface as parse errors too (weight below 1).
  CHECK_THROWS_AS(network_from_json(R"({"representation":"multiplicative",
    "vertices":[{"id":"a","weight":"0"}],"edges":[]})"),
                  ParseError);
  CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
  CHECK_THROWS_AS(bigint_from_string("1/2"), ParseError);
}

TEST_CASE("sequences round-trip") {
  ContractionSequence seq;
  seq.steps = {{{"A"}, {"B"}}, {{"A", "B"}, {"C"}}};
  CHECK(sequence_from_json(sequence_to_json(seq)) == seq);
  CHECK_THROWS_AS(sequence_from_json(R"({"steps": [{"left": "A"}]})"),
                  ParseError);
}

TEST_CASE("instances round-trip for all five problems") {
  std::vector<ProblemInstance> instances = {
      PartitionInstance{{1, 2, 3}},
      ExactPartitionInstance{{1, 1, 1, 3}},
      SubsetProductInstance{{2, 3}, 6},
      PPFInstance{{4, 2, 2}},
      SPPFInstance{{2, 2, 1, 4}},
  };
  for (const auto& inst : instances) {
    ProblemInstance back = instance_from_json(instance_to_json(inst));
    CHECK(back.index() == inst.index());
  }
  ProblemInstance sp = instance_from_json(
      R"({"problem": "sp", "items": [2, "3"], "k": "6"})");
  CHECK(std::get<SubsetProductInstance>(sp).k == 6);
  CHECK_THROWS_AS(instance_from_json(R"({"problem":"x","items":[]})"),
                  ParseError);
  CHECK_THROWS_AS(instance_from_json(R"({"problem":"sp","items":[1.5],"k":2})"),
                  ParseError);
}

TEST_CASE("reports and results serialize with exact strings") {
  TensorNetwork net = tntest::load_network("figure2.json");
  ContractionSequence chain = tntest::load_sequence("seq_abcd_chain.json");
  json report =
      json::parse(cost_report_to_json(evaluate_sequence(net, chain, Objective::opn)));
  CHECK(report["total_opn"] == "96875");
  CHECK(report["per_step"]["opn"][1] == "78125");

  json solved = json::parse(
      solve_result_to_json(solve_dp(net, Objective::opn)));
  CHECK(solved["objective"] == "opn");
  CHECK(solved["sequence"]["steps"].is_array());

  json decision = json::parse(decision_to_json({true, {0, 2}, ""}));
  CHECK(decision["answer"] == true);
  CHECK(decision["witness"] == json::array({0, 2}));
}

TEST_CASE("certificates expose the gadget constants") {
  json gadget = json::parse(
      certificate_to_json(exact_to_cms0(ExactPartitionInstance{{1, 1, 1, 1}})));
  CHECK(gadget["kind"] == "exact-to-cms0");
  CHECK(gadget["x"] == "126");
  CHECK(gadget["threshold"] == "996");
  CHECK(gadget["anchor_weight"] == "2");
  CHECK(gadget["network"]["vertices"].size() == 5);

  json star = json::parse(
      certificate_to_json(sppf_to_oms_star(SPPFInstance{{1, 1}})));
  CHECK(star["leaf_scale"] == "4");
  CHECK(star["center_weight"] == "64");
  CHECK(star["edge_weights"] == json::array({"4", "4"}));

  json infeasible = json::parse(
      certificate_to_json(exact_to_cms0(ExactPartitionInstance{{1, 1, 1, 2}})));
  CHECK(infeasible["feasible"] == false);
  CHECK(infeasible.contains("reason"));

  json shifted = json::parse(
      certificate_to_json(partition_to_exact(PartitionInstance{{1, 2, 3}})));
  CHECK(shifted["total"] == "6");
  CHECK(shifted["target"]["items"] ==
        json::array({"7", "8", "9", "6", "6", "6"}));

  json ppf = json::parse(
      certificate_to_json(sp_to_ppf(SubsetProductInstance{{2, 3}, 6})));
  CHECK(ppf["all_product"] == "6");
  CHECK(ppf["k_squared"] == "36");
  CHECK(ppf["product_index"] == 2);

  TensorNetwork weighted = tntest::load_network("figure5_source.json");
  json anchored = json::parse(certificate_to_json(cms_to_cms0(weighted)));
  CHECK(anchored["anchor"] == "v0");
  CHECK(anchored["target"]["vertices"].size() == 5);

  json lifted = json::parse(certificate_to_json(cms_to_oms(
      network_from_json(tntest::read_fixture("figure3.json")))));
  CHECK(lifted["scale_base"] == "16");  // max(4^2, 2)
  CHECK(lifted["gap"] == "1");
}
