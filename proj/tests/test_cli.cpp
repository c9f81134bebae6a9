#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "support/helpers.hpp"

// End-to-end checks of the tn_order binary: output schemas, determinism
// and the documented exit codes.

namespace {

using nlohmann::json;

struct RunOutcome {
  int exit_code = -1;
  std::string output;
};

RunOutcome run_cli(const std::string& args) {
  const std::string command =
      std::string(TN_CLI_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> chunk{};
  RunOutcome outcome;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(chunk.data(), 1, chunk.size(), pipe)) {
    outcome.output.append(chunk.data(), got);
  }
  const int status = pclose(pipe);
  outcome.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return outcome;
}

std::string fixture(const std::string& name) {
  return std::string(TN_FIXTURE_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("eval reproduces the figure totals") {
  RunOutcome opn = run_cli("eval " + fixture("figure2.json") + " " +
                           fixture("seq_abcd_chain.json") + " --objective opn");
  CHECK(opn.exit_code == 0);
  json report = json::parse(opn.output);
  CHECK(report["total_opn"] == "96875");
  CHECK(report["per_step"]["opn"] == json::array({"3125", "78125", "15625"}));

  RunOutcome powers =
      run_cli("eval " + fixture("figure3.json") + " " +
              fixture("seq_abcd_chain.json") + " --objective pt");
  json p = json::parse(powers.output);
  CHECK(p["pt"] == "7");
  CHECK(p["ps"] == "6");
}

TEST_CASE("eval handles a two-vertex network without edges") {
  const std::string net = temp_file("tn_cli_pair.json", R"({
    "representation": "additive",
    "vertices": [{"id": "a", "weight": "2"}, {"id": "b", "weight": "3"}],
    "edges": []
  })");
  const std::string seq = temp_file(
      "tn_cli_pair_seq.json", R"({"steps": [{"left": ["a"], "right": ["b"]}]})");
  RunOutcome out = run_cli("eval " + net + " " + seq + " --objective pt");
  CHECK(out.exit_code == 0);
  json report = json::parse(out.output);
  CHECK(report["per_step"]["pt"] == json::array({"5"}));
  CHECK(report["ps"] == "5");
}

TEST_CASE("eval exit codes: parse failure 2, invalid sequence 3") {
  const std::string garbage = temp_file("tn_cli_garbage.json", "{broken");
  CHECK(run_cli("eval " + garbage + " " + fixture("seq_abcd_chain.json"))
            .exit_code == 2);

  const std::string bad_seq = temp_file(
      "tn_cli_bad_seq.json",
      R"({"steps": [{"left": ["A"], "right": ["B"]},
                    {"left": ["A"], "right": ["C"]}]})");
  CHECK(run_cli("eval " + fixture("figure2.json") + " " + bad_seq +
                " --objective opn")
            .exit_code == 3);

  CHECK(run_cli("eval " + fixture("figure2.json") + " " +
                fixture("seq_abcd_chain.json") + " --objective pt")
            .exit_code == 2);  // objective/representation mismatch
}

TEST_CASE("solve picks the diverging optimum and respects limits") {
  RunOutcome oms =
      run_cli("solve " + fixture("figure4b.json") + " --objective opn");
  CHECK(oms.exit_code == 0);
  json solved = json::parse(oms.output);
  CHECK(solved["optimum"] == "100009900000000");
  CHECK(solved["sequence"]["steps"][0]["left"] == json::array({"B"}));

  RunOutcome k5 = run_cli("solve " + fixture("k5_cms0.json") +
                          " --objective pt --method brute");
  CHECK(json::parse(k5.output)["optimum"] == "8");

  CHECK(run_cli("solve " + fixture("k5_cms0.json") +
                " --objective pt --brute-max 4 --method brute")
            .exit_code == 4);
}

TEST_CASE("decide runs pipelines and reports short-circuits with exit 5") {
  const std::string yes =
      temp_file("tn_cli_p123.json", R"({"problem":"partition","items":[1,2,3]})");
  RunOutcome out = run_cli("decide partition-to-exact " + yes);
  CHECK(out.exit_code == 0);
  CHECK(json::parse(out.output)["answer"] == true);

  const std::string odd = temp_file(
      "tn_cli_odd.json", R"({"problem":"exact_partition","items":[1,1,1,2]})");
  RunOutcome no = run_cli("decide exact-to-cms0 " + odd);
  CHECK(no.exit_code == 5);
  json report = json::parse(no.output);
  CHECK(report["answer"] == false);
  CHECK(report.contains("reason"));

  const std::string sp =
      temp_file("tn_cli_sp.json", R"({"problem":"sp","items":[2,3],"k":6})");
  CHECK(json::parse(run_cli("decide sp-to-ppf " + sp).output)["answer"] ==
        true);

  CHECK(run_cli("decide cms-to-cms0 " + yes).exit_code == 2);
  CHECK(run_cli("decide partition-to-exact " + odd).exit_code == 2);  // wrong kind
}

TEST_CASE("reduce emits certificates") {
  const std::string inst =
      temp_file("tn_cli_ep.json",
                R"({"problem":"exact_partition","items":[1,1,1,1]})");
  RunOutcome out = run_cli("reduce exact-to-cms0 " + inst);
  CHECK(out.exit_code == 0);
  json cert = json::parse(out.output);
  CHECK(cert["x"] == "126");
  CHECK(cert["threshold"] == "996");

  RunOutcome anchored = run_cli("reduce cms-to-cms0 " + fixture("figure5_source.json"));
  CHECK(json::parse(anchored.output)["anchor"] == "v0");
}

TEST_CASE("gen is deterministic under a seed") {
  RunOutcome a = run_cli("gen random --n 6 --seed 42");
  RunOutcome b = run_cli("gen random --n 6 --seed 42");
  RunOutcome c = run_cli("gen random --n 6 --seed 43");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output != c.output);

  json k5 = json::parse(run_cli("gen complete --n 5").output);
  CHECK(k5["vertices"].size() == 5);
  CHECK(k5["edges"].size() == 10);
  CHECK(k5["edges"][0]["weight"] == "1");

  json star = json::parse(run_cli("gen star --items 1,1").output);
  CHECK(star["vertices"][0]["weight"] == "64");

  json tree = json::parse(run_cli("gen tree --n 7 --seed 9").output);
  CHECK(tree["edges"].size() == 6);
}

TEST_CASE("check suites pass and write machine-readable reports") {
  RunOutcome out = run_cli("check theorem1 --cases 25 --seed 7");
  CHECK(out.exit_code == 0);
  json report = json::parse(out.output);
  CHECK(report["passed"] == true);
  CHECK(report["suites"][0]["name"] == "theorem1");
  CHECK(report["suites"][0]["cases"] == 25);
}

TEST_CASE("TN_ORDER_CONFIG supplies defaults") {
  const std::string config = temp_file(
      "tn_cli_config.json", R"({"brute_max_vertices": 4, "seed": 7})");
  const std::string command = "TN_ORDER_CONFIG=" + config + " " +
                              std::string(TN_CLI_BIN) + " solve " +
                              fixture("k5_cms0.json") +
                              " --objective pt --method brute 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> chunk{};
  while (fread(chunk.data(), 1, chunk.size(), pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 4);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "tn_cli_out.json";
  std::filesystem::remove(path);
  RunOutcome out = run_cli("solve " + fixture("figure4b.json") +
                           " --objective opn --out " + path.string());
  CHECK(out.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json report;
  in >> report;
  CHECK(report["optimum"] == "100009900000000");
}
