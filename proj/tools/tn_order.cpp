// Batch front end: evaluate sequences, run the exact solvers, build and
// decide reduction gadgets, generate fixtures, and run the theorem check
// suites. All output is JSON on stdout (or --out); diagnostics go to
// stderr with documented exit codes:
//   0 success, 1 check-suite failure, 2 unreadable input or usage error,
//   3 invalid sequence, 4 solver size limit, 5 infeasible parameters.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include <json.hpp>

#include "check_suites.hpp"
#include "tnorder/error.hpp"
#include "tnorder/generate.hpp"
#include "tnorder/json_io.hpp"
#include "tnorder/reduction.hpp"
#include "tnorder/rewrite.hpp"
#include "tnorder/solver.hpp"

namespace {

using namespace tnorder;

struct RunConfig {
  SolverLimits limits;
  std::uint64_t seed = 42;
  std::size_t cases = 100;
  std::string out;
};

RunConfig config_from_env() {
  RunConfig config;
  const char* path = std::getenv("TN_ORDER_CONFIG");
  if (!path) return config;
  std::ifstream in(path);
  if (!in) {
    throw ParseError(std::string("cannot read TN_ORDER_CONFIG file ") + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j =
      nlohmann::json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw ParseError("TN_ORDER_CONFIG is not valid JSON");
  }
  if (j.contains("dp_max_vertices")) {
    config.limits.dp_max_vertices = j["dp_max_vertices"].get<std::size_t>();
  }
  if (j.contains("brute_max_vertices")) {
    config.limits.brute_max_vertices =
        j["brute_max_vertices"].get<std::size_t>();
  }
  if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("cases")) config.cases = j["cases"].get<std::size_t>();
  if (j.contains("out")) config.out = j["out"].get<std::string>();
  if (config.limits.dp_max_vertices < 2 || config.limits.brute_max_vertices < 2) {
    throw ParseError("solver limits must be at least 2");
  }
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(config.out);
  if (!out) throw ParseError("cannot write " + config.out);
  out << text << "\n";
}

Objective objective_of(const std::string& name) {
  if (name == "opn") return Objective::opn;
  if (name == "pt") return Objective::pt;
  if (name == "ps") return Objective::ps;
  throw ParseError("objective must be one of opn, pt, ps");
}

int run_eval(const RunConfig& config, const std::string& network_file,
             const std::string& sequence_file, const std::string& objective) {
  TensorNetwork net = network_from_json(read_file(network_file));
  ContractionSequence seq = sequence_from_json(read_file(sequence_file));
  CostReport report = evaluate_sequence(net, seq, objective_of(objective));
  emit(config, cost_report_to_json(report));
  return 0;
}

int run_solve(const RunConfig& config, const std::string& network_file,
              const std::string& objective, const std::string& method) {
  TensorNetwork net = network_from_json(read_file(network_file));
  SolveResult result;
  if (method == "dp") {
    result = solve_dp(net, objective_of(objective), config.limits);
  } else if (method == "brute") {
    result = brute_force(net, objective_of(objective), config.limits);
  } else {
    throw ParseError("method must be dp or brute");
  }
  emit(config, solve_result_to_json(result));
  return 0;
}

template <typename Instance>
Instance instance_as(const std::string& text, const char* expected) {
  ProblemInstance any = instance_from_json(text);
  if (auto* inst = std::get_if<Instance>(&any)) return std::move(*inst);
  throw ParseError(std::string("this reduction expects a \"") + expected +
                   "\" instance");
}

int run_reduce(const RunConfig& config, const std::string& kind,
               const std::string& input_file) {
  const std::string text = read_file(input_file);
  if (kind == "cms-to-cms0") {
    emit(config, certificate_to_json(cms_to_cms0(network_from_json(text))));
    return 0;
  }
  if (kind == "cms-to-oms") {
    emit(config, certificate_to_json(cms_to_oms(network_from_json(text))));
    return 0;
  }
  if (kind == "partition-to-exact") {
    emit(config, certificate_to_json(partition_to_exact(
                     instance_as<PartitionInstance>(text, "partition"))));
    return 0;
  }
  if (kind == "exact-to-cms0") {
    auto cert = exact_to_cms0(
        instance_as<ExactPartitionInstance>(text, "exact_partition"));
    emit(config, certificate_to_json(cert));
    return cert.feasible ? 0 : 5;
  }
  if (kind == "sp-to-ppf") {
    emit(config, certificate_to_json(
                     sp_to_ppf(instance_as<SubsetProductInstance>(text, "sp"))));
    return 0;
  }
  if (kind == "ppf-to-sppf") {
    emit(config, certificate_to_json(
                     ppf_to_sppf(instance_as<PPFInstance>(text, "ppf"))));
    return 0;
  }
  if (kind == "sppf-to-oms") {
    auto cert = sppf_to_oms_star(instance_as<SPPFInstance>(text, "sppf"));
    emit(config, certificate_to_json(cert));
    return cert.feasible ? 0 : 5;
  }
  throw ParseError("unknown reduction kind '" + kind + "'");
}

int run_decide(const RunConfig& config, const std::string& kind,
               const std::string& input_file) {
  const std::string text = read_file(input_file);
  Decision decision;
  if (kind == "partition-to-exact") {
    decision = decide_partition_via_cms0(
        instance_as<PartitionInstance>(text, "partition"), config.limits);
  } else if (kind == "exact-to-cms0") {
    decision = decide_exact_partition_via_cms0(
        instance_as<ExactPartitionInstance>(text, "exact_partition"),
        config.limits);
  } else if (kind == "sp-to-ppf") {
    decision = decide_sp_via_oms(instance_as<SubsetProductInstance>(text, "sp"),
                                 config.limits);
  } else if (kind == "ppf-to-sppf") {
    decision =
        decide_ppf_via_oms(instance_as<PPFInstance>(text, "ppf"), config.limits);
  } else if (kind == "sppf-to-oms") {
    decision = decide_sppf_via_oms(instance_as<SPPFInstance>(text, "sppf"),
                                   config.limits);
  } else {
    throw ParseError("kind '" + kind + "' has no decision semantics");
  }
  emit(config, decision_to_json(decision));
  // Short-circuited gadgets report NO with a reason and exit 5.
  return (!decision.yes && !decision.reason.empty()) ? 5 : 0;
}

int run_check(const RunConfig& config, const std::string& suite) {
  checks::CheckConfig check_config;
  check_config.seed = config.seed;
  check_config.cases = config.cases;
  check_config.limits = config.limits;
  std::vector<checks::SuiteResult> results =
      checks::run_suites(suite, check_config);

  nlohmann::json out;
  bool passed = true;
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : results) {
    passed = passed && r.failures == 0;
    suites.push_back({{"name", r.name},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"passed", r.failures == 0},
                      {"details", r.details}});
  }
  out["suites"] = std::move(suites);
  out["passed"] = passed;
  emit(config, out.dump(2));
  return passed ? 0 : 1;
}

std::vector<BigInt> parse_item_list(const std::string& csv) {
  std::vector<BigInt> items;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) items.push_back(bigint_from_string(token));
  }
  if (items.empty()) throw ParseError("--items expects a comma-separated list");
  return items;
}

struct GenOptions {
  std::size_t n = 6;
  std::string rep = "additive";
  std::string edge_weight = "1";
  std::string vertex_weight = "0";
  std::uint64_t max_weight = 9;
  unsigned edge_percent = 60;
  bool zero_vertex_weights = false;
  std::string items;
};

int run_gen(const RunConfig& config, const std::string& kind,
            const GenOptions& options) {
  const Representation rep = options.rep == "multiplicative"
                                 ? Representation::multiplicative
                                 : Representation::additive;
  TensorNetwork net(rep);
  std::mt19937_64 rng(config.seed);
  RandomNetworkOptions random_options;
  random_options.vertices = options.n;
  random_options.representation = rep;
  random_options.edge_percent = options.edge_percent;
  random_options.max_weight = options.max_weight;
  random_options.zero_vertex_weights = options.zero_vertex_weights;

  if (kind == "complete") {
    net = make_complete_network(options.n,
                                rational_from_string(options.edge_weight),
                                rational_from_string(options.vertex_weight),
                                rep);
  } else if (kind == "star") {
    net = make_star_network(parse_item_list(options.items));
  } else if (kind == "random") {
    net = make_random_network(rng, random_options);
  } else if (kind == "tree") {
    net = make_random_tree_network(rng, random_options);
  } else {
    throw ParseError("unknown generator '" + kind + "'");
  }
  emit(config, network_to_json(net));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor-network contraction ordering toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig config;
  try {
    config = config_from_env();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--dp-max", config.limits.dp_max_vertices,
                 "Vertex limit for the subset DP")
      ->capture_default_str();
  app.add_option("--brute-max", config.limits.brute_max_vertices,
                 "Vertex limit for brute force")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--cases", config.cases, "Cases per property suite")
      ->capture_default_str();
  app.add_option("--out", config.out, "Write output to a file instead of stdout");

  std::string network_file, sequence_file, instance_file;
  std::string objective = "pt", method = "dp", kind, suite = "all";

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a sequence's cost");
  eval->add_option("network", network_file)->required();
  eval->add_option("sequence", sequence_file)->required();
  eval->add_option("--objective", objective, "opn, pt or ps")
      ->capture_default_str();

  CLI::App* solve = app.add_subcommand("solve", "Find an optimal sequence");
  solve->add_option("network", network_file)->required();
  solve->add_option("--objective", objective, "opn or pt (ps: brute only)")
      ->capture_default_str();
  solve->add_option("--method", method, "dp or brute")->capture_default_str();

  CLI::App* reduce = app.add_subcommand("reduce", "Emit a reduction certificate");
  reduce->add_option("kind", kind,
                     "cms-to-cms0 | cms-to-oms | partition-to-exact | "
                     "exact-to-cms0 | sp-to-ppf | ppf-to-sppf | sppf-to-oms")
      ->required();
  reduce->add_option("input", instance_file, "network or instance file")
      ->required();

  CLI::App* decide = app.add_subcommand(
      "decide", "Decide a source instance through its reduction pipeline");
  decide->add_option("kind", kind,
                     "partition-to-exact | exact-to-cms0 | sp-to-ppf | "
                     "ppf-to-sppf | sppf-to-oms")
      ->required();
  decide->add_option("input", instance_file)->required();

  CLI::App* check = app.add_subcommand("check", "Run the theorem suites");
  check->add_option("suite", suite,
                    "theorem1..theorem4, theorem8, corollary3 or all")
      ->capture_default_str();

  GenOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "Generate a network fixture");
  gen->add_option("kind", kind, "random | complete | star | tree")->required();
  gen->add_option("--n", gen_options.n)->capture_default_str();
  gen->add_option("--rep", gen_options.rep, "additive or multiplicative")
      ->capture_default_str();
  gen->add_option("--edge-weight", gen_options.edge_weight)
      ->capture_default_str();
  gen->add_option("--vertex-weight", gen_options.vertex_weight)
      ->capture_default_str();
  gen->add_option("--max-weight", gen_options.max_weight)
      ->capture_default_str();
  gen->add_option("--edge-percent", gen_options.edge_percent)
      ->capture_default_str();
  gen->add_flag("--zero-vertex-weights", gen_options.zero_vertex_weights);
  gen->add_option("--items", gen_options.items,
                  "comma-separated items for the star gadget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      return run_eval(config, network_file, sequence_file, objective);
    }
    if (solve->parsed()) {
      return run_solve(config, network_file, objective, method);
    }
    if (reduce->parsed()) return run_reduce(config, kind, instance_file);
    if (decide->parsed()) return run_decide(config, kind, instance_file);
    if (check->parsed()) return run_check(config, suite);
    if (gen->parsed()) return run_gen(config, kind, gen_options);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SequenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
