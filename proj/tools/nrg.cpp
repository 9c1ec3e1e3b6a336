#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nrg/branching.hpp"
#include "nrg/capacity.hpp"
#include "nrg/core.hpp"
#include "nrg/engine.hpp"
#include "nrg/experiment.hpp"
#include "nrg/graph.hpp"
#include "nrg/oracle.hpp"
#include "nrg/stats.hpp"

using json = nlohmann::json;

namespace {

json distance_stats(const std::vector<std::int32_t>& d) {
  json j;
  j["count"] = d.size();
  if (d.empty()) return j;
  double sum = 0.0;
  std::int32_t mx = 0;
  for (auto v : d) {
    sum += v;
    mx = std::max(mx, v);
  }
  j["mean"] = sum / static_cast<double>(d.size());
  j["max"] = mx;
  return j;
}

int cmd_generate(std::uint64_t n, double tau, std::uint64_t seed,
                 const std::string& out, const std::string& caps_out,
                 bool exact, std::uint32_t exact_cap) {
  const auto caps = nrg::sample_capacities(n, tau, seed);
  nrg::GeneratorOptions opt;
  opt.exact_cap = exact_cap;
  const auto graph = exact ? nrg::generate_exact(caps, seed, opt)
                           : nrg::generate_fast(caps, seed, opt);
  nrg::save_edge_list(graph, out, tau, seed);
  if (!caps_out.empty()) nrg::save_capacities(caps, caps_out);
  json j;
  j["n"] = n;
  j["tau"] = tau;
  j["seed"] = seed;
  j["edge_total"] = graph.edge_total();
  j["output"] = out;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_analyze(const std::string& path, std::uint32_t pairs,
                std::uint64_t pair_seed) {
  const auto loaded = nrg::load_edge_list(path);
  const auto labeling = nrg::connected_components(loaded.graph);
  json j;
  j["n"] = loaded.graph.vertex_count();
  j["edge_total"] = loaded.graph.edge_total();
  j["components"] = labeling.sizes.size();
  j["giant_size"] = labeling.giant_size();
  j["giant_fraction"] = static_cast<double>(labeling.giant_size()) /
                        static_cast<double>(loaded.graph.vertex_count());
  if (pairs > 0 && labeling.giant_size() >= 2)
    j["distances"] = distance_stats(
        nrg::sample_giant_distances(loaded.graph, labeling, pairs, pair_seed));
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_attack(const std::string& graph_path, const std::string& caps_path,
               double gamma, const std::string& out, std::uint32_t pairs,
               std::uint64_t pair_seed) {
  const auto loaded = nrg::load_edge_list(graph_path);
  const auto caps = nrg::load_capacities(caps_path);
  const auto before = nrg::connected_components(loaded.graph);
  auto sub = nrg::delete_above(loaded.graph, caps, gamma);
  const auto after = nrg::connected_components(sub.graph);
  json j;
  j["gamma"] = gamma;
  j["surviving_vertices"] = sub.graph.vertex_count();
  j["giant_before"] = before.giant_size();
  j["giant_after"] = after.giant_size();
  j["retention"] = static_cast<double>(after.giant_size()) /
                   static_cast<double>(before.giant_size());
  if (pairs > 0 && after.giant_size() >= 2)
    j["distances"] = distance_stats(
        nrg::sample_giant_distances(sub.graph, after, pairs, pair_seed));
  if (!out.empty()) {
    nrg::save_edge_list(sub.graph, out, caps.tau, loaded.seed);
    j["output"] = out;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_couple(std::uint64_t n, double tau, std::uint32_t reps,
               std::uint64_t seed) {
  nrg::ExperimentConfig cfg;
  cfg.experiment = "coupling";
  cfg.n_values = {n};
  cfg.tau = tau;
  cfg.replications = reps;
  cfg.master_seed = seed;
  const auto result = nrg::run_experiment(cfg);
  json j;
  j["n"] = n;
  j["tau"] = tau;
  j["replications"] = reps;
  j["tv_estimate"] = result.records.front().tv_estimate;
  for (const auto& c : result.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"value", c.value}, {"pass", c.pass}});
  std::cout << j.dump(2) << '\n';
  return result.all_pass() ? 0 : 1;
}

int cmd_predict(std::uint64_t n, double tau, double gamma, double ell_override) {
  const auto params = nrg::core_parameters(n, tau, ell_override);
  json j;
  j["n"] = n;
  j["tau"] = tau;
  j["ell"] = params.ell;
  j["epsilon"] = params.epsilon;
  j["beta"] = params.beta;
  j["k_star"] = params.k_star;
  j["kappa"] = params.kappa;
  j["theta"] = params.theta;
  j["two_k_star"] = 2 * params.k_star;
  j["core_removed_scale"] = nrg::core_removed_scale(n, tau);
  const auto prediction = nrg::giant_fraction(tau, 1e-10);
  j["extinction_probability"] = prediction.extinction_prob;
  j["giant_fraction"] = prediction.giant_fraction;
  if (!std::isnan(gamma)) {
    j["gamma"] = gamma;
    j["w"] = nrg::tier_width(gamma, tau);
    const auto depth = nrg::backup_depth(n, gamma, tau);
    j["k_bar"] = depth.k_bar;
    j["gamma_sequence"] = depth.gamma;
    j["robust_distance_bound"] = nrg::robust_distance_bound(n, gamma, tau);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_experiment(const std::string& config_path) {
  const auto cfg = nrg::parse_config_file(config_path);
  const auto result = nrg::run_experiment(cfg);
  nrg::write_csv(result.records, cfg.output_path + ".csv");
  nrg::write_summary(cfg, result, cfg.output_path + ".json");
  for (const auto& c : result.checks)
    std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "  value="
              << c.value << " threshold=" << c.threshold << '\n';
  std::cout << (result.all_pass() ? "all checks passed" : "checks FAILED")
            << '\n';
  return result.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conditionally Poissonian power-law random graph simulator"};
  app.require_subcommand(1);

  std::uint64_t n = 1000;
  double tau = 2.5;
  std::uint64_t seed = 1;
  std::uint32_t pairs = 0;
  std::uint64_t pair_seed = 1;
  std::string out, caps_out, graph_path, caps_path, config_path;
  bool exact = false;
  std::uint32_t exact_cap = 5000;
  std::uint32_t reps = 1000;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double ell_override = std::numeric_limits<double>::quiet_NaN();

  auto* gen = app.add_subcommand("generate", "generate a graph to an edge-list file");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--tau", tau, "tail parameter in (2,3)");
  gen->add_option("--seed", seed, "master seed");
  gen->add_option("--out", out, "edge-list output path")->required();
  gen->add_option("--caps-out", caps_out, "binary capacity output path");
  gen->add_flag("--exact", exact, "use the O(N^2) pairwise generator");
  gen->add_option("--exact-cap", exact_cap, "vertex cap for --exact");

  auto* ana = app.add_subcommand("analyze", "components/distances of a stored graph");
  ana->add_option("--graph", graph_path, "edge-list file")->required();
  ana->add_option("--pairs", pairs, "giant distance pairs to sample");
  ana->add_option("--pair-seed", pair_seed, "seed for pair sampling");

  auto* att = app.add_subcommand("attack", "gamma-deletion on a stored graph");
  att->add_option("--graph", graph_path, "edge-list file")->required();
  att->add_option("--caps", caps_path, "binary capacity file")->required();
  att->add_option("--gamma", gamma, "capacity exponent cutoff")->required();
  att->add_option("--out", out, "surviving graph output path");
  att->add_option("--pairs", pairs, "giant distance pairs to sample");
  att->add_option("--pair-seed", pair_seed, "seed for pair sampling");

  auto* cpl = app.add_subcommand("couple", "shell-vs-branching coupling test");
  cpl->add_option("--n", n, "vertex count");
  cpl->add_option("--tau", tau, "tail parameter");
  cpl->add_option("--reps", reps, "replications per side");
  cpl->add_option("--seed", seed, "master seed");

  auto* prd = app.add_subcommand("predict", "structural predictors as JSON");
  prd->add_option("--n", n, "vertex count")->required();
  prd->add_option("--tau", tau, "tail parameter");
  prd->add_option("--gamma", gamma, "deletion exponent for bounds");
  prd->add_option("--ell", ell_override, "override the scale function value");

  auto* exp = app.add_subcommand("experiment", "run an experiment config file");
  exp->add_option("config", config_path, "key=value config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_generate(n, tau, seed, out, caps_out, exact, exact_cap);
    if (ana->parsed()) return cmd_analyze(graph_path, pairs, pair_seed);
    if (att->parsed())
      return cmd_attack(graph_path, caps_path, gamma, out, pairs, pair_seed);
    if (cpl->parsed()) return cmd_couple(n, tau, reps, seed);
    if (prd->parsed()) return cmd_predict(n, tau, gamma, ell_override);
    if (exp->parsed()) return cmd_experiment(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
