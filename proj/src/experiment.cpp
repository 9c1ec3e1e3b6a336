#include "nrg/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nrg/branching.hpp"
#include "nrg/capacity.hpp"
#include "nrg/core.hpp"
#include "nrg/engine.hpp"
#include "nrg/graph.hpp"
#include "nrg/oracle.hpp"
#include "nrg/stats.hpp"

namespace nrg {

using json = nlohmann::json;

double ExperimentRecord::mean_distance() const {
  if (distance_samples.empty())
    return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (auto d : distance_samples) sum += d;
  return sum / static_cast<double>(distance_samples.size());
}

double ExperimentRecord::fraction_within(double bound) const {
  if (distance_samples.empty())
    return std::numeric_limits<double>::quiet_NaN();
  std::uint64_t hits = 0;
  for (auto d : distance_samples)
    if (static_cast<double>(d) <= bound) ++hits;
  return static_cast<double>(hits) /
         static_cast<double>(distance_samples.size());
}

namespace {

const std::vector<std::string> kExperiments = {
    "scaling", "robustness", "core_removal", "coupling", "tiers",
    "concentration"};

std::uint64_t parse_u64(const std::string& s) {
  const double v = std::stod(s);
  if (v < 0 || v != std::floor(v))
    throw std::invalid_argument("expected a nonnegative integer: " + s);
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void validate_config(const ExperimentConfig& cfg) {
  if (std::find(kExperiments.begin(), kExperiments.end(), cfg.experiment) ==
      kExperiments.end())
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);
  if (cfg.replications < 1)
    throw std::invalid_argument("replications must be >= 1");
  if (cfg.n_values.empty())
    throw std::invalid_argument("n_values must be nonempty");
  for (auto n : cfg.n_values)
    if (n < 3) throw std::invalid_argument("all n must be >= 3");
  for (double g : cfg.gamma_values)
    if (!(g > 0.0 && g < 0.5))
      throw std::invalid_argument("all gamma values must lie in (0, 1/2)");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "experiment") {
      cfg.experiment = value;
    } else if (key == "n_values") {
      cfg.n_values.clear();
      for (const auto& tok : split(value, ','))
        cfg.n_values.push_back(parse_u64(trim(tok)));
    } else if (key == "tau") {
      cfg.tau = std::stod(value);
    } else if (key == "gamma_values") {
      cfg.gamma_values.clear();
      for (const auto& tok : split(value, ','))
        cfg.gamma_values.push_back(std::stod(trim(tok)));
    } else if (key == "replications") {
      cfg.replications = static_cast<std::uint32_t>(parse_u64(value));
    } else if (key == "pairs_per_replication") {
      cfg.pairs_per_replication = static_cast<std::uint32_t>(parse_u64(value));
    } else if (key == "master_seed") {
      cfg.master_seed = parse_u64(value);
    } else if (key == "ell_override") {
      if (value != "default") cfg.ell_override = std::stod(value);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else if (key == "retention_threshold") {
      cfg.retention_threshold = std::stod(value);
    } else if (key == "core_removal_retention") {
      cfg.core_removal_retention = std::stod(value);
    } else if (key == "distance_slack") {
      cfg.distance_slack = std::stod(value);
    } else if (key == "distance_quantile") {
      cfg.distance_quantile = std::stod(value);
    } else if (key == "scaling_quantile") {
      cfg.scaling_quantile = std::stod(value);
    } else if (key == "diameter_tolerance") {
      cfg.diameter_tolerance = static_cast<std::uint32_t>(parse_u64(value));
    } else if (key == "tier_diameter_rate") {
      cfg.tier_diameter_rate = std::stod(value);
    } else if (key == "tier_connected_rate") {
      cfg.tier_connected_rate = std::stod(value);
    } else if (key == "coupling_tv_threshold") {
      cfg.coupling_tv_threshold = std::stod(value);
    } else if (key == "band_hit_rate") {
      cfg.band_hit_rate = std::stod(value);
    } else if (key == "lemma33_b") {
      cfg.lemma33_b = std::stod(value);
    } else if (key == "lemma33_median_max") {
      cfg.lemma33_median_max = std::stod(value);
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::uint64_t replication_seed(const ExperimentConfig& cfg, std::uint64_t n,
                               std::uint32_t gamma_index, std::uint32_t rep) {
  std::uint64_t family = 0;
  for (char c : cfg.experiment) family = family * 31 + static_cast<unsigned char>(c);
  return derive_seed(cfg.master_seed, {family, n, gamma_index, rep});
}

namespace {

struct GeneratedGraph {
  CapacitySequence caps;
  MultiGraph graph;
  ComponentLabeling labeling;
};

GeneratedGraph make_graph(std::uint64_t n, double tau, std::uint64_t seed) {
  GeneratedGraph out;
  out.caps = sample_capacities(n, tau, seed);
  out.graph = generate_fast(out.caps, seed);
  out.labeling = connected_components(out.graph);
  return out;
}

void run_scaling(const ExperimentConfig& cfg, RunResult& result) {
  for (std::uint64_t n : cfg.n_values) {
    const auto params = core_parameters(n, cfg.tau, cfg.ell_override);
    for (std::uint32_t rep = 0; rep < cfg.replications; ++rep) {
      const std::uint64_t seed = replication_seed(cfg, n, 0, rep);
      const auto gg = make_graph(n, cfg.tau, seed);
      ExperimentRecord rec;
      rec.experiment = cfg.experiment;
      rec.n = n;
      rec.tau = cfg.tau;
      rec.seed = seed;
      rec.giant_size_absolute = gg.labeling.giant_size();
      rec.giant_fraction = static_cast<double>(rec.giant_size_absolute) /
                           static_cast<double>(n);
      rec.predicted_bound = 2.0 * params.k_star;
      rec.distance_samples = sample_giant_distances(
          gg.graph, gg.labeling, cfg.pairs_per_replication, seed);
      result.checks.push_back(
          {"scaling_within_2kstar n=" + std::to_string(n) + " rep=" +
               std::to_string(rep),
           rec.fraction_within(rec.predicted_bound), cfg.scaling_quantile,
           rec.fraction_within(rec.predicted_bound) >= cfg.scaling_quantile});
      result.records.push_back(std::move(rec));
    }
  }
}

void run_robustness(const ExperimentConfig& cfg, RunResult& result) {
  if (cfg.gamma_values.empty())
    throw std::invalid_argument("robustness needs gamma_values");
  for (std::uint64_t n : cfg.n_values) {
    for (double g : cfg.gamma_values)
      if (!(g > epsilon(n)))
        throw std::invalid_argument("gamma must exceed epsilon(n)");
    for (std::uint32_t rep = 0; rep < cfg.replications; ++rep) {
      const std::uint64_t gen_seed = replication_seed(cfg, n, 0, rep);
      const auto gg = make_graph(n, cfg.tau, gen_seed);
      // one graph per (n, seed) shared across the gamma sweep
      for (std::uint32_t gi = 0; gi < cfg.gamma_values.size(); ++gi) {
        const double gamma = cfg.gamma_values[gi];
        const std::uint64_t seed = replication_seed(cfg, n, gi + 1, rep);
        auto sub = delete_above(gg.graph, gg.caps, gamma);
        const auto sub_labeling = connected_components(sub.graph);
        ExperimentRecord rec;
        rec.experiment = cfg.experiment;
        rec.n = n;
        rec.tau = cfg.tau;
        rec.gamma = gamma;
        rec.seed = seed;
        rec.giant_size_absolute = sub_labeling.giant_size();
        rec.giant_fraction =
            static_cast<double>(rec.giant_size_absolute) /
            static_cast<double>(sub.graph.vertex_count());
        rec.retention = static_cast<double>(sub_labeling.giant_size()) /
                        static_cast<double>(gg.labeling.giant_size());
        rec.predicted_bound = robust_distance_bound(n, gamma, cfg.tau);
        rec.distance_samples = sample_giant_distances(
            sub.graph, sub_labeling, cfg.pairs_per_replication, seed);
        const double frac =
            rec.fraction_within(cfg.distance_slack * rec.predicted_bound);
        char label[128];
        std::snprintf(label, sizeof(label), "n=%llu gamma=%g rep=%u",
                      static_cast<unsigned long long>(n), gamma, rep);
        result.checks.push_back({std::string("robustness_retention ") + label,
                                 rec.retention, cfg.retention_threshold,
                                 rec.retention >= cfg.retention_threshold});
        result.checks.push_back({std::string("robustness_distances ") + label,
                                 frac, cfg.distance_quantile,
                                 frac >= cfg.distance_quantile});
        result.records.push_back(std::move(rec));
      }
    }
  }
}

void run_core_removal(const ExperimentConfig& cfg, RunResult& result) {
  for (std::uint64_t n : cfg.n_values) {
    const auto params = core_parameters(n, cfg.tau, cfg.ell_override);
    const double scale = core_removed_scale(n, cfg.tau);
    for (std::uint32_t rep = 0; rep < cfg.replications; ++rep) {
      const std::uint64_t seed = replication_seed(cfg, n, 0, rep);
      const auto gg = make_graph(n, cfg.tau, seed);
      const auto pre = sample_giant_distances(gg.graph, gg.labeling,
                                              cfg.pairs_per_replication, seed);
      double pre_mean = 0.0;
      for (auto d : pre) pre_mean += d;
      pre_mean /= static_cast<double>(pre.size());

      auto sub = delete_above(gg.graph, gg.caps, params.beta_k_star());
      const auto sub_labeling = connected_components(sub.graph);
      ExperimentRecord rec;
      rec.experiment = cfg.experiment;
      rec.n = n;
      rec.tau = cfg.tau;
      rec.gamma = params.beta_k_star();
      rec.seed = seed;
      rec.giant_size_absolute = sub_labeling.giant_size();
      rec.giant_fraction = static_cast<double>(rec.giant_size_absolute) /
                           static_cast<double>(sub.graph.vertex_count());
      rec.retention = static_cast<double>(sub_labeling.giant_size()) /
                      static_cast<double>(gg.labeling.giant_size());
      rec.pre_mean_distance = pre_mean;
      rec.predicted_bound = scale;
      rec.distance_samples =
          sample_giant_distances(sub.graph, sub_labeling,
                                 cfg.pairs_per_replication,
                                 replication_seed(cfg, n, 1, rep));
      const double post_mean = rec.mean_distance();
      char label[96];
      std::snprintf(label, sizeof(label), "n=%llu rep=%u",
                    static_cast<unsigned long long>(n), rep);
      result.checks.push_back({std::string("core_removal_retention ") + label,
                               rec.retention, cfg.core_removal_retention,
                               rec.retention >= cfg.core_removal_retention});
      result.checks.push_back(
          {std::string("core_removal_distance_growth ") + label, post_mean,
           2.0 * pre_mean, post_mean >= 2.0 * pre_mean});
      result.checks.push_back(
          {std::string("core_removal_distance_scale ") + label, post_mean,
           2.0 * scale, post_mean <= 2.0 * scale});
      result.records.push_back(std::move(rec));
    }
  }
}

void run_coupling(const ExperimentConfig& cfg, RunResult& result) {
  const std::uint64_t n = cfg.n_values.front();
  const auto caps =
      sample_capacities(n, cfg.tau, derive_seed(cfg.master_seed, {n}));
  const SelectionDistribution sel(caps);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> graph_side, bp_side;
  graph_side.reserve(cfg.replications);
  bp_side.reserve(cfg.replications);
  for (std::uint32_t rep = 0; rep < cfg.replications; ++rep) {
    const std::uint64_t gseed = replication_seed(cfg, n, 0, rep);
    const auto graph = generate_fast(caps, gseed);
    Rng root_rng(derive_seed(gseed, {stream_tag::pairs}));
    const auto shells = neighborhood_shells(
        graph, static_cast<std::uint32_t>(root_rng.below(n)), 2);
    graph_side.emplace_back(
        shells.shells.size() > 1 ? shells.shells[1].size() : 0,
        shells.shells.size() > 2 ? shells.shells[2].size() : 0);

    const std::uint64_t bseed = replication_seed(cfg, n, 1, rep);
    const auto bp = simulate_marked_bp(caps, sel, 2, bseed);
    const auto reduced = prune(bp);
    bp_side.emplace_back(
        reduced.mark_sets.size() > 1 ? reduced.mark_sets[1].size() : 0,
        reduced.mark_sets.size() > 2 ? reduced.mark_sets[2].size() : 0);
  }
  const auto edges = geometric_bin_edges(200);
  const double tv = total_variation(joint_histogram(graph_side, edges),
                                    joint_histogram(bp_side, edges));
  ExperimentRecord rec;
  rec.experiment = cfg.experiment;
  rec.n = n;
  rec.tau = cfg.tau;
  rec.seed = cfg.master_seed;
  rec.tv_estimate = tv;
  result.checks.push_back({"coupling_tv", tv, cfg.coupling_tv_threshold,
                           tv <= cfg.coupling_tv_threshold});
  result.records.push_back(std::move(rec));
}

void run_tiers(const ExperimentConfig& cfg, RunResult& result) {
  if (cfg.gamma_values.empty())
    throw std::invalid_argument("tiers needs gamma_values");
  for (std::uint64_t n : cfg.n_values) {
    const double eps =
        std::isnan(cfg.ell_override)
            ? epsilon(n)
            : cfg.ell_override / std::log(static_cast<double>(n));
    for (std::uint32_t gi = 0; gi < cfg.gamma_values.size(); ++gi) {
      const double gamma = cfg.gamma_values[gi];
      const std::uint32_t width = tier_width(gamma, cfg.tau);
      std::uint32_t diam_hits = 0, connected_hits = 0;
      const std::uint32_t first_rec =
          static_cast<std::uint32_t>(result.records.size());
      for (std::uint32_t rep = 0; rep < cfg.replications; ++rep) {
        const std::uint64_t seed = replication_seed(cfg, n, gi, rep);
        const auto gg = make_graph(n, cfg.tau, seed);
        const auto members = tier(gg.caps, gamma - eps, gamma);
        ExperimentRecord rec;
        rec.experiment = cfg.experiment;
        rec.n = n;
        rec.tau = cfg.tau;
        rec.gamma = gamma;
        rec.seed = seed;
        rec.predicted_bound = width;
        if (members.size() >= 2) {
          auto sub = induced_subgraph(gg.graph, members);
          const auto sub_labeling = connected_components(sub.graph);
          rec.giant_size_absolute = sub_labeling.giant_size();
          rec.giant_fraction =
              static_cast<double>(rec.giant_size_absolute) /
              static_cast<double>(members.size());
          rec.diameter = static_cast<std::int32_t>(
              exact_component_diameter(sub.graph));
          rec.connected = sub_labeling.sizes.size() == 1 ? 1 : 0;
          const std::int32_t lo =
              static_cast<std::int32_t>(width) -
              static_cast<std::int32_t>(cfg.diameter_tolerance);
          const std::int32_t hi =
              static_cast<std::int32_t>(width + cfg.diameter_tolerance);
          if (rec.diameter >= lo && rec.diameter <= hi) ++diam_hits;
          if (rec.connected == 1) ++connected_hits;
        }
        result.records.push_back(std::move(rec));
      }
      (void)first_rec;
      const double reps = static_cast<double>(cfg.replications);
      char label[96];
      std::snprintf(label, sizeof(label), "n=%llu gamma=%g",
                    static_cast<unsigned long long>(n), gamma);
      result.checks.push_back({std::string("tier_diameter_rate ") + label,
                               diam_hits / reps, cfg.tier_diameter_rate,
                               diam_hits / reps >= cfg.tier_diameter_rate});
      result.checks.push_back({std::string("tier_connected_rate ") + label,
                               connected_hits / reps, cfg.tier_connected_rate,
                               connected_hits / reps >= cfg.tier_connected_rate});
    }
  }
}

void run_concentration(const ExperimentConfig& cfg, RunResult& result) {
  if (cfg.gamma_values.empty())
    throw std::invalid_argument("concentration needs gamma_values (alpha)");
  const double alpha = cfg.gamma_values.front();
  for (std::uint64_t n : cfg.n_values) {
    std::uint32_t band_hits = 0;
    std::vector<double> l33;
    for (std::uint32_t rep = 0; rep < cfg.replications; ++rep) {
      const std::uint64_t seed = replication_seed(cfg, n, 0, rep);
      const auto caps = sample_capacities(n, cfg.tau, seed);
      const auto report = concentration_check(caps, alpha);
      ExperimentRecord rec;
      rec.experiment = cfg.experiment;
      rec.n = n;
      rec.tau = cfg.tau;
      rec.gamma = alpha;
      rec.seed = seed;
      rec.ratio_upper = report.upper_ratio;
      rec.ratio_lemma33 = low_tier_dominance_ratio(caps, cfg.lemma33_b);
      if (report.upper_in_band) ++band_hits;
      l33.push_back(rec.ratio_lemma33);
      result.records.push_back(std::move(rec));
    }
    std::sort(l33.begin(), l33.end());
    const double median = l33[l33.size() / 2];
    const double rate =
        static_cast<double>(band_hits) / static_cast<double>(cfg.replications);
    char label[64];
    std::snprintf(label, sizeof(label), "n=%llu",
                  static_cast<unsigned long long>(n));
    result.checks.push_back({std::string("concentration_band_rate ") + label,
                             rate, cfg.band_hit_rate,
                             rate >= cfg.band_hit_rate});
    result.checks.push_back({std::string("lemma33_median ") + label, median,
                             cfg.lemma33_median_max,
                             median <= cfg.lemma33_median_max});
  }
}

std::string fmt_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  if (cfg.experiment == "scaling")
    run_scaling(cfg, result);
  else if (cfg.experiment == "robustness")
    run_robustness(cfg, result);
  else if (cfg.experiment == "core_removal")
    run_core_removal(cfg, result);
  else if (cfg.experiment == "coupling")
    run_coupling(cfg, result);
  else if (cfg.experiment == "tiers")
    run_tiers(cfg, result);
  else
    run_concentration(cfg, result);
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

void write_csv(const std::vector<ExperimentRecord>& records,
               const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "schema,experiment,n,tau,gamma,seed,giant_size,giant_fraction,"
         "predicted_bound,retention,pre_mean_distance,mean_distance,"
         "unreachable_pairs,tv_estimate,diameter,connected,ratio_upper,"
         "ratio_lemma33,distances\n";
  for (const auto& r : records) {
    out << kCsvSchemaVersion << ',' << r.experiment << ',' << r.n << ','
        << fmt_double(r.tau) << ',' << fmt_double(r.gamma) << ',' << r.seed
        << ',' << r.giant_size_absolute << ',' << fmt_double(r.giant_fraction)
        << ',' << fmt_double(r.predicted_bound) << ','
        << fmt_double(r.retention) << ',' << fmt_double(r.pre_mean_distance)
        << ',' << fmt_double(r.mean_distance()) << ',' << r.unreachable_pairs
        << ',' << fmt_double(r.tv_estimate) << ','
        << (r.diameter < 0 ? "" : std::to_string(r.diameter)) << ','
        << (r.connected < 0 ? "" : std::to_string(r.connected)) << ','
        << fmt_double(r.ratio_upper) << ',' << fmt_double(r.ratio_lemma33)
        << ',';
    for (std::size_t i = 0; i < r.distance_samples.size(); ++i) {
      if (i) out << ';';
      out << r.distance_samples[i];
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_summary(const ExperimentConfig& cfg, const RunResult& result,
                   const std::string& path) {
  json j;
  j["schema_version"] = kCsvSchemaVersion;
  j["config"] = {
      {"experiment", cfg.experiment},
      {"n_values", cfg.n_values},
      {"tau", cfg.tau},
      {"gamma_values", cfg.gamma_values},
      {"replications", cfg.replications},
      {"pairs_per_replication", cfg.pairs_per_replication},
      {"master_seed", cfg.master_seed},
      {"output_path", cfg.output_path},
  };
  if (!std::isnan(cfg.ell_override)) j["config"]["ell_override"] = cfg.ell_override;
  std::uint64_t distance_count = 0;
  std::uint64_t giant_total = 0;
  for (const auto& r : result.records) {
    distance_count += r.distance_samples.size();
    giant_total += r.giant_size_absolute;
  }
  j["totals"] = {
      {"records", result.records.size()},
      {"distance_samples", distance_count},
      {"giant_size_sum", giant_total},
  };
  j["checks"] = json::array();
  for (const auto& c : result.checks)
    j["checks"].push_back({{"name", c.name},
                           {"value", c.value},
                           {"threshold", c.threshold},
                           {"pass", c.pass}});
  j["all_pass"] = result.all_pass();
  j["wall_time_s"] = result.wall_time_s;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << '\n';
}

}  // namespace nrg
