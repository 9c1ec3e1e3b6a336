#ifndef NRG_EXPERIMENT_HPP
#define NRG_EXPERIMENT_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace nrg {

inline constexpr int kCsvSchemaVersion = 1;

/// One experiment run: family, sweep values, replication counts, seeding,
/// acceptance thresholds. Parsed from a key=value config file.
struct ExperimentConfig {
  std::string experiment;  // scaling|robustness|core_removal|coupling|tiers|concentration
  std::vector<std::uint64_t> n_values;
  double tau = 2.5;
  std::vector<double> gamma_values;
  std::uint32_t replications = 1;
  std::uint32_t pairs_per_replication = 100;
  std::uint64_t master_seed = 1;
  double ell_override = std::numeric_limits<double>::quiet_NaN();
  std::string output_path = "run";

  // acceptance-tagged thresholds (defaults per the documented pilot runs)
  double retention_threshold = 0.95;
  double core_removal_retention = 0.90;
  double distance_slack = 1.5;
  double distance_quantile = 0.95;
  double scaling_quantile = 0.90;
  std::uint32_t diameter_tolerance = 1;
  double tier_diameter_rate = 0.8;
  double tier_connected_rate = 0.9;
  double coupling_tv_threshold = 0.05;
  double band_hit_rate = 0.95;
  double lemma33_b = 3.0;
  double lemma33_median_max = 0.5;
};

ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

/// One replication's measurements. Optional fields stay NaN (or the listed
/// sentinel) when the family does not produce them.
struct ExperimentRecord {
  std::string experiment;
  std::uint64_t n = 0;
  double tau = 0.0;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 0;  // replication substream seed
  std::uint64_t giant_size_absolute = 0;
  double giant_fraction = std::numeric_limits<double>::quiet_NaN();
  double predicted_bound = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::int32_t> distance_samples;
  std::uint64_t unreachable_pairs = 0;

  double retention = std::numeric_limits<double>::quiet_NaN();
  double pre_mean_distance = std::numeric_limits<double>::quiet_NaN();
  double tv_estimate = std::numeric_limits<double>::quiet_NaN();
  std::int32_t diameter = -1;
  std::int32_t connected = -1;  // 0/1, -1 = not measured
  double ratio_upper = std::numeric_limits<double>::quiet_NaN();
  double ratio_lemma33 = std::numeric_limits<double>::quiet_NaN();

  double mean_distance() const;
  double fraction_within(double bound) const;
};

struct AcceptanceCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct RunResult {
  std::vector<ExperimentRecord> records;
  std::vector<AcceptanceCheck> checks;
  double wall_time_s = 0.0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Replication substream rule: derive_seed(master, {family-hash, n,
// gamma-index, replication-index}).
std::uint64_t replication_seed(const ExperimentConfig& cfg, std::uint64_t n,
                               std::uint32_t gamma_index, std::uint32_t rep);

RunResult run_experiment(const ExperimentConfig& cfg);

// CSV: one record per row, stable documented header. Distance samples are
// semicolon-joined in the final column. Output is a pure function of the
// config.
void write_csv(const std::vector<ExperimentRecord>& records,
               const std::string& path);

// JSON run summary: config echo, schema version, totals, checks.
void write_summary(const ExperimentConfig& cfg, const RunResult& result,
                   const std::string& path);

}  // namespace nrg

#endif
