#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chlab/counterexample.hpp"

namespace chlab {

/// Everything the CLI suites need; mirrors the command-line flags.
struct SuiteConfig {
  double s = 2.0;
  double p = 2.0;
  double r = 2.0;
  double alpha = 0.9;
  int n_min = 3;
  int n_max = 0;                 // 0 = derive from the grid
  std::string model = "ch";      // ch | bfamily:<b> | novikov
  std::int64_t grid_L = 12;
  std::int64_t grid_N = 0;       // 0 = per-suite default
  std::string out_dir;           // empty = no files written
  std::string format = "csv";    // csv | json
  std::uint64_t seed = 20230717;
  bool plot = false;

  // scaling suite
  std::string scaling_case = "high";  // high (Case 1) | low (Case 2)
  double t_lo = 1e-4;
  double t_hi = 1e-2;
  int points_per_decade = 8;

  // solver
  double dt_safety = 0.9;

  ModelKind model_kind() const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct RunReport {
  std::string experiment;
  nlohmann::json config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json fits;
  std::vector<CheckResult> checks;
  bool pass = false;

  void add_check(const std::string& name, bool ok, double value,
                 double threshold);
  void finalize();  // sets pass from checks
};

RunReport run_cutoff_suite(const SuiteConfig& cfg);
RunReport run_lemma31(const SuiteConfig& cfg);
RunReport run_error_scaling(const SuiteConfig& cfg);
RunReport run_holder_sweep(const SuiteConfig& cfg);
RunReport run_invariants_suite(const SuiteConfig& cfg);

struct PowerFit {
  double slope = 0.0;
  double intercept = 0.0;      // fit of log y = slope*log x + intercept
  double max_residual = 0.0;   // max |log-residual|
};

/// Least squares in log-log; needs >= 3 strictly positive points.
PowerFit fit_power_law(const std::vector<std::pair<double, double>>& points);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LinearFit fit_linear(const std::vector<std::pair<double, double>>& points);

/// Seeded band-limited random field.  Coefficients are drawn per frequency
/// xi = k_xi/L for 0 <= k_xi <= max_xi*L in a fixed order, so the same seed
/// produces the same continuum function on any grid that resolves max_xi.
Field random_band_limited(const Grid& grid, double max_xi, std::mt19937_64& rng);

std::string format_g17(double v);

void write_report_csv(const RunReport& rep, const std::filesystem::path& file);
void write_report_json(const RunReport& rep, const std::filesystem::path& file);
void write_plot_script(const RunReport& rep, const std::filesystem::path& file);

/// Write report files under cfg.out_dir (if set) honoring cfg.format and
/// cfg.plot, and print one line per check.
void emit_report(const RunReport& rep, const SuiteConfig& cfg);

}  // namespace chlab
