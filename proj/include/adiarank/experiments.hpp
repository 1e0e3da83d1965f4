#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "adiarank/adiabatic.hpp"
#include "adiarank/graph.hpp"

namespace adiarank {

// Graph families used in the scaling experiments. "mixed" unions an in-law
// preferential-attachment graph with a reversed out-law one; "undirected"
// unions a graph with its own reverse.
enum class EnsembleFamily {
  mixed,
  preferential_attachment,  // in-degree power law only
  reversed_pa,              // out-degree power law only
  undirected_pa,
  copying,
  complete,
};

EnsembleFamily parse_family(const std::string& name);
std::string family_name(EnsembleFamily f);

struct EnsembleSpec {
  EnsembleFamily family = EnsembleFamily::mixed;
  std::vector<int> sizes;
  int trials = 100;
  std::uint64_t master_seed = 0;
  double alpha = 0.85;
  int m = 2;
  double p_copy = 0.5;
  int d0 = 2;
  double mix_ratio = 3.0;
  int scan_grid = 64;
  double scan_refine_tol = 1e-6;
  std::size_t workers = 0;  // 0 -> ADIARANK_THREADS / auto

  void validate() const;
};

// Per-trial graph for an ensemble; seed is mix_seed(master, n, trial).
DirectedGraph make_ensemble_graph(const EnsembleSpec& spec, int n,
                                  std::uint64_t seed);

struct ScalingRow {
  int n = 0;
  double delta_ave = 0.0;      // [delta]_ave
  double inv_delta_ave = 0.0;  // [1/delta]_ave
  double inv_of_ave = 0.0;     // 1/[delta]_ave
  double lambda_ave = 0.0;     // [lambda]_ave
  double se_delta = 0.0;
  double se_inv_delta = 0.0;
  double se_lambda = 0.0;
  int trials = 0;
  int excluded = 0;
};

struct ScalingTable {
  std::vector<ScalingRow> rows;
};

enum class TableColumn {
  delta_ave,
  inv_delta_ave,
  inv_of_ave,
  lambda_ave,
};

TableColumn parse_column(const std::string& name);
std::string column_name(TableColumn c);
double column_value(const ScalingRow& row, TableColumn c);

enum class FitModel {
  semilog,        // y = a + b log10 n
  loglog,         // ln y = a + b ln n  (power law n^b)
  polyloglog,     // y = a + b ln ln n
  polylog_power,  // ln y = a + c ln(log10 n), i.e. y ~ (log10 n)^c
};

FitModel parse_fit_model(const std::string& name);
std::string fit_model_name(FitModel m);

struct ScalingFit {
  FitModel model = FitModel::semilog;
  double intercept = 0.0;
  double slope = 0.0;  // b, or the exponent c for polylog_power
  double r_squared = 0.0;

  double predict(double n) const;  // back-transformed to the y column
};

ScalingTable run_gap_ensemble(const EnsembleSpec& spec);

struct ErrorVsTRow {
  double total_time = 0.0;
  double eps_ave = 0.0;
  double se_eps = 0.0;
  int trials = 0;
};

struct ErrorVsTTable {
  std::vector<ErrorVsTRow> rows;
};

ErrorVsTTable run_error_vs_T(const EnsembleSpec& spec, int n,
                             const std::vector<double>& t_grid,
                             int steps_per_unit = 10);

std::vector<double> log_spaced(double lo, double hi, int points);

struct RuntimeVerificationRow {
  int n = 0;
  int b = 0;
  double total_time = 0.0;
  double eps_target = 0.0;
  double eps_max = 0.0;  // worst final error over trials
  int passed = 0;
  int trials = 0;
};

struct RuntimeVerificationTable {
  std::vector<RuntimeVerificationRow> rows;
  bool all_passed() const;
};

RuntimeVerificationTable run_runtime_verification(
    const EnsembleSpec& spec, int b, double eps_target,
    const std::vector<int>& sizes, int steps_per_unit = 10);

ScalingFit fit_scaling(const ScalingTable& table, TableColumn column,
                       FitModel model);
ScalingFit fit_xy(const std::vector<double>& x, const std::vector<double>& y,
                  FitModel model);

// All of semilog / loglog / polylog_power on one column, best R^2 first.
std::vector<ScalingFit> compare_fit_families(const ScalingTable& table,
                                             TableColumn column);

// Flat "key = value" ensemble config files.
struct EnsembleConfig {
  EnsembleSpec spec;
  int b = 2;
  double eps_target = 0.1;
  int steps_per_unit = 10;
  std::map<std::string, std::string> raw;  // normalized key -> value

  std::string canonical_text() const;
  std::uint64_t hash() const;  // FNV-1a over canonical_text
};

EnsembleConfig parse_ensemble_config(std::istream& in,
                                     const std::string& name = "<config>");
EnsembleConfig parse_ensemble_config_file(const std::string& path);

void write_scaling_csv(const ScalingTable& table, std::ostream& out,
                       const std::string& config_hash_hex = "");
void write_scaling_csv(const ScalingTable& table, const std::string& path,
                       const std::string& config_hash_hex = "");
ScalingTable read_scaling_csv(std::istream& in);
ScalingTable read_scaling_csv_file(const std::string& path);

void write_error_vs_T_csv(const ErrorVsTTable& table, std::ostream& out);
void write_runtime_verification_csv(const RuntimeVerificationTable& table,
                                    std::ostream& out);

// Single-panel SVG scatter in the fit's transformed coordinates with the
// fitted line and an R^2 annotation.
void emit_svg_plot(const ScalingTable& table, TableColumn column,
                   const ScalingFit& fit, const std::string& path);

}  // namespace adiarank
