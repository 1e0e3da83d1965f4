#include "adiarank/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "adiarank/parallel.hpp"
#include "adiarank/rng.hpp"

namespace adiarank {

EnsembleFamily parse_family(const std::string& name) {
  if (name == "mixed") return EnsembleFamily::mixed;
  if (name == "pa" || name == "preferential_attachment")
    return EnsembleFamily::preferential_attachment;
  if (name == "reversed_pa" || name == "reverse_of")
    return EnsembleFamily::reversed_pa;
  if (name == "undirected" || name == "undirected_pa")
    return EnsembleFamily::undirected_pa;
  if (name == "copying") return EnsembleFamily::copying;
  if (name == "complete") return EnsembleFamily::complete;
  throw Error(ErrorCode::usage, "unknown model family: " + name);
}

std::string family_name(EnsembleFamily f) {
  switch (f) {
    case EnsembleFamily::mixed: return "mixed";
    case EnsembleFamily::preferential_attachment: return "pa";
    case EnsembleFamily::reversed_pa: return "reversed_pa";
    case EnsembleFamily::undirected_pa: return "undirected";
    case EnsembleFamily::copying: return "copying";
    case EnsembleFamily::complete: return "complete";
  }
  return "?";
}

void EnsembleSpec::validate() const {
  if (sizes.empty())
    throw Error(ErrorCode::invalid_config, "sizes must be nonempty");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
    throw Error(ErrorCode::invalid_config, "sizes must be strictly increasing");
  if (trials < 1)
    throw Error(ErrorCode::invalid_config, "trials must be >= 1");
  if (alpha < 0.0 || alpha >= 1.0)
    throw Error(ErrorCode::invalid_config, "alpha must be in [0, 1)");
}

DirectedGraph make_ensemble_graph(const EnsembleSpec& spec, int n,
                                  std::uint64_t seed) {
  GraphModelConfig cfg;
  cfg.n = n;
  cfg.m = spec.m;
  cfg.p_copy = spec.p_copy;
  cfg.d0 = spec.d0;
  cfg.mix_ratio = spec.mix_ratio;
  cfg.seed = seed;
  switch (spec.family) {
    case EnsembleFamily::mixed:
      cfg.model = GraphModel::mixed;
      return generate_graph(cfg);
    case EnsembleFamily::preferential_attachment:
      cfg.model = GraphModel::preferential_attachment;
      return generate_graph(cfg);
    case EnsembleFamily::reversed_pa:
      cfg.model = GraphModel::reverse_of;
      return generate_graph(cfg);
    case EnsembleFamily::undirected_pa: {
      cfg.model = GraphModel::preferential_attachment;
      DirectedGraph g = generate_graph(cfg);
      return mix_graphs(g, reverse_graph(g));
    }
    case EnsembleFamily::copying:
      cfg.model = GraphModel::copying;
      return generate_graph(cfg);
    case EnsembleFamily::complete:
      return complete_graph(n);
  }
  throw Error(ErrorCode::invalid_config, "unknown family");
}

namespace {

struct MeanStderr {
  double mean = 0.0;
  double se = 0.0;
};

MeanStderr mean_stderr(const std::vector<double>& xs) {
  MeanStderr r;
  if (xs.empty()) return r;
  const double n = static_cast<double>(xs.size());
  r.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.se = std::sqrt(ss / (n - 1) / n);
  }
  return r;
}

}  // namespace

ScalingTable run_gap_ensemble(const EnsembleSpec& spec) {
  spec.validate();
  ScalingTable table;
  for (int n : spec.sizes) {
    struct TrialResult {
      double delta = 0.0;
      double lambda = 0.0;
      bool ok = false;
    };
    std::vector<TrialResult> results(spec.trials);

    parallel_for(
        spec.trials,
        [&](std::size_t trial) {
          std::uint64_t seed = mix_seed(spec.master_seed,
                                        static_cast<std::uint64_t>(n), trial);
          try {
            DirectedGraph g = make_ensemble_graph(spec, n, seed);
            GoogleMatrix gm = google_matrix(g, spec.alpha);
            AdiabaticProblem prob = make_problem(gm);
            SpectralScan scan =
                gap_scan(prob, spec.scan_grid, spec.scan_refine_tol);
            results[trial] = {scan.delta_min, lambda_norm(prob), true};
          } catch (const Error& e) {
            if (e.code() != ErrorCode::eigen_failure &&
                e.code() != ErrorCode::degenerate_ground)
              throw;
            // counted exclusion; too many fail the run below
          }
        },
        spec.workers);

    ScalingRow row;
    row.n = n;
    std::vector<double> deltas, inv_deltas, lambdas;
    for (const auto& r : results) {
      if (!r.ok) {
        row.excluded++;
        continue;
      }
      deltas.push_back(r.delta);
      inv_deltas.push_back(1.0 / r.delta);
      lambdas.push_back(r.lambda);
    }
    if (row.excluded > spec.trials / 100)
      throw Error(ErrorCode::eigen_failure,
                  std::to_string(row.excluded) + " of " +
                      std::to_string(spec.trials) +
                      " trials excluded at n = " + std::to_string(n));

    auto d = mean_stderr(deltas);
    auto id = mean_stderr(inv_deltas);
    auto l = mean_stderr(lambdas);
    row.delta_ave = d.mean;
    row.se_delta = d.se;
    row.inv_delta_ave = id.mean;
    row.se_inv_delta = id.se;
    row.inv_of_ave = d.mean > 0 ? 1.0 / d.mean : 0.0;
    row.lambda_ave = l.mean;
    row.se_lambda = l.se;
    row.trials = static_cast<int>(deltas.size());
    table.rows.push_back(row);
  }
  return table;
}

std::vector<double> log_spaced(double lo, double hi, int points) {
  if (points < 2 || lo <= 0 || hi <= lo)
    throw Error(ErrorCode::invalid_param, "bad log-spaced grid");
  std::vector<double> grid(points);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i)
    grid[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
  return grid;
}

ErrorVsTTable run_error_vs_T(const EnsembleSpec& spec, int n,
                             const std::vector<double>& t_grid,
                             int steps_per_unit) {
  spec.validate();
  if (!std::is_sorted(t_grid.begin(), t_grid.end()))
    throw Error(ErrorCode::invalid_param, "T grid must be increasing");

  // One graph per trial, shared across the whole T grid.
  struct Instance {
    AdiabaticProblem prob;
    Eigen::VectorXd target;
  };
  std::vector<Instance> instances(spec.trials);
  parallel_for(
      spec.trials,
      [&](std::size_t trial) {
        std::uint64_t seed =
            mix_seed(spec.master_seed, static_cast<std::uint64_t>(n), trial);
        DirectedGraph g = make_ensemble_graph(spec, n, seed);
        AdiabaticProblem prob = make_problem(google_matrix(g, spec.alpha));
        Eigen::VectorXd target = ground_state(prob.h_p);
        instances[trial] = {std::move(prob), std::move(target)};
      },
      spec.workers);

  const std::size_t nt = t_grid.size();
  std::vector<double> eps(nt * spec.trials, 0.0);
  parallel_for(
      nt * spec.trials,
      [&](std::size_t idx) {
        std::size_t ti = idx / spec.trials;
        std::size_t trial = idx % spec.trials;
        Schedule sched{Schedule::Kind::linear, 1, t_grid[ti]};
        EvolveOptions opts;
        opts.steps_per_unit = steps_per_unit;
        QuantumState psi = evolve(instances[trial].prob, sched, opts);
        eps[idx] = fidelity_and_error(psi, instances[trial].target).second;
      },
      spec.workers);

  ErrorVsTTable table;
  for (std::size_t ti = 0; ti < nt; ++ti) {
    std::vector<double> col(eps.begin() + ti * spec.trials,
                            eps.begin() + (ti + 1) * spec.trials);
    auto m = mean_stderr(col);
    table.rows.push_back({t_grid[ti], m.mean, m.se, spec.trials});
  }
  return table;
}

bool RuntimeVerificationTable::all_passed() const {
  for (const auto& row : rows)
    if (row.passed != row.trials) return false;
  return true;
}

RuntimeVerificationTable run_runtime_verification(
    const EnsembleSpec& spec, int b, double eps_target,
    const std::vector<int>& sizes, int steps_per_unit) {
  spec.validate();
  RuntimeVerificationTable table;
  for (int n : sizes) {
    const double T = predicted_runtime(n, eps_target, b);
    std::vector<double> eps(spec.trials, 0.0);
    parallel_for(
        spec.trials,
        [&](std::size_t trial) {
          std::uint64_t seed =
              mix_seed(spec.master_seed, static_cast<std::uint64_t>(n), trial);
          DirectedGraph g = make_ensemble_graph(spec, n, seed);
          AdiabaticProblem prob = make_problem(google_matrix(g, spec.alpha));
          Schedule sched{Schedule::Kind::linear, 1, T};
          EvolveOptions opts;
          opts.steps_per_unit = steps_per_unit;
          QuantumState psi = evolve(prob, sched, opts);
          eps[trial] = fidelity_and_error(psi, ground_state(prob.h_p)).second;
        },
        spec.workers);

    RuntimeVerificationRow row;
    row.n = n;
    row.b = b;
    row.total_time = T;
    row.eps_target = eps_target;
    row.trials = spec.trials;
    row.eps_max = *std::max_element(eps.begin(), eps.end());
    row.passed = static_cast<int>(
        std::count_if(eps.begin(), eps.end(),
                      [&](double e) { return e <= eps_target; }));
    table.rows.push_back(row);
  }
  return table;
}

TableColumn parse_column(const std::string& name) {
  if (name == "delta_ave") return TableColumn::delta_ave;
  if (name == "inv_delta_ave") return TableColumn::inv_delta_ave;
  if (name == "inv_of_ave") return TableColumn::inv_of_ave;
  if (name == "lambda_ave") return TableColumn::lambda_ave;
  throw Error(ErrorCode::usage, "unknown column: " + name);
}

std::string column_name(TableColumn c) {
  switch (c) {
    case TableColumn::delta_ave: return "delta_ave";
    case TableColumn::inv_delta_ave: return "inv_delta_ave";
    case TableColumn::inv_of_ave: return "inv_of_ave";
    case TableColumn::lambda_ave: return "lambda_ave";
  }
  return "?";
}

double column_value(const ScalingRow& row, TableColumn c) {
  switch (c) {
    case TableColumn::delta_ave: return row.delta_ave;
    case TableColumn::inv_delta_ave: return row.inv_delta_ave;
    case TableColumn::inv_of_ave: return row.inv_of_ave;
    case TableColumn::lambda_ave: return row.lambda_ave;
  }
  return 0.0;
}

FitModel parse_fit_model(const std::string& name) {
  if (name == "semilog") return FitModel::semilog;
  if (name == "loglog") return FitModel::loglog;
  if (name == "polyloglog") return FitModel::polyloglog;
  if (name == "polylog_power") return FitModel::polylog_power;
  throw Error(ErrorCode::usage, "unknown fit model: " + name);
}

std::string fit_model_name(FitModel m) {
  switch (m) {
    case FitModel::semilog: return "semilog";
    case FitModel::loglog: return "loglog";
    case FitModel::polyloglog: return "polyloglog";
    case FitModel::polylog_power: return "polylog_power";
  }
  return "?";
}

namespace {

void fit_transform(FitModel model, double n, double y, double& tx,
                   double& ty) {
  switch (model) {
    case FitModel::semilog:
      tx = std::log10(n);
      ty = y;
      return;
    case FitModel::loglog:
      tx = std::log(n);
      ty = std::log(y);
      return;
    case FitModel::polyloglog:
      tx = std::log(std::log(n));
      ty = y;
      return;
    case FitModel::polylog_power:
      tx = std::log(std::log10(n));
      ty = std::log(y);
      return;
  }
}

}  // namespace

double ScalingFit::predict(double n) const {
  switch (model) {
    case FitModel::semilog:
      return intercept + slope * std::log10(n);
    case FitModel::loglog:
      return std::exp(intercept) * std::pow(n, slope);
    case FitModel::polyloglog:
      return intercept + slope * std::log(std::log(n));
    case FitModel::polylog_power:
      return std::exp(intercept) * std::pow(std::log10(n), slope);
  }
  return 0.0;
}

ScalingFit fit_xy(const std::vector<double>& x, const std::vector<double>& y,
                  FitModel model) {
  if (x.size() != y.size())
    throw Error(ErrorCode::dimension_mismatch, "x/y length mismatch");
  if (x.size() < 3)
    throw Error(ErrorCode::insufficient_data, "need >= 3 rows to fit");

  std::vector<double> tx(x.size()), ty(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 1.0)
      throw Error(ErrorCode::invalid_param,
                  "n must exceed 1 for log transforms");
    if ((model == FitModel::loglog || model == FitModel::polylog_power) &&
        y[i] <= 0.0)
      throw Error(ErrorCode::invalid_param, "log fit needs positive y");
    fit_transform(model, x[i], y[i], tx[i], ty[i]);
  }

  const double n = static_cast<double>(tx.size());
  const double mx = std::accumulate(tx.begin(), tx.end(), 0.0) / n;
  const double my = std::accumulate(ty.begin(), ty.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < tx.size(); ++i) {
    sxx += (tx[i] - mx) * (tx[i] - mx);
    sxy += (tx[i] - mx) * (ty[i] - my);
    syy += (ty[i] - my) * (ty[i] - my);
  }
  // guard against FMA rounding making a constant abscissa look nonzero
  if (sxx <= 1e-20 * n * (1.0 + mx * mx))
    throw Error(ErrorCode::singular_fit, "degenerate abscissa in fit");

  ScalingFit fit;
  fit.model = model;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

ScalingFit fit_scaling(const ScalingTable& table, TableColumn column,
                       FitModel model) {
  std::vector<double> x, y;
  for (const auto& row : table.rows) {
    x.push_back(static_cast<double>(row.n));
    y.push_back(column_value(row, column));
  }
  return fit_xy(x, y, model);
}

std::vector<ScalingFit> compare_fit_families(const ScalingTable& table,
                                             TableColumn column) {
  if (table.rows.size() < 4)
    throw Error(ErrorCode::insufficient_data,
                "family comparison needs >= 4 rows");
  std::vector<ScalingFit> fits;
  for (FitModel m :
       {FitModel::semilog, FitModel::loglog, FitModel::polylog_power})
    fits.push_back(fit_scaling(table, column, m));
  std::stable_sort(fits.begin(), fits.end(),
                   [](const ScalingFit& a, const ScalingFit& b) {
                     return a.r_squared > b.r_squared;
                   });
  return fits;
}

// ---- config files --------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

std::string EnsembleConfig::canonical_text() const {
  std::string text;
  for (const auto& [k, v] : raw) text += k + "=" + v + "\n";
  return text;
}

std::uint64_t EnsembleConfig::hash() const {
  // FNV-1a 64
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

EnsembleConfig parse_ensemble_config(std::istream& in,
                                     const std::string& name) {
  EnsembleConfig cfg;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::usage, name + ":" + std::to_string(line_no) +
                                        ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    try {
      if (key == "model")
        cfg.spec.family = parse_family(value);
      else if (key == "n_list")
        cfg.spec.sizes = parse_int_list(value);
      else if (key == "trials")
        cfg.spec.trials = std::stoi(value);
      else if (key == "seed")
        cfg.spec.master_seed = std::stoull(value);
      else if (key == "alpha")
        cfg.spec.alpha = std::stod(value);
      else if (key == "scan.grid")
        cfg.spec.scan_grid = std::stoi(value);
      else if (key == "scan.refine_tol")
        cfg.spec.scan_refine_tol = std::stod(value);
      else if (key == "evolve.steps_per_unit")
        cfg.steps_per_unit = std::stoi(value);
      else if (key == "mix_ratio")
        cfg.spec.mix_ratio = std::stod(value);
      else if (key == "p_copy")
        cfg.spec.p_copy = std::stod(value);
      else if (key == "m")
        cfg.spec.m = std::stoi(value);
      else if (key == "b")
        cfg.b = std::stoi(value);
      else if (key == "eps_target")
        cfg.eps_target = std::stod(value);
      else
        throw Error(ErrorCode::usage, "unknown config key: " + key);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::usage, name + ":" + std::to_string(line_no) +
                                        ": bad value for " + key);
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::usage, name + ":" + std::to_string(line_no) +
                                        ": value out of range for " + key);
    }
    cfg.raw[key] = value;
  }
  return cfg;
}

EnsembleConfig parse_ensemble_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open config: " + path);
  return parse_ensemble_config(in, path);
}

// ---- CSV / SVG -----------------------------------------------------------

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_scaling_csv(const ScalingTable& table, std::ostream& out,
                       const std::string& config_hash_hex) {
  if (!config_hash_hex.empty())
    out << "# config-hash=" << config_hash_hex << "\n";
  out << "n,delta_ave,inv_delta_ave,inv_of_ave,lambda_ave,"
         "se_delta,se_inv_delta,se_lambda,trials,excluded\n";
  for (const auto& r : table.rows) {
    out << r.n << "," << fmt17(r.delta_ave) << "," << fmt17(r.inv_delta_ave)
        << "," << fmt17(r.inv_of_ave) << "," << fmt17(r.lambda_ave) << ","
        << fmt17(r.se_delta) << "," << fmt17(r.se_inv_delta) << ","
        << fmt17(r.se_lambda) << "," << r.trials << "," << r.excluded << "\n";
  }
}

void write_scaling_csv(const ScalingTable& table, const std::string& path,
                       const std::string& config_hash_hex) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for write: " + path);
  write_scaling_csv(table, out, config_hash_hex);
}

ScalingTable read_scaling_csv(std::istream& in) {
  ScalingTable table;
  std::string line;
  bool header_seen = false;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // header row
      continue;
    }
    std::stringstream ss(t);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 10)
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": expected 10 columns");
    ScalingRow r;
    r.n = std::stoi(cells[0]);
    r.delta_ave = std::stod(cells[1]);
    r.inv_delta_ave = std::stod(cells[2]);
    r.inv_of_ave = std::stod(cells[3]);
    r.lambda_ave = std::stod(cells[4]);
    r.se_delta = std::stod(cells[5]);
    r.se_inv_delta = std::stod(cells[6]);
    r.se_lambda = std::stod(cells[7]);
    r.trials = std::stoi(cells[8]);
    r.excluded = std::stoi(cells[9]);
    table.rows.push_back(r);
  }
  if (!header_seen)
    throw Error(ErrorCode::parse_error, "empty scaling table");
  return table;
}

ScalingTable read_scaling_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open for read: " + path);
  return read_scaling_csv(in);
}

void write_error_vs_T_csv(const ErrorVsTTable& table, std::ostream& out) {
  out << "T,eps_ave,se_eps,trials\n";
  for (const auto& r : table.rows)
    out << fmt17(r.total_time) << "," << fmt17(r.eps_ave) << ","
        << fmt17(r.se_eps) << "," << r.trials << "\n";
}

void write_runtime_verification_csv(const RuntimeVerificationTable& table,
                                    std::ostream& out) {
  out << "n,b,T,eps_target,eps_max,passed,trials\n";
  for (const auto& r : table.rows)
    out << r.n << "," << r.b << "," << fmt17(r.total_time) << ","
        << fmt17(r.eps_target) << "," << fmt17(r.eps_max) << "," << r.passed
        << "," << r.trials << "\n";
}

void emit_svg_plot(const ScalingTable& table, TableColumn column,
                   const ScalingFit& fit, const std::string& path) {
  if (table.rows.empty())
    throw Error(ErrorCode::insufficient_data, "empty table");

  std::vector<double> tx, ty;
  for (const auto& r : table.rows) {
    double x, y;
    fit_transform(fit.model, static_cast<double>(r.n),
                  column_value(r, column), x, y);
    tx.push_back(x);
    ty.push_back(y);
  }
  auto [xmin_it, xmax_it] = std::minmax_element(tx.begin(), tx.end());
  auto [ymin_it, ymax_it] = std::minmax_element(ty.begin(), ty.end());
  double xmin = *xmin_it, xmax = *xmax_it, ymin = *ymin_it, ymax = *ymax_it;
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;

  const double w = 640, h = 480, ml = 70, mr = 20, mt = 30, mb = 50;
  auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr);
  };
  auto py = [&](double y) {
    return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb);
  };

  static const char* x_labels[] = {"log10 n", "ln n", "ln ln n",
                                   "ln log10 n"};
  static const char* y_labels[] = {"y", "ln y", "y", "ln y"};
  int mi = static_cast<int>(fit.model);

  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for write: " + path);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  out << "  <rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";
  // axes
  out << "  <polyline fill=\"none\" stroke=\"black\" points=\"" << ml << ","
      << mt << " " << ml << "," << (h - mb) << " " << (w - mr) << ","
      << (h - mb) << "\"/>\n";
  // fitted line in transformed coordinates
  double fy0 = fit.intercept + fit.slope * xmin;
  double fy1 = fit.intercept + fit.slope * xmax;
  out << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" "
         "points=\""
      << px(xmin) << "," << py(fy0) << " " << px(xmax) << "," << py(fy1)
      << "\"/>\n";
  // data series
  out << "  <polyline fill=\"none\" stroke=\"#2980b9\" stroke-dasharray=\"3,3\""
         " points=\"";
  for (std::size_t i = 0; i < tx.size(); ++i)
    out << px(tx[i]) << "," << py(ty[i]) << (i + 1 < tx.size() ? " " : "");
  out << "\"/>\n";
  for (std::size_t i = 0; i < tx.size(); ++i)
    out << "  <circle cx=\"" << px(tx[i]) << "\" cy=\"" << py(ty[i])
        << "\" r=\"3\" fill=\"#2980b9\"/>\n";
  out << "  <text x=\"" << (w / 2) << "\" y=\"" << (h - 12)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << x_labels[mi]
      << "</text>\n";
  out << "  <text x=\"16\" y=\"" << (h / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
         "16 "
      << (h / 2) << ")\">" << y_labels[mi] << " [" << column_name(column)
      << "]</text>\n";
  char ann[160];
  std::snprintf(ann, sizeof(ann),
                "%s fit: slope=%.4g intercept=%.4g R2=%.4f",
                fit_model_name(fit.model).c_str(), fit.slope, fit.intercept,
                fit.r_squared);
  out << "  <text x=\"" << (ml + 10) << "\" y=\"" << (mt + 16)
      << "\" font-size=\"13\">" << ann << "</text>\n";
  out << "</svg>\n";
}

}  // namespace adiarank
