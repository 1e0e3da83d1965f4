#include "adiarank/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adiarank/adiabatic.hpp"
#include "adiarank/experiments.hpp"
#include "adiarank/googlerank.hpp"
#include "adiarank/graph.hpp"
#include "adiarank/measurement.hpp"

namespace adiarank {

namespace {

// Writes to path, or stdout when path is empty.
void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for write: " + path);
  fn(out);
  if (!out) throw Error(ErrorCode::io_error, "write failed: " + path);
}

std::vector<int> parse_sizes_arg(const std::string& s) {
  std::vector<int> sizes;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    sizes.push_back(std::stoi(item));
  }
  if (sizes.empty())
    throw Error(ErrorCode::usage, "empty size list: " + s);
  return sizes;
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

struct GenArgs {
  std::string model = "pa";
  int n = 0;
  int m = 2;
  double p_copy = 0.5;
  int d0 = 2;
  double mix_ratio = 3.0;
  std::uint64_t seed = 0;
  bool self_loops = false;
  std::string out;
};

struct PagerankArgs {
  std::string in;
  double alpha = 0.85;
  double tol = 1e-10;
  long max_iter = 100000;
  bool inverse = false;
  bool mcmc = false;
  long walks = 100000;
  long max_len = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct GapscanArgs {
  std::string in;
  double alpha = 0.85;
  int grid = 64;
  double refine_tol = 1e-6;
  std::string out;
};

struct EvolveArgs {
  std::string in;
  double alpha = 0.85;
  double total_time = 0.0;
  std::string schedule = "linear";
  int boundary_order = 1;
  int steps_per_unit = 10;
  int stride = 10;
  bool check_steps = false;
  std::string out;
};

struct EnsembleArgs {
  std::string config;
  std::string out;
  // flag overrides; CLI flags win over the config file
  std::string model, sizes;
  int trials = -1;
  long long seed = -1;
  double alpha = -1, mix_ratio = -1, p_copy = -1;
  int m = -1;
};

struct ErrVsTArgs {
  int n = 16;
  double t_min = 10, t_max = 1e4;
  int t_points = 7;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string model = "mixed";
  int steps_per_unit = 10;
  double alpha = 0.85;
  std::string out;
};

struct VerifyArgs {
  int b = 2;
  double eps = 0.1;
  std::string sizes = "8,12,16,20";
  int trials = 20;
  std::uint64_t seed = 0;
  std::string model = "mixed";
  int steps_per_unit = 10;
  double alpha = 0.85;
  std::string out;
};

struct MeasureArgs {
  std::string in;
  double alpha = 0.85;
  long shots = 100000;
  std::uint64_t seed = 0;
  std::string out;
};

struct SwapArgs {
  std::string in_a, in_b;
  double alpha = 0.85;
  long shots = 2000;
  std::uint64_t seed = 0;
  std::string out;
};

struct FitArgs {
  std::string in;
  std::string column = "inv_of_ave";
  std::string model = "semilog";
  std::string out;  // SVG path for plot
};

DirectedGraph load_graph(const std::string& path) {
  return read_edgelist(path);
}

int do_gen(const GenArgs& a) {
  GraphModelConfig cfg;
  cfg.n = a.n;
  cfg.m = a.m;
  cfg.p_copy = a.p_copy;
  cfg.d0 = a.d0;
  cfg.mix_ratio = a.mix_ratio;
  cfg.seed = a.seed;
  DirectedGraph g = [&] {
    if (a.model == "pa" || a.model == "preferential_attachment") {
      cfg.model = GraphModel::preferential_attachment;
      return generate_graph(cfg);
    }
    if (a.model == "copying") {
      cfg.model = GraphModel::copying;
      return generate_graph(cfg);
    }
    if (a.model == "complete") return complete_graph(a.n, a.self_loops);
    if (a.model == "reversed_pa" || a.model == "reverse_of") {
      cfg.model = GraphModel::reverse_of;
      return generate_graph(cfg);
    }
    if (a.model == "mixed") {
      cfg.model = GraphModel::mixed;
      return generate_graph(cfg);
    }
    if (a.model == "undirected") {
      cfg.model = GraphModel::preferential_attachment;
      DirectedGraph base = generate_graph(cfg);
      return mix_graphs(base, reverse_graph(base));
    }
    throw Error(ErrorCode::usage, "unknown model: " + a.model);
  }();
  with_output(a.out, [&](std::ostream& out) { write_edgelist(g, out); });
  return 0;
}

int do_pagerank(const PagerankArgs& a) {
  DirectedGraph g = load_graph(a.in);
  PageRankVector pr;
  if (a.mcmc) {
    McmcConfig mc;
    mc.alpha = a.alpha;
    mc.num_walks = a.walks;
    mc.max_len = a.max_len;
    mc.seed = a.seed;
    pr = pagerank_mcmc(a.inverse ? reverse_graph(g) : g, mc);
  } else if (a.inverse) {
    pr = inverse_pagerank(g, a.alpha, Eigen::VectorXd(), a.tol);
  } else {
    pr = pagerank_power(google_matrix(g, a.alpha), Eigen::VectorXd(), a.tol,
                        a.max_iter);
  }
  with_output(a.out, [&](std::ostream& out) { write_pagerank_csv(pr, out); });
  return 0;
}

int do_gapscan(const GapscanArgs& a) {
  DirectedGraph g = load_graph(a.in);
  AdiabaticProblem prob = make_problem(google_matrix(g, a.alpha));
  SpectralScan scan = gap_scan(prob, a.grid, a.refine_tol);
  with_output(a.out, [&](std::ostream& out) { write_scan_csv(scan, out); });
  return 0;
}

int do_evolve(const EvolveArgs& a) {
  DirectedGraph g = load_graph(a.in);
  AdiabaticProblem prob = make_problem(google_matrix(g, a.alpha));
  Schedule sched;
  sched.kind = a.schedule == "smooth" ? Schedule::Kind::smooth
                                      : Schedule::Kind::linear;
  sched.boundary_order = a.boundary_order;
  sched.total_time = a.total_time;

  struct Sample {
    double t, s;
    QuantumState psi;
  };
  std::vector<Sample> samples;
  long step_count = 0;
  EvolveOptions opts;
  opts.steps_per_unit = a.steps_per_unit;
  opts.check_steps = a.check_steps;
  QuantumState final_state = evolve(
      prob, sched, opts, [&](double t, double s, const QuantumState& psi) {
        if (step_count % a.stride == 0) samples.push_back({t, s, psi});
        ++step_count;
      });
  if (samples.empty() || samples.back().t != sched.total_time)
    samples.push_back({sched.total_time, 1.0, final_state});

  with_output(a.out, [&](std::ostream& out) {
    out << "t,s,fidelity_to_instantaneous_ground\n";
    char buf[120];
    for (const auto& smp : samples) {
      Eigen::VectorXd ground = ground_state(interpolate(prob, smp.s));
      double f = fidelity_and_error(smp.psi, ground).first;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", smp.t, smp.s, f);
      out << buf << "\n";
    }
  });
  return 0;
}

EnsembleConfig effective_ensemble_config(const EnsembleArgs& a) {
  EnsembleConfig cfg = parse_ensemble_config_file(a.config);
  auto set = [&](const std::string& key, const std::string& value) {
    cfg.raw[key] = value;
  };
  if (!a.model.empty()) {
    cfg.spec.family = parse_family(a.model);
    set("model", family_name(cfg.spec.family));
  }
  if (!a.sizes.empty()) {
    cfg.spec.sizes = parse_sizes_arg(a.sizes);
    set("n_list", a.sizes);
  }
  if (a.trials >= 0) {
    cfg.spec.trials = a.trials;
    set("trials", std::to_string(a.trials));
  }
  if (a.seed >= 0) {
    cfg.spec.master_seed = static_cast<std::uint64_t>(a.seed);
    set("seed", std::to_string(a.seed));
  }
  if (a.alpha >= 0) {
    cfg.spec.alpha = a.alpha;
    set("alpha", std::to_string(a.alpha));
  }
  if (a.mix_ratio >= 0) {
    cfg.spec.mix_ratio = a.mix_ratio;
    set("mix_ratio", std::to_string(a.mix_ratio));
  }
  if (a.p_copy >= 0) {
    cfg.spec.p_copy = a.p_copy;
    set("p_copy", std::to_string(a.p_copy));
  }
  if (a.m >= 0) {
    cfg.spec.m = a.m;
    set("m", std::to_string(a.m));
  }
  return cfg;
}

int do_ensemble(const EnsembleArgs& a) {
  EnsembleConfig cfg = effective_ensemble_config(a);
  ScalingTable table = run_gap_ensemble(cfg.spec);
  with_output(a.out, [&](std::ostream& out) {
    write_scaling_csv(table, out, hash_hex(cfg.hash()));
  });
  return 0;
}

int do_errvst(const ErrVsTArgs& a) {
  EnsembleSpec spec;
  spec.family = parse_family(a.model);
  spec.sizes = {a.n};
  spec.trials = a.trials;
  spec.master_seed = a.seed;
  spec.alpha = a.alpha;
  ErrorVsTTable table = run_error_vs_T(
      spec, a.n, log_spaced(a.t_min, a.t_max, a.t_points), a.steps_per_unit);
  with_output(a.out,
              [&](std::ostream& out) { write_error_vs_T_csv(table, out); });
  return 0;
}

int do_verify(const VerifyArgs& a) {
  EnsembleSpec spec;
  spec.family = parse_family(a.model);
  auto sizes = parse_sizes_arg(a.sizes);
  spec.sizes = sizes;
  spec.trials = a.trials;
  spec.master_seed = a.seed;
  spec.alpha = a.alpha;
  RuntimeVerificationTable table =
      run_runtime_verification(spec, a.b, a.eps, sizes, a.steps_per_unit);
  with_output(a.out, [&](std::ostream& out) {
    write_runtime_verification_csv(table, out);
  });
  return table.all_passed() ? 0 : 3;
}

int do_measure(const MeasureArgs& a) {
  DirectedGraph g = load_graph(a.in);
  PageRankVector pr = pagerank_power(google_matrix(g, a.alpha));
  MeasurementRecord rec =
      sample_sites(quantum_state_from_pagerank(pr), a.shots, a.seed);
  with_output(a.out,
              [&](std::ostream& out) { write_measurement_csv(rec, out); });
  return 0;
}

int do_swaptest(const SwapArgs& a) {
  auto state_of = [&](const std::string& path) {
    DirectedGraph g = load_graph(path);
    return quantum_state_from_pagerank(pagerank_power(google_matrix(g, a.alpha)));
  };
  SwapTestResult r =
      swap_test(state_of(a.in_a), state_of(a.in_b), a.shots, a.seed);
  with_output(a.out, [&](std::ostream& out) { write_swap_result(r, out); });
  return 0;
}

int do_fit(const FitArgs& a, bool plot) {
  ScalingTable table = read_scaling_csv_file(a.in);
  TableColumn column = parse_column(a.column);
  ScalingFit fit = fit_scaling(table, column, parse_fit_model(a.model));
  if (plot) {
    if (a.out.empty())
      throw Error(ErrorCode::usage, "plot requires --out <svg>");
    emit_svg_plot(table, column, fit, a.out);
    return 0;
  }
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "model=%s column=%s slope=%.17g intercept=%.17g r2=%.17g",
                fit_model_name(fit.model).c_str(), a.column.c_str(), fit.slope,
                fit.intercept, fit.r_squared);
  with_output(a.out, [&](std::ostream& out) { out << buf << "\n"; });
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Adiabatic quantum PageRank simulation toolkit"};
  app.require_subcommand(1);

  auto alpha_range = CLI::Range(0.0, 1.0).description("in [0, 1)");

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "Generate a random web graph");
  cgen->add_option("--model", gen.model,
                   "pa|copying|complete|reversed_pa|mixed|undirected");
  cgen->add_option("--n", gen.n, "node count")->required();
  cgen->add_option("--m", gen.m, "edges per new vertex");
  cgen->add_option("--p-copy", gen.p_copy, "copying rewire probability");
  cgen->add_option("--d0", gen.d0, "copying initial out-degree");
  cgen->add_option("--mix-ratio", gen.mix_ratio, "mixed-model degree ratio");
  cgen->add_option("--seed", gen.seed, "PRNG seed");
  cgen->add_flag("--self-loops", gen.self_loops, "complete graph with loops");
  cgen->add_option("--out", gen.out, "edge-list output path")->required();

  PagerankArgs pr;
  auto* cpr = app.add_subcommand("pagerank", "Compute PageRank");
  cpr->add_option("--in", pr.in, "edge-list input")->required();
  cpr->add_option("--alpha", pr.alpha)->check(alpha_range);
  cpr->add_option("--tol", pr.tol, "L1 residual tolerance");
  cpr->add_option("--max-iter", pr.max_iter);
  cpr->add_flag("--inverse", pr.inverse, "PageRank of the reversed graph");
  cpr->add_flag("--mcmc", pr.mcmc, "Monte Carlo estimate");
  cpr->add_option("--walks", pr.walks);
  cpr->add_option("--max-len", pr.max_len);
  cpr->add_option("--seed", pr.seed);
  cpr->add_option("--out", pr.out, "CSV output (default stdout)");

  GapscanArgs gs;
  auto* cgs = app.add_subcommand("gapscan", "Scan the spectral gap over s");
  cgs->add_option("--in", gs.in)->required();
  cgs->add_option("--alpha", gs.alpha)->check(alpha_range);
  cgs->add_option("--grid", gs.grid, "grid points");
  cgs->add_option("--refine-tol", gs.refine_tol);
  cgs->add_option("--out", gs.out);

  EvolveArgs ev;
  auto* cev = app.add_subcommand("evolve", "Integrate the adiabatic dynamics");
  cev->add_option("--in", ev.in)->required();
  cev->add_option("--alpha", ev.alpha)->check(alpha_range);
  cev->add_option("--T", ev.total_time, "total evolution time")->required();
  cev->add_option("--schedule", ev.schedule, "linear|smooth");
  cev->add_option("--a", ev.boundary_order, "smooth boundary order");
  cev->add_option("--steps-per-unit", ev.steps_per_unit);
  cev->add_option("--stride", ev.stride, "sampling stride");
  cev->add_flag("--check-steps", ev.check_steps);
  cev->add_option("--out", ev.out);

  EnsembleArgs en;
  auto* cen = app.add_subcommand("ensemble", "Run a gap-scaling ensemble");
  cen->add_option("--config", en.config, "key = value config file")->required();
  cen->add_option("--model", en.model, "override: model family");
  cen->add_option("--sizes", en.sizes, "override: comma-separated sizes");
  cen->add_option("--trials", en.trials, "override: trials per size");
  cen->add_option("--seed", en.seed, "override: master seed");
  cen->add_option("--alpha", en.alpha)->check(alpha_range);
  cen->add_option("--mix-ratio", en.mix_ratio);
  cen->add_option("--p-copy", en.p_copy);
  cen->add_option("--m", en.m);
  cen->add_option("--out", en.out);

  ErrVsTArgs et;
  auto* cet = app.add_subcommand("errvst", "Adiabatic error vs run time");
  cet->add_option("--n", et.n);
  cet->add_option("--t-min", et.t_min);
  cet->add_option("--t-max", et.t_max);
  cet->add_option("--t-points", et.t_points);
  cet->add_option("--trials", et.trials);
  cet->add_option("--seed", et.seed);
  cet->add_option("--model", et.model);
  cet->add_option("--steps-per-unit", et.steps_per_unit);
  cet->add_option("--alpha", et.alpha)->check(alpha_range);
  cet->add_option("--out", et.out);

  VerifyArgs vr;
  auto* cvr =
      app.add_subcommand("verify-runtime", "Check the predicted run-time");
  cvr->add_option("--b", vr.b)->check(CLI::Range(1, 5));
  cvr->add_option("--eps", vr.eps, "target adiabatic error");
  cvr->add_option("--sizes", vr.sizes, "comma-separated sizes");
  cvr->add_option("--trials", vr.trials);
  cvr->add_option("--seed", vr.seed);
  cvr->add_option("--model", vr.model);
  cvr->add_option("--steps-per-unit", vr.steps_per_unit);
  cvr->add_option("--alpha", vr.alpha)->check(alpha_range);
  cvr->add_option("--out", vr.out);

  MeasureArgs me;
  auto* cme = app.add_subcommand("measure", "Sample the quantum PageRank state");
  cme->add_option("--in", me.in)->required();
  cme->add_option("--alpha", me.alpha)->check(alpha_range);
  cme->add_option("--shots", me.shots);
  cme->add_option("--seed", me.seed);
  cme->add_option("--out", me.out);

  SwapArgs sw;
  auto* csw = app.add_subcommand("swaptest", "SWAP-test two PageRank states");
  csw->add_option("--in-a", sw.in_a)->required();
  csw->add_option("--in-b", sw.in_b)->required();
  csw->add_option("--alpha", sw.alpha)->check(alpha_range);
  csw->add_option("--shots", sw.shots);
  csw->add_option("--seed", sw.seed);
  csw->add_option("--out", sw.out);

  FitArgs ft;
  auto* cft = app.add_subcommand("fit", "Fit a scaling law to a table");
  cft->add_option("--in", ft.in, "scaling table CSV")->required();
  cft->add_option("--column", ft.column);
  cft->add_option("--model", ft.model,
                  "semilog|loglog|polyloglog|polylog_power");
  cft->add_option("--out", ft.out);

  FitArgs pl;
  auto* cpl = app.add_subcommand("plot", "Plot a table with a fitted line");
  cpl->add_option("--in", pl.in)->required();
  cpl->add_option("--column", pl.column);
  cpl->add_option("--model", pl.model);
  cpl->add_option("--out", pl.out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
    if (cgen->parsed()) return do_gen(gen);
    if (cpr->parsed()) return do_pagerank(pr);
    if (cgs->parsed()) return do_gapscan(gs);
    if (cev->parsed()) return do_evolve(ev);
    if (cen->parsed()) return do_ensemble(en);
    if (cet->parsed()) return do_errvst(et);
    if (cvr->parsed()) return do_verify(vr);
    if (cme->parsed()) return do_measure(me);
    if (csw->parsed()) return do_swaptest(sw);
    if (cft->parsed()) return do_fit(ft, false);
    if (cpl->parsed()) return do_fit(pl, true);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << "error: UsageError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.code_name() << ": " << e.detail() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace adiarank
