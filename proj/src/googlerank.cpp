#include "adiarank/googlerank.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "adiarank/rng.hpp"

namespace adiarank {

TransitionMatrix transition_matrix(const DirectedGraph& g) {
  const int n = g.num_nodes();
  Eigen::MatrixXd p1 = Eigen::MatrixXd::Zero(n, n);
  auto out = g.out_degrees();
  for (const auto& [i, j] : g.edges()) p1(i, j) = 1.0 / out[i];
  return {std::move(p1)};
}

StochasticMatrix patch_dangling(const TransitionMatrix& p1) {
  Eigen::MatrixXd p2 = p1.m;
  const int n = static_cast<int>(p2.rows());
  for (int i = 0; i < n; ++i) {
    if (p2.row(i).sum() == 0.0) p2.row(i).setConstant(1.0 / n);
  }
  return {std::move(p2)};
}

Eigen::VectorXd uniform_vector(int n) {
  return Eigen::VectorXd::Constant(n, 1.0 / n);
}

static Eigen::VectorXd checked_personalization(const Eigen::VectorXd& v,
                                               int n) {
  if (v.size() == 0) return uniform_vector(n);
  if (v.size() != n)
    throw Error(ErrorCode::invalid_personalization,
                "personalization length " + std::to_string(v.size()) +
                    " != n = " + std::to_string(n));
  if (v.minCoeff() <= 0.0)
    throw Error(ErrorCode::invalid_personalization,
                "personalization entries must be strictly positive");
  if (std::abs(v.sum() - 1.0) > 1e-12)
    throw Error(ErrorCode::invalid_personalization,
                "personalization must sum to 1");
  return v;
}

GoogleMatrix google_matrix(const StochasticMatrix& p2, double alpha,
                           const Eigen::VectorXd& v) {
  // alpha = 0 is allowed as the pure-teleportation limit (G = v e^T).
  if (alpha < 0.0 || alpha >= 1.0)
    throw Error(ErrorCode::invalid_alpha,
                "alpha must be in [0, 1), got " + std::to_string(alpha));
  const int n = static_cast<int>(p2.m.rows());
  Eigen::VectorXd vv = checked_personalization(v, n);
  GoogleMatrix g;
  g.alpha = alpha;
  g.v = vv;
  g.m = alpha * p2.m.transpose() +
        (1.0 - alpha) * vv * Eigen::RowVectorXd::Ones(n);
  return g;
}

GoogleMatrix google_matrix(const DirectedGraph& g, double alpha,
                           const Eigen::VectorXd& v) {
  return google_matrix(patch_dangling(transition_matrix(g)), alpha, v);
}

PageRankVector pagerank_power(const GoogleMatrix& g, const Eigen::VectorXd& p0,
                              double tol, long max_iter) {
  if (tol <= 0.0) throw Error(ErrorCode::invalid_param, "tol must be > 0");
  const int n = g.size();
  Eigen::VectorXd p = p0.size() == 0 ? uniform_vector(n) : p0;
  if (p.size() != n)
    throw Error(ErrorCode::dimension_mismatch, "p0 length != n");

  double residual = std::numeric_limits<double>::infinity();
  long it = 0;
  while (it < max_iter) {
    Eigen::VectorXd next = g.m * p;
    residual = (next - p).lpNorm<1>();
    p = std::move(next);
    ++it;
    if (residual <= tol) break;
  }
  if (residual > tol)
    throw Error(ErrorCode::no_convergence,
                "power method residual " + std::to_string(residual) +
                    " > tol after " + std::to_string(it) + " iterations");
  p /= p.sum();
  residual = (g.m * p - p).lpNorm<1>();
  return {std::move(p), residual, it};
}

PageRankVector pagerank_mcmc(const DirectedGraph& g, const McmcConfig& cfg) {
  if (cfg.num_walks < 1)
    throw Error(ErrorCode::invalid_config, "num_walks must be >= 1");
  if (cfg.alpha < 0.0 || cfg.alpha >= 1.0)
    throw Error(ErrorCode::invalid_config, "alpha must be in [0, 1)");
  const int n = g.num_nodes();
  long max_len = cfg.max_len > 0
                     ? cfg.max_len
                     : 10 * static_cast<long>(std::ceil(1.0 / (1.0 - cfg.alpha)));

  auto adj = g.out_adjacency();
  std::vector<long> counts(n, 0);
  for (long w = 0; w < cfg.num_walks; ++w) {
    // one PRNG stream per walk, keyed by (seed, walk index)
    auto rng = make_rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(w)));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> any_node(0, n - 1);

    int node = any_node(rng);  // v = e/n start
    for (long step = 0; step < max_len; ++step) {
      if (coin(rng) < 1.0 - cfg.alpha) break;
      const auto& nbrs = adj[node];
      if (nbrs.empty()) {
        node = any_node(rng);
      } else {
        node = nbrs[std::uniform_int_distribution<std::size_t>(
            0, nbrs.size() - 1)(rng)];
      }
    }
    counts[node]++;
  }

  Eigen::VectorXd p(n);
  for (int i = 0; i < n; ++i)
    p(i) = static_cast<double>(counts[i]) / cfg.num_walks;
  return {std::move(p), -1.0, cfg.num_walks};
}

double subdominant_eigenvalue(const GoogleMatrix& g, int size_cap) {
  const int n = g.size();
  if (n > size_cap)
    throw Error(ErrorCode::size_cap,
                "dense spectrum computation capped at n = " +
                    std::to_string(size_cap));
  if (n == 1) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(g.m, false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::eigen_failure, "dense eigensolver failed");
  Eigen::VectorXd mods = es.eigenvalues().array().abs();
  std::sort(mods.data(), mods.data() + mods.size(), std::greater<double>());
  return mods(1);
}

PageRankVector inverse_pagerank(const DirectedGraph& g, double alpha,
                                const Eigen::VectorXd& v, double tol) {
  return pagerank_power(google_matrix(reverse_graph(g), alpha, v),
                        Eigen::VectorXd(), tol);
}

void write_pagerank_csv(const PageRankVector& pr, std::ostream& out) {
  out << "node,p\n";
  char buf[64];
  for (Eigen::Index i = 0; i < pr.p.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g",
                  static_cast<long long>(i), pr.p(i));
    out << buf << "\n";
  }
}

void write_pagerank_csv(const PageRankVector& pr, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for write: " + path);
  write_pagerank_csv(pr, out);
}

}  // namespace adiarank
