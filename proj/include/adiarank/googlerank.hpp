#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "adiarank/graph.hpp"

namespace adiarank {

// Row-substochastic walk matrix: entry (i,j) = 1/d(i) on edges, dangling
// rows all zero.
struct TransitionMatrix {
  Eigen::MatrixXd m;
};

// Row-stochastic matrix after the dangling patch.
struct StochasticMatrix {
  Eigen::MatrixXd m;
};

// Column-stochastic, strictly positive: G = alpha * P2^T + (1-alpha) * v e^T.
struct GoogleMatrix {
  Eigen::MatrixXd m;
  double alpha = 0.85;
  Eigen::VectorXd v;

  int size() const { return static_cast<int>(m.rows()); }
};

struct PageRankVector {
  Eigen::VectorXd p;       // nonnegative, sums to 1
  double residual = 0.0;   // achieved ||G p - p||_1 (-1 for MCMC estimates)
  long iterations = 0;     // power iterations, or walk count for MCMC
};

TransitionMatrix transition_matrix(const DirectedGraph& g);
StochasticMatrix patch_dangling(const TransitionMatrix& p1);

Eigen::VectorXd uniform_vector(int n);

GoogleMatrix google_matrix(const StochasticMatrix& p2, double alpha = 0.85,
                           const Eigen::VectorXd& v = Eigen::VectorXd());

// Full chain g -> P1 -> P2 -> G.
GoogleMatrix google_matrix(const DirectedGraph& g, double alpha = 0.85,
                           const Eigen::VectorXd& v = Eigen::VectorXd());

PageRankVector pagerank_power(const GoogleMatrix& g,
                              const Eigen::VectorXd& p0 = Eigen::VectorXd(),
                              double tol = 1e-10, long max_iter = 100000);

struct McmcConfig {
  double alpha = 0.85;
  long num_walks = 100000;
  long max_len = 0;  // 0 -> 10 * ceil(1/(1-alpha))
  std::uint64_t seed = 0;
};

// Terminal-visit estimator over independent geometric-length walks; walk k
// draws from a PRNG stream keyed by (seed, k), so the estimate is identical
// for any worker count.
PageRankVector pagerank_mcmc(const DirectedGraph& g, const McmcConfig& cfg);

// |lambda_2| of G (second-largest modulus); dense solve, capped size.
double subdominant_eigenvalue(const GoogleMatrix& g, int size_cap = 2048);

PageRankVector inverse_pagerank(const DirectedGraph& g, double alpha = 0.85,
                                const Eigen::VectorXd& v = Eigen::VectorXd(),
                                double tol = 1e-10);

// CSV "node,p" with 17 significant digits.
void write_pagerank_csv(const PageRankVector& pr, std::ostream& out);
void write_pagerank_csv(const PageRankVector& pr, const std::string& path);

}  // namespace adiarank
