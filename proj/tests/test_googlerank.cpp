#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "adiarank/googlerank.hpp"
#include "adiarank/rng.hpp"

using namespace adiarank;

namespace {

DirectedGraph two_cycle() {
  DirectedGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  return g;
}

DirectedGraph dangling_pair() {
  DirectedGraph g(2);
  g.add_edge(0, 1);
  return g;
}

DirectedGraph random_graph(int n, int m, std::uint64_t seed) {
  GraphModelConfig cfg;
  cfg.model = GraphModel::preferential_attachment;
  cfg.n = n;
  cfg.m = m;
  cfg.seed = seed;
  return gen_preferential_attachment(cfg);
}

// Dense principal-eigenvector oracle, independent of the power iteration.
Eigen::VectorXd eigen_oracle(const GoogleMatrix& g) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(g.m);
  REQUIRE(es.info() == Eigen::Success);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i) - 1.0) <
        std::abs(es.eigenvalues()(best) - 1.0))
      best = i;
  Eigen::VectorXd p = es.eigenvectors().col(best).real();
  return p / p.sum();
}

}  // namespace

TEST_CASE("transition_matrix") {
  auto p1 = transition_matrix(two_cycle());
  CHECK(p1.m(0, 1) == 1.0);
  CHECK(p1.m(1, 0) == 1.0);
  CHECK(p1.m(0, 0) == 0.0);

  auto dangling = transition_matrix(dangling_pair());
  CHECK(dangling.m.row(1).sum() == 0.0);
  CHECK(dangling.m(0, 1) == 1.0);

  auto c3 = transition_matrix(complete_graph(3, false));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(c3.m(i, j) == (i == j ? 0.0 : doctest::Approx(0.5)));
}

TEST_CASE("patch_dangling") {
  auto p2 = patch_dangling(transition_matrix(dangling_pair()));
  CHECK(p2.m(0, 1) == 1.0);
  CHECK(p2.m(1, 0) == doctest::Approx(0.5));
  CHECK(p2.m(1, 1) == doctest::Approx(0.5));

  // idempotent on already-stochastic input
  auto again = patch_dangling({p2.m});
  CHECK(again.m == p2.m);

  // empty graph: every row becomes uniform
  auto empty = patch_dangling(transition_matrix(DirectedGraph(3)));
  CHECK(empty.m.isApprox(Eigen::MatrixXd::Constant(3, 3, 1.0 / 3)));
}

TEST_CASE("google_matrix") {
  SUBCASE("2-cycle") {
    auto g = google_matrix(two_cycle(), 0.85);
    CHECK(g.m(0, 0) == doctest::Approx(0.075));
    CHECK(g.m(0, 1) == doctest::Approx(0.925));
    CHECK(g.m(1, 0) == doctest::Approx(0.925));
    CHECK(g.m(1, 1) == doctest::Approx(0.075));
  }

  SUBCASE("dangling pair") {
    auto g = google_matrix(dangling_pair(), 0.85);
    CHECK(g.m(0, 0) == doctest::Approx(0.075));
    CHECK(g.m(0, 1) == doctest::Approx(0.5));
    CHECK(g.m(1, 0) == doctest::Approx(0.925));
    CHECK(g.m(1, 1) == doctest::Approx(0.5));
  }

  SUBCASE("alpha = 0 limit is pure teleportation") {
    auto g = google_matrix(random_graph(8, 2, 3), 0.0);
    CHECK(g.m.isApprox(Eigen::MatrixXd::Constant(8, 8, 1.0 / 8)));
  }

  SUBCASE("column-stochastic and strictly positive") {
    auto g = google_matrix(random_graph(32, 2, 5), 0.85);
    for (int j = 0; j < 32; ++j)
      CHECK(g.m.col(j).sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.m.minCoeff() >= (1 - 0.85) / 32 - 1e-15);
  }

  SUBCASE("parameter validation") {
    auto p2 = patch_dangling(transition_matrix(two_cycle()));
    CHECK_THROWS_AS(google_matrix(p2, 1.0), Error);
    CHECK_THROWS_AS(google_matrix(p2, -0.1), Error);
    Eigen::VectorXd bad = Eigen::VectorXd::Zero(2);
    bad(0) = 1.0;  // zero entry
    CHECK_THROWS_AS(google_matrix(p2, 0.85, bad), Error);
    Eigen::VectorXd unnorm = Eigen::VectorXd::Constant(2, 0.6);
    CHECK_THROWS_AS(google_matrix(p2, 0.85, unnorm), Error);
  }
}

TEST_CASE("pagerank_power") {
  SUBCASE("2-cycle symmetry") {
    auto pr = pagerank_power(google_matrix(two_cycle()));
    CHECK(pr.p(0) == doctest::Approx(0.5));
    CHECK(pr.p(1) == doctest::Approx(0.5));
  }

  SUBCASE("dangling pair matches the 2x2 oracle") {
    // Gp = p with sum 1 solves exactly to (1, 1.85)/2.85
    auto pr = pagerank_power(google_matrix(dangling_pair()), {}, 1e-12);
    CHECK(pr.p(0) == doctest::Approx(1.0 / 2.85).epsilon(1e-9));
    CHECK(pr.p(1) == doctest::Approx(1.85 / 2.85).epsilon(1e-9));
  }

  SUBCASE("iteration count tracks log(tol)/log(alpha)") {
    auto pr =
        pagerank_power(google_matrix(random_graph(64, 2, 9), 0.85), {}, 1e-8);
    // alpha sets the contraction rate; a favorable start can beat the bound
    // by a constant factor but never exceeds it
    double predicted = std::log(1e-8) / std::log(0.85);  // ~113
    CHECK(pr.iterations > 10);
    CHECK(pr.iterations < predicted * 2);
  }

  SUBCASE("fixed point residual and positivity") {
    auto g = google_matrix(random_graph(48, 2, 11));
    auto pr = pagerank_power(g, {}, 1e-10);
    CHECK(pr.residual <= 1e-10);
    CHECK((g.m * pr.p - pr.p).lpNorm<1>() <= 1e-10);
    CHECK(pr.p.minCoeff() > 0.0);
    CHECK(pr.p.sum() == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("independent of the starting vector") {
    auto g = google_matrix(random_graph(32, 3, 13));
    auto a = pagerank_power(g, {}, 1e-11);
    Eigen::VectorXd p0 = Eigen::VectorXd::Zero(32);
    p0(5) = 1.0;
    auto b = pagerank_power(g, p0, 1e-11);
    CHECK((a.p - b.p).lpNorm<1>() <= 10 * 1e-11);
  }

  SUBCASE("matches the dense eigensolver oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto g = google_matrix(random_graph(64, 2, 100 + seed));
      auto pr = pagerank_power(g, {}, 1e-12);
      CHECK((pr.p - eigen_oracle(g)).lpNorm<1>() <= 1e-8);
    }
  }

  SUBCASE("max_iter exhaustion") {
    CHECK_THROWS_AS(
        pagerank_power(google_matrix(random_graph(32, 2, 15)), {}, 1e-12, 3),
        Error);
  }
}

TEST_CASE("stochasticity conservation") {
  auto g = google_matrix(random_graph(32, 2, 17));
  Eigen::VectorXd x = Eigen::VectorXd::Constant(32, 1.0 / 32);
  for (int k = 0; k < 20; ++k) {
    x = g.m * x;
    CHECK(x.lpNorm<1>() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pagerank_mcmc") {
  SUBCASE("tiny alpha gives the teleportation distribution") {
    McmcConfig cfg;
    cfg.alpha = 1e-9;
    cfg.num_walks = 200000;
    cfg.seed = 1;
    auto pr = pagerank_mcmc(random_graph(4, 1, 2), cfg);
    for (int i = 0; i < 4; ++i)
      CHECK(pr.p(i) == doctest::Approx(0.25).epsilon(0.05));
  }

  SUBCASE("dangling pair converges to the exact PageRank") {
    McmcConfig cfg;
    cfg.num_walks = 1000000;
    cfg.seed = 5;
    auto est = pagerank_mcmc(dangling_pair(), cfg);
    auto exact = pagerank_power(google_matrix(dangling_pair()), {}, 1e-12);
    CHECK((est.p - exact.p).lpNorm<1>() < 0.01);
  }

  SUBCASE("error decays like 1/sqrt(walks)") {
    auto g = random_graph(16, 2, 19);
    auto exact = pagerank_power(google_matrix(g), {}, 1e-12);
    std::vector<double> med_err;
    for (long walks : {1000L, 10000L, 100000L}) {
      std::vector<double> errs;
      for (std::uint64_t s = 0; s < 20; ++s) {
        McmcConfig cfg;
        cfg.num_walks = walks;
        cfg.seed = 100 + s;
        errs.push_back((pagerank_mcmc(g, cfg).p - exact.p).lpNorm<1>());
      }
      std::sort(errs.begin(), errs.end());
      med_err.push_back(errs[10]);
    }
    CHECK(med_err[0] > med_err[1]);
    CHECK(med_err[1] > med_err[2]);
    // each decade of walks should shave roughly sqrt(10) ~ 3.16
    CHECK(med_err[0] / med_err[2] > 4.0);
  }

  SUBCASE("validation") {
    McmcConfig cfg;
    cfg.num_walks = 0;
    CHECK_THROWS_AS(pagerank_mcmc(two_cycle(), cfg), Error);
  }
}

TEST_CASE("subdominant_eigenvalue") {
  SUBCASE("rank-one teleportation matrix") {
    CHECK(subdominant_eigenvalue(google_matrix(random_graph(8, 2, 23), 0.0)) ==
          doctest::Approx(0.0).epsilon(1e-10));
  }

  SUBCASE("2-cycle has eigenvalues 1 and -alpha") {
    CHECK(subdominant_eigenvalue(google_matrix(two_cycle(), 0.85)) ==
          doctest::Approx(0.85));
  }

  SUBCASE("bounded by alpha on random graphs") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto g = google_matrix(random_graph(64, 2, 300 + s), 0.85);
      CHECK(subdominant_eigenvalue(g) <= 0.85 + 1e-9);
    }
  }

  SUBCASE("size cap") {
    CHECK_THROWS_AS(
        subdominant_eigenvalue(google_matrix(random_graph(16, 2, 1)), 8),
        Error);
  }
}

TEST_CASE("inverse_pagerank") {
  SUBCASE("2-cycle is its own reverse") {
    auto pr = inverse_pagerank(two_cycle());
    CHECK(pr.p(0) == doctest::Approx(0.5));
    CHECK(pr.p(1) == doctest::Approx(0.5));
  }

  SUBCASE("dangling pair mirrors the forward result") {
    auto pr = inverse_pagerank(dangling_pair(), 0.85, {}, 1e-12);
    CHECK(pr.p(0) == doctest::Approx(1.85 / 2.85).epsilon(1e-9));
    CHECK(pr.p(1) == doctest::Approx(1.0 / 2.85).epsilon(1e-9));
  }

  SUBCASE("compositional identity") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      auto g = random_graph(32, 2, 400 + s);
      auto a = inverse_pagerank(g, 0.85, {}, 1e-11);
      auto b =
          pagerank_power(google_matrix(reverse_graph(g), 0.85), {}, 1e-11);
      CHECK((a.p - b.p).lpNorm<1>() <= 1e-14);
    }
  }
}
