#include "adiarank/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "adiarank/rng.hpp"

namespace adiarank {

Eigen::VectorXd MeasurementRecord::empirical() const {
  Eigen::VectorXd f(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    f(i) = static_cast<double>(counts[i]) / shots;
  return f;
}

QuantumPageRankState quantum_state_from_pagerank(const Eigen::VectorXd& p) {
  if (p.size() == 0 || p.minCoeff() < 0.0 || p.norm() == 0.0)
    throw Error(ErrorCode::invalid_param,
                "input must be a nonzero vector with nonnegative entries");
  QuantumPageRankState state;
  state.amplitudes = p / p.norm();
  state.probabilities = state.amplitudes.array().square();
  return state;
}

QuantumPageRankState quantum_state_from_pagerank(const PageRankVector& p) {
  return quantum_state_from_pagerank(p.p);
}

namespace {

// CDF inversion keeps sampling identical across library implementations.
int draw_site(const Eigen::VectorXd& probs, double u) {
  double acc = 0.0;
  const int n = static_cast<int>(probs.size());
  for (int i = 0; i < n; ++i) {
    acc += probs(i);
    if (u < acc) return i;
  }
  return n - 1;
}

}  // namespace

MeasurementRecord sample_sites(const QuantumPageRankState& state, long shots,
                               std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorCode::invalid_param, "shots must be >= 1");
  MeasurementRecord rec;
  rec.shots = shots;
  rec.seed = seed;
  rec.counts.assign(state.size(), 0);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (long s = 0; s < shots; ++s)
    rec.counts[draw_site(state.probabilities, unif(rng))]++;
  return rec;
}

long hoeffding_shots(double e, double confidence) {
  if (e <= 0.0 || e >= 1.0)
    throw Error(ErrorCode::invalid_param, "e must be in (0, 1)");
  if (confidence <= 0.0 || confidence >= 1.0)
    throw Error(ErrorCode::invalid_param, "confidence must be in (0, 1)");
  return static_cast<long>(
      std::ceil(std::log(2.0 / (1.0 - confidence)) / (2.0 * e * e)));
}

namespace {

std::vector<int> rank_descending(const Eigen::VectorXd& score, int k) {
  std::vector<int> order(score.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (score(a) != score(b)) return score(a) > score(b);
    return a < b;  // ties to the lower site index
  });
  order.resize(std::min<std::size_t>(order.size(), k));
  return order;
}

}  // namespace

std::vector<int> estimate_top_k(const MeasurementRecord& record, int k) {
  if (k < 1 || k > static_cast<int>(record.counts.size()))
    throw Error(ErrorCode::invalid_param, "k must be in [1, site count]");
  return rank_descending(record.empirical(), k);
}

std::vector<int> top_k_exact(const QuantumPageRankState& state, int k) {
  if (k < 1 || k > state.size())
    throw Error(ErrorCode::invalid_param, "k must be in [1, site count]");
  return rank_descending(state.probabilities, k);
}

RankCostReport rank_cost_report(const QuantumPageRankState& state) {
  const int n = state.size();
  if (n < 2)
    throw Error(ErrorCode::degenerate_scale, "cost exponents need n >= 2");
  if (state.probabilities.minCoeff() <= 0.0)
    throw Error(ErrorCode::invalid_param, "all pi_i must be positive");
  RankCostReport report;
  const double ln_n = std::log(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    double gamma = -std::log(state.probabilities(i)) / ln_n;
    report.sites.push_back(
        {i, gamma, 2.0 * gamma - 1.0, gamma, gamma < 1.0});
  }
  return report;
}

SwapTestResult swap_test(const QuantumPageRankState& a,
                         const QuantumPageRankState& b, long shots,
                         std::uint64_t seed) {
  if (a.size() != b.size())
    throw Error(ErrorCode::dimension_mismatch, "state dimensions differ");
  if (shots < 1) throw Error(ErrorCode::invalid_param, "shots must be >= 1");

  SwapTestResult r;
  r.shots = shots;
  double overlap = a.amplitudes.dot(b.amplitudes);
  r.exact_fidelity = overlap * overlap;

  const double p_zero = 0.5 * (1.0 + r.exact_fidelity);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (long s = 0; s < shots; ++s)
    if (unif(rng) < p_zero) r.zero_outcomes++;

  r.fidelity_estimate =
      std::max(0.0, 2.0 * static_cast<double>(r.zero_outcomes) / shots - 1.0);
  return r;
}

void write_measurement_csv(const MeasurementRecord& record, std::ostream& out) {
  out << "site,count\n";
  for (std::size_t i = 0; i < record.counts.size(); ++i)
    out << i << "," << record.counts[i] << "\n";
}

void write_measurement_csv(const MeasurementRecord& record,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for write: " + path);
  write_measurement_csv(record, out);
}

void write_swap_result(const SwapTestResult& r, std::ostream& out) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "shots=%ld zeros=%ld f_hat=%.17g f_exact=%.17g", r.shots,
                r.zero_outcomes, r.fidelity_estimate, r.exact_fidelity);
  out << buf << "\n";
}

}  // namespace adiarank
