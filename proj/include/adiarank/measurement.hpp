#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "adiarank/googlerank.hpp"

namespace adiarank {

// Amplitudes p_i / ||p||_2; measurement probabilities pi_i = p_i^2 / ||p||_2^2.
struct QuantumPageRankState {
  Eigen::VectorXd amplitudes;
  Eigen::VectorXd probabilities;

  int size() const { return static_cast<int>(amplitudes.size()); }
};

struct MeasurementRecord {
  long shots = 0;
  std::vector<long> counts;
  std::uint64_t seed = 0;

  Eigen::VectorXd empirical() const;
};

struct RankCostReport {
  struct Site {
    int site;
    double gamma;             // pi_i = n^-gamma
    double quantum_exponent;  // 2*gamma - 1
    double classical_exponent;
    bool speedup;             // gamma < 1
  };
  std::vector<Site> sites;
};

struct SwapTestResult {
  long shots = 0;
  long zero_outcomes = 0;
  double fidelity_estimate = 0.0;  // max(0, 2*zeros/shots - 1)
  double exact_fidelity = 0.0;     // |<A|B>|^2
};

QuantumPageRankState quantum_state_from_pagerank(const PageRankVector& p);
QuantumPageRankState quantum_state_from_pagerank(const Eigen::VectorXd& p);

MeasurementRecord sample_sites(const QuantumPageRankState& state, long shots,
                               std::uint64_t seed);

// Two-sided Hoeffding budget: M = ceil(ln(2/(1-confidence)) / (2 e^2)).
long hoeffding_shots(double e, double confidence);

// Sites by descending empirical frequency, ties to the lower index.
std::vector<int> estimate_top_k(const MeasurementRecord& record, int k);
std::vector<int> top_k_exact(const QuantumPageRankState& state, int k);

RankCostReport rank_cost_report(const QuantumPageRankState& state);

SwapTestResult swap_test(const QuantumPageRankState& a,
                         const QuantumPageRankState& b, long shots,
                         std::uint64_t seed);

void write_measurement_csv(const MeasurementRecord& record, std::ostream& out);
void write_measurement_csv(const MeasurementRecord& record,
                           const std::string& path);

// Single "shots=... zeros=... f_hat=... f_exact=..." line.
void write_swap_result(const SwapTestResult& r, std::ostream& out);

}  // namespace adiarank
