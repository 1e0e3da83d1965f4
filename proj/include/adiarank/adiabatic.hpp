#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "adiarank/googlerank.hpp"

namespace adiarank {

// Real symmetric operators throughout; complex amplitudes only in evolution.
using HermitianOperator = Eigen::MatrixXd;
using QuantumState = Eigen::VectorXcd;

// Interpolation endpoints h(s) = (1-s) h_i + s h_p, both PSD with ground
// energy 0.
struct AdiabaticProblem {
  HermitianOperator h_i;
  HermitianOperator h_p;

  int size() const { return static_cast<int>(h_i.rows()); }
};

struct Schedule {
  enum class Kind { linear, smooth };
  Kind kind = Kind::linear;
  int boundary_order = 1;  // vanishing derivatives at both ends (smooth)
  double total_time = 1.0;

  // s(t) for t in [0, T]; monotone, s(0)=0, s(T)=1.
  double s_at(double t) const;
};

struct SpectralScan {
  std::vector<std::pair<double, double>> grid;  // (s, gap)
  double delta_min = 0.0;
  double s_star = 0.0;
};

struct SpinHamiltonianTerms {
  struct Diagonal {
    int site;
    double coeff;
  };
  struct Hopping {
    int i, j;  // i < j
    double coeff;
  };
  int n = 0;
  std::vector<Diagonal> diagonal;
  std::vector<Hopping> hopping;
};

// h^(p) = (I - G)^T (I - G); ground state is the L2-normalized PageRank.
HermitianOperator problem_hamiltonian(const GoogleMatrix& g);

// h^(i) from the Google matrix of the complete graph. With self-loops (the
// default convention) G_c = e e^T / n and h^(i) = I - e e^T / n.
HermitianOperator initial_hamiltonian(int n, double alpha = 0.85,
                                      bool complete_with_self_loops = true);

AdiabaticProblem make_problem(const GoogleMatrix& g,
                              bool complete_with_self_loops = true);

HermitianOperator interpolate(const AdiabaticProblem& prob, double s);

// Spectral norm of h^(p) - h^(i) = max_s ||dh/ds||.
double lambda_norm(const AdiabaticProblem& prob);

// E1(s) - E0(s).
double gap_at(const AdiabaticProblem& prob, double s);

SpectralScan gap_scan(const AdiabaticProblem& prob, int grid_points = 64,
                      double refine_tol = 1e-6);

// Unit eigenvector of the smallest eigenvalue, largest-magnitude entry made
// positive. Throws DegenerateGround below gap 1e-12.
Eigen::VectorXd ground_state(const HermitianOperator& h);

QuantumState uniform_state(int n);

struct EvolveOptions {
  int steps_per_unit = 10;   // steps per unit of time * max endpoint norm
  int evolution_cap = 256;   // refuse larger systems
  bool check_steps = false;  // rerun at half step, throw StepTooCoarse on
                             // fidelity drift > 1e-4
};

// Observer invoked as (t, s, psi) at each accepted step (and t=0).
using EvolveObserver =
    std::function<void(double, double, const QuantumState&)>;

QuantumState evolve(const AdiabaticProblem& prob, const Schedule& schedule,
                    const EvolveOptions& opts = {},
                    const EvolveObserver& observer = nullptr);

// f = |<psi|target>|, eps = sqrt(1 - f^2).
std::pair<double, double> fidelity_and_error(const QuantumState& psi,
                                             const Eigen::VectorXd& target);
std::pair<double, double> fidelity_and_error(const QuantumState& psi,
                                             const QuantumState& target);

// T = a * Lambda^(b-1) / (eta * delta^b).
double runtime_bound(double lambda, double delta, double eta, int a, int b);

// T = eps^-2 (ln ln n)^(b-1) (ln n)^b, natural logs.
double predicted_runtime(int n, double eps, int b);

SpinHamiltonianTerms spin_terms(const HermitianOperator& h);
HermitianOperator single_excitation_block(const SpinHamiltonianTerms& terms);

// Full 2^n x 2^n spin operator on the qubit basis (bit i = excitation at
// site i); n <= 14.
Eigen::MatrixXd full_space_operator(const SpinHamiltonianTerms& terms);

// Largest |entry| between basis states of different excitation number; an
// exact 0 certifies block-diagonality.
double max_cross_sector_entry(const Eigen::MatrixXd& full, int n);

// Rows/cols of the single-excitation sector, ordered by site.
HermitianOperator extract_one_excitation_block(const Eigen::MatrixXd& full,
                                               int n);

// Scan CSV "s,gap" plus trailing "# delta=... s_star=..." comment.
void write_scan_csv(const SpectralScan& scan, std::ostream& out);
void write_scan_csv(const SpectralScan& scan, const std::string& path);

}  // namespace adiarank
