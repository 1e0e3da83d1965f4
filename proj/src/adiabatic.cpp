#include "adiarank/adiabatic.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>

namespace adiarank {

namespace {

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::eigen_failure, "symmetric eigensolver failed");
  return es.eigenvalues();
}

double spectral_norm(const Eigen::MatrixXd& h) {
  auto ev = symmetric_eigenvalues(h);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

// Integral of x^a (1-x)^a over [0, u], by binomial expansion; used for the
// smooth schedule with a vanishing derivatives at both endpoints.
double poly_boundary_integral(double u, int a) {
  double sum = 0.0;
  double binom = 1.0;  // C(a, k)
  for (int k = 0; k <= a; ++k) {
    double term = binom * std::pow(u, a + k + 1) / (a + k + 1);
    sum += (k % 2 == 0) ? term : -term;
    binom = binom * (a - k) / (k + 1);
  }
  return sum;
}

}  // namespace

double Schedule::s_at(double t) const {
  if (total_time <= 0.0)
    throw Error(ErrorCode::invalid_param, "total_time must be > 0");
  double u = std::clamp(t / total_time, 0.0, 1.0);
  if (kind == Kind::linear) return u;
  if (boundary_order < 1)
    throw Error(ErrorCode::invalid_param, "boundary_order must be >= 1");
  return poly_boundary_integral(u, boundary_order) /
         poly_boundary_integral(1.0, boundary_order);
}

HermitianOperator problem_hamiltonian(const GoogleMatrix& g) {
  const int n = g.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Identity(n, n) - g.m;
  Eigen::MatrixXd h = d.transpose() * d;
  return 0.5 * (h + h.transpose());  // scrub roundoff asymmetry
}

HermitianOperator initial_hamiltonian(int n, double alpha,
                                      bool complete_with_self_loops) {
  if (n < 1) throw Error(ErrorCode::invalid_param, "n must be >= 1");
  if (complete_with_self_loops) {
    // G_c = e e^T / n regardless of alpha; h^(i) is the projector
    // orthogonal to the uniform state.
    Eigen::MatrixXd h = -Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    h.diagonal().array() += 1.0;
    return h;
  }
  return problem_hamiltonian(
      google_matrix(complete_graph(n, false), alpha));
}

AdiabaticProblem make_problem(const GoogleMatrix& g,
                              bool complete_with_self_loops) {
  return {initial_hamiltonian(g.size(), g.alpha, complete_with_self_loops),
          problem_hamiltonian(g)};
}

HermitianOperator interpolate(const AdiabaticProblem& prob, double s) {
  if (s < 0.0 || s > 1.0)
    throw Error(ErrorCode::s_out_of_range,
                "s = " + std::to_string(s) + " outside [0, 1]");
  return (1.0 - s) * prob.h_i + s * prob.h_p;
}

double lambda_norm(const AdiabaticProblem& prob) {
  return spectral_norm(prob.h_p - prob.h_i);
}

double gap_at(const AdiabaticProblem& prob, double s) {
  auto ev = symmetric_eigenvalues(interpolate(prob, s));
  if (ev.size() < 2) return 0.0;
  return ev(1) - ev(0);
}

SpectralScan gap_scan(const AdiabaticProblem& prob, int grid_points,
                      double refine_tol) {
  if (grid_points < 8)
    throw Error(ErrorCode::invalid_param, "grid_points must be >= 8");

  SpectralScan scan;
  scan.grid.reserve(grid_points);
  int min_idx = 0;
  for (int k = 0; k < grid_points; ++k) {
    double s = static_cast<double>(k) / (grid_points - 1);
    double gap = gap_at(prob, s);
    scan.grid.push_back({s, gap});
    if (gap < scan.grid[min_idx].second) min_idx = k;
  }

  // golden-section refinement on the bracket around the grid minimum
  double lo = scan.grid[std::max(0, min_idx - 1)].first;
  double hi = scan.grid[std::min(grid_points - 1, min_idx + 1)].first;
  double best_s = scan.grid[min_idx].first;
  double best_gap = scan.grid[min_idx].second;

  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = gap_at(prob, x1), f2 = gap_at(prob, x2);
  while (b - a > refine_tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = gap_at(prob, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = gap_at(prob, x2);
    }
    if (f1 < best_gap) best_gap = f1, best_s = x1;
    if (f2 < best_gap) best_gap = f2, best_s = x2;
  }

  scan.delta_min = best_gap;
  scan.s_star = best_s;
  return scan;
}

Eigen::VectorXd ground_state(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::eigen_failure, "symmetric eigensolver failed");
  const auto& ev = es.eigenvalues();
  if (ev.size() >= 2 && ev(1) - ev(0) < 1e-12)
    throw Error(ErrorCode::degenerate_ground,
                "ground gap below 1e-12: " + std::to_string(ev.size() >= 2
                                                                ? ev(1) - ev(0)
                                                                : 0.0));
  Eigen::VectorXd psi = es.eigenvectors().col(0);
  Eigen::Index imax;
  psi.array().abs().maxCoeff(&imax);
  if (psi(imax) < 0) psi = -psi;
  return psi;
}

QuantumState uniform_state(int n) {
  return Eigen::VectorXcd::Constant(n, std::complex<double>(
                                           1.0 / std::sqrt(double(n)), 0.0));
}

namespace {

QuantumState evolve_fixed_steps(const AdiabaticProblem& prob,
                                const Schedule& schedule, long steps,
                                const EvolveObserver& observer) {
  const double T = schedule.total_time;
  const double dt = T / steps;
  QuantumState psi = uniform_state(prob.size());
  if (observer) observer(0.0, schedule.s_at(0.0), psi);

  const std::complex<double> minus_i(0.0, -1.0);
  for (long k = 0; k < steps; ++k) {
    double t_mid = (k + 0.5) * dt;
    Eigen::MatrixXd h = interpolate(prob, schedule.s_at(t_mid));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success)
      throw Error(ErrorCode::eigen_failure, "eigendecomposition in evolve");
    // psi <- V exp(-i w dt) V^T psi
    Eigen::VectorXcd coeffs = es.eigenvectors().transpose() * psi;
    coeffs.array() *=
        (minus_i * dt * es.eigenvalues().array().cast<std::complex<double>>())
            .exp();
    psi = es.eigenvectors() * coeffs;
    if (observer) observer((k + 1) * dt, schedule.s_at((k + 1) * dt), psi);
  }
  return psi;
}

}  // namespace

QuantumState evolve(const AdiabaticProblem& prob, const Schedule& schedule,
                    const EvolveOptions& opts, const EvolveObserver& observer) {
  const int n = prob.size();
  if (n > opts.evolution_cap)
    throw Error(ErrorCode::size_cap,
                "evolution capped at n = " + std::to_string(opts.evolution_cap));
  if (opts.steps_per_unit < 1)
    throw Error(ErrorCode::invalid_param, "steps_per_unit must be >= 1");

  const double scale =
      std::max(spectral_norm(prob.h_i), spectral_norm(prob.h_p));
  const double T = schedule.total_time;
  long steps = std::max<long>(
      1, static_cast<long>(std::ceil(T * opts.steps_per_unit *
                                     std::max(scale, 1e-12))));

  QuantumState psi = evolve_fixed_steps(prob, schedule, steps, observer);

  if (opts.check_steps) {
    QuantumState fine = evolve_fixed_steps(prob, schedule, 2 * steps, nullptr);
    Eigen::VectorXd target = ground_state(prob.h_p);
    double f_coarse = fidelity_and_error(psi, target).first;
    double f_fine = fidelity_and_error(fine, target).first;
    if (std::abs(f_coarse - f_fine) > 1e-4)
      throw Error(ErrorCode::step_too_coarse,
                  "fidelity drift " + std::to_string(f_coarse - f_fine) +
                      " at halved step; raise steps_per_unit");
  }
  return psi;
}

std::pair<double, double> fidelity_and_error(const QuantumState& psi,
                                             const QuantumState& target) {
  if (psi.size() != target.size())
    throw Error(ErrorCode::dimension_mismatch, "state dimensions differ");
  double f = std::abs(psi.dot(target));
  f = std::min(f, 1.0);
  return {f, std::sqrt(std::max(0.0, 1.0 - f * f))};
}

std::pair<double, double> fidelity_and_error(const QuantumState& psi,
                                             const Eigen::VectorXd& target) {
  return fidelity_and_error(psi,
                            QuantumState(target.cast<std::complex<double>>()));
}

double runtime_bound(double lambda, double delta, double eta, int a, int b) {
  if (lambda <= 0 || delta <= 0 || eta <= 0 || a < 1 || b < 1)
    throw Error(ErrorCode::invalid_param,
                "runtime bound needs positive Lambda, delta, eta and a,b >= 1");
  return a * std::pow(lambda, b - 1) / (eta * std::pow(delta, b));
}

double predicted_runtime(int n, double eps, int b) {
  if (n < 3) throw Error(ErrorCode::invalid_param, "n must be >= 3");
  if (eps <= 0.0 || eps >= 1.0)
    throw Error(ErrorCode::invalid_param, "eps must be in (0, 1)");
  if (b < 1) throw Error(ErrorCode::invalid_param, "b must be >= 1");
  const double ln_n = std::log(static_cast<double>(n));
  return std::pow(eps, -2.0) * std::pow(std::log(ln_n), b - 1) *
         std::pow(ln_n, b);
}

SpinHamiltonianTerms spin_terms(const HermitianOperator& h) {
  const int n = static_cast<int>(h.rows());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorCode::invalid_param, "spin_terms needs a symmetric matrix");
  SpinHamiltonianTerms terms;
  terms.n = n;
  for (int i = 0; i < n; ++i)
    if (h(i, i) != 0.0) terms.diagonal.push_back({i, h(i, i)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (h(i, j) != 0.0) terms.hopping.push_back({i, j, h(i, j)});
  return terms;
}

HermitianOperator single_excitation_block(const SpinHamiltonianTerms& terms) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(terms.n, terms.n);
  for (const auto& d : terms.diagonal) h(d.site, d.site) = d.coeff;
  for (const auto& t : terms.hopping) {
    h(t.i, t.j) = t.coeff;
    h(t.j, t.i) = t.coeff;
  }
  return h;
}

Eigen::MatrixXd full_space_operator(const SpinHamiltonianTerms& terms) {
  const int n = terms.n;
  if (n > 14)
    throw Error(ErrorCode::size_cap, "full-space operator capped at n = 14");
  const long dim = 1L << n;
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(dim, dim);
  for (long state = 0; state < dim; ++state) {
    double diag = 0.0;
    for (const auto& d : terms.diagonal)
      if (state & (1L << d.site)) diag += d.coeff;
    big(state, state) = diag;
    // sigma+_i sigma-_j moves an excitation j -> i (and hermitian partner)
    for (const auto& t : terms.hopping) {
      bool has_i = state & (1L << t.i);
      bool has_j = state & (1L << t.j);
      if (has_j && !has_i) {
        long flipped = (state & ~(1L << t.j)) | (1L << t.i);
        big(flipped, state) += t.coeff;
        big(state, flipped) += t.coeff;
      }
    }
  }
  return big;
}

double max_cross_sector_entry(const Eigen::MatrixXd& full, int n) {
  const long dim = 1L << n;
  if (full.rows() != dim || full.cols() != dim)
    throw Error(ErrorCode::dimension_mismatch, "operator is not 2^n x 2^n");
  double worst = 0.0;
  for (long r = 0; r < dim; ++r) {
    int pr = __builtin_popcountll(r);
    for (long c = 0; c < dim; ++c) {
      if (__builtin_popcountll(c) != pr)
        worst = std::max(worst, std::abs(full(r, c)));
    }
  }
  return worst;
}

HermitianOperator extract_one_excitation_block(const Eigen::MatrixXd& full,
                                               int n) {
  const long dim = 1L << n;
  if (full.rows() != dim || full.cols() != dim)
    throw Error(ErrorCode::dimension_mismatch, "operator is not 2^n x 2^n");
  Eigen::MatrixXd block(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) block(i, j) = full(1L << i, 1L << j);
  return block;
}

void write_scan_csv(const SpectralScan& scan, std::ostream& out) {
  out << "s,gap\n";
  char buf[80];
  for (const auto& [s, gap] : scan.grid) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", s, gap);
    out << buf << "\n";
  }
  std::snprintf(buf, sizeof(buf), "# delta=%.17g s_star=%.17g", scan.delta_min,
                scan.s_star);
  out << buf << "\n";
}

void write_scan_csv(const SpectralScan& scan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for write: " + path);
  write_scan_csv(scan, out);
}

}  // namespace adiarank
