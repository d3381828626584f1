// Copyright 2026 The knapqubo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "knapqubo/adiabatic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "knapqubo/errors.hpp"
#include "knapqubo/format.hpp"

namespace knapqubo {
namespace {

Complex Inner(const StateVector& a, const StateVector& b) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double SquaredNorm(const StateVector& a) {
  double sum = 0.0;
  for (const Complex& x : a) sum += std::norm(x);
  return sum;
}

// Replaces psi with exp(-i tau H(s)) psi using a Lanczos basis with full
// reorthogonalisation; the step is halved recursively when the Krylov
// error estimate does not reach tolerance within max_krylov vectors.
void KrylovPropagate(const AnnealProblem& problem, double s, double tau,
                     StateVector& psi, const EvolveOptions& options, int depth) {
  constexpr int kMaxDepth = 40;
  const std::size_t dim = psi.size();
  const double beta0 = std::sqrt(SquaredNorm(psi));
  if (beta0 == 0.0) return;

  std::vector<StateVector> basis;
  basis.emplace_back(psi);
  for (Complex& x : basis[0]) x /= beta0;
  std::vector<double> alpha;
  std::vector<double> beta;
  StateVector w(dim);
  const std::size_t max_krylov = std::min(options.max_krylov, dim);
  for (std::size_t j = 0; j < max_krylov; ++j) {
    problem.Apply(s, basis[j], w);
    alpha.push_back(Inner(basis[j], w).real());
    for (int pass = 0; pass < 2; ++pass) {
      for (const StateVector& q : basis) {
        const Complex c = Inner(q, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * q[i];
      }
    }
    const double next = std::sqrt(SquaredNorm(w));
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      tri(k, k) = alpha[static_cast<std::size_t>(k)];
      if (k + 1 < m) {
        tri(k, k + 1) = beta[static_cast<std::size_t>(k)];
        tri(k + 1, k) = beta[static_cast<std::size_t>(k)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tri);
    Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(m);
    for (Eigen::Index k = 0; k < m; ++k) {
      const Complex phase = std::exp(Complex(0.0, -tau * eig.eigenvalues()(k)));
      const double weight = eig.eigenvectors()(0, k);
      for (Eigen::Index r = 0; r < m; ++r) {
        coeff(r) += eig.eigenvectors()(r, k) * phase * weight;
      }
    }
    const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
    const double error = next * std::abs(coeff(m - 1));
    const bool invariant = next <= 1e-14 * scale;
    if (invariant || error <= options.krylov_tolerance ||
        static_cast<std::size_t>(m) == dim) {
      std::fill(psi.begin(), psi.end(), Complex(0.0));
      for (Eigen::Index k = 0; k < m; ++k) {
        const Complex c = beta0 * coeff(k);
        const StateVector& q = basis[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < dim; ++i) psi[i] += c * q[i];
      }
      return;
    }
    beta.push_back(next);
    basis.emplace_back(w);
    for (Complex& x : basis.back()) x /= next;
  }
  if (depth >= kMaxDepth) {
    throw NumericalError("Krylov propagator failed to converge (s = " +
                         FormatDouble(s) + ")");
  }
  KrylovPropagate(problem, s, tau / 2, psi, options, depth + 1);
  KrylovPropagate(problem, s, tau / 2, psi, options, depth + 1);
}

}  // namespace

AnnealProblem::AnnealProblem(QuboProblem qubo) : qubo_(std::move(qubo)) {
  const std::size_t n = qubo_.dimension();
  if (n > kGapScanMaxQubits) {
    throw SizeLimitError("adiabatic simulation limited to n <= " +
                         std::to_string(kGapScanMaxQubits) +
                         " qubits, got n = " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  energies_.resize(dim);
  ForEachEnergy(qubo_, [&](std::uint64_t mask, std::int64_t energy) {
    energies_[mask] = energy;
  });
  diagonal_.resize(dim);
  ground_energy_ = *std::min_element(energies_.begin(), energies_.end());
  for (std::size_t x = 0; x < dim; ++x) {
    diagonal_[x] = static_cast<double>(energies_[x]);
    energy_scale_ = std::max(energy_scale_, std::abs(diagonal_[x]));
    if (energies_[x] == ground_energy_) ground_indices_.push_back(x);
  }
}

template <typename T>
void AnnealProblem::ApplyImpl(double s, std::span<const T> psi,
                              std::span<T> out) const {
  const std::size_t dim = dimension();
  if (psi.size() != dim || out.size() != dim) {
    throw ValidationError("state vector dimension " + std::to_string(psi.size()) +
                          " != 2^n = " + std::to_string(dim));
  }
  const std::size_t n = num_qubits();
  const double driver = 1.0 - s;
  for (std::size_t x = 0; x < dim; ++x) {
    T flips = T(0.0);
    for (std::size_t k = 0; k < n; ++k) flips += psi[x ^ (std::size_t{1} << k)];
    out[x] = s * diagonal_[x] * psi[x] - driver * flips;
  }
}

void AnnealProblem::Apply(double s, std::span<const double> psi,
                          std::span<double> out) const {
  ApplyImpl<double>(s, psi, out);
}

void AnnealProblem::Apply(double s, std::span<const Complex> psi,
                          std::span<Complex> out) const {
  ApplyImpl<Complex>(s, psi, out);
}

GapProfile GapScan(const AnnealProblem& problem, std::size_t grid_points,
                   const GapScanOptions& options) {
  if (grid_points < 2) {
    throw ValidationError("gap scan needs at least 2 grid points to span [0, 1]");
  }
  GapProfile profile;
  std::vector<std::vector<double>> warm;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const LinearOperator op = [&](std::span<const double> x, std::span<double> y) {
      problem.Apply(s, x, y);
    };
    EigenResult eig = LowestEigenpairs(problem.dimension(), op, 2,
                                       options.eigensolver, warm);
    if (!eig.converged) {
      throw NumericalError("gap scan: eigensolver did not converge at grid point " +
                           std::to_string(i) + " (s = " + FormatDouble(s) +
                           ") after " + std::to_string(eig.restarts) + " restarts");
    }
    double gap = eig.values[1] - eig.values[0];
    if (gap < options.degeneracy_tolerance) gap = 0.0;
    profile.grid.push_back(s);
    profile.gaps.push_back(gap);
    profile.ground_energies.push_back(eig.values[0]);
    if (i == 0 || gap < profile.min_gap) {
      profile.min_gap = gap;
      profile.argmin = s;
    }
    warm = std::move(eig.vectors);
  }
  return profile;
}

EvolutionResult Evolve(const AnnealProblem& problem, double anneal_time, double dt,
                       const EvolveOptions& options) {
  if (problem.num_qubits() > kEvolveMaxQubits) {
    throw SizeLimitError("time evolution limited to n <= " +
                         std::to_string(kEvolveMaxQubits) + " qubits, got n = " +
                         std::to_string(problem.num_qubits()));
  }
  if (!(anneal_time > 0.0) || !std::isfinite(anneal_time)) {
    throw ValidationError("anneal time T must be positive");
  }
  if (!(dt > 0.0) || dt > anneal_time) {
    throw ValidationError("time step must satisfy 0 < dt <= T");
  }
  const std::size_t dim = problem.dimension();
  const auto steps =
      static_cast<std::size_t>(std::ceil(anneal_time / dt - 1e-9));
  const double h = anneal_time / static_cast<double>(steps);

  // Gauss nodes and weights of the two-exponential commutator-free scheme.
  const double root3 = std::sqrt(3.0);
  const double c1 = 0.5 - root3 / 6.0;
  const double c2 = 0.5 + root3 / 6.0;
  const double a1 = (3.0 - 2.0 * root3) / 12.0;
  const double a2 = (3.0 + 2.0 * root3) / 12.0;

  StateVector psi(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  double drift = 0.0;
  for (std::size_t step = 0; step < steps; ++step) {
    const double t = static_cast<double>(step) * h;
    const double s1 = (t + c1 * h) / anneal_time;
    const double s2 = (t + c2 * h) / anneal_time;
    // H is affine in s, so a2 H(s1) + a1 H(s2) = H(2 (a2 s1 + a1 s2)) / 2.
    KrylovPropagate(problem, 2.0 * (a2 * s1 + a1 * s2), h / 2.0, psi, options, 0);
    KrylovPropagate(problem, 2.0 * (a1 * s1 + a2 * s2), h / 2.0, psi, options, 0);
    drift = std::abs(1.0 - SquaredNorm(psi));
    if (drift > options.abort_drift) {
      throw NumericalError("norm drift " + FormatDouble(drift) +
                           " exceeds the abort threshold at step " +
                           std::to_string(step) + "; reduce dt");
    }
    if (options.observer) {
      options.observer(static_cast<double>(step + 1) / static_cast<double>(steps), psi);
    }
  }

  EvolutionResult result;
  result.anneal_time = anneal_time;
  result.steps = steps;
  result.norm_drift = drift;
  for (std::size_t x : problem.ground_indices()) {
    result.success_probability += std::norm(psi[x]);
  }
  result.final_state = std::move(psi);
  return result;
}

std::vector<SuccessPoint> SuccessCurve(const AnnealProblem& problem,
                                       std::span<const double> anneal_times,
                                       double dt, const EvolveOptions& options) {
  std::vector<SuccessPoint> curve;
  curve.reserve(anneal_times.size());
  for (double anneal_time : anneal_times) {
    // Short anneals use a single step when dt exceeds T.
    const EvolutionResult r =
        Evolve(problem, anneal_time, std::min(dt, anneal_time), options);
    curve.push_back({anneal_time, r.success_probability, r.norm_drift});
  }
  return curve;
}

double SuggestedTimeStep(const AnnealProblem& problem) {
  return 1.0 / (problem.final_energy_scale() +
                static_cast<double>(problem.num_qubits()));
}

std::string GapProfileCsv(const GapProfile& profile) {
  std::ostringstream out;
  out << "s,gap\n";
  for (std::size_t i = 0; i < profile.grid.size(); ++i) {
    out << FormatDouble(profile.grid[i]) << "," << FormatDouble(profile.gaps[i])
        << "\n";
  }
  return out.str();
}

std::string SuccessCurveCsv(const std::vector<SuccessPoint>& curve) {
  std::ostringstream out;
  out << "T,success_probability,norm_drift\n";
  for (const SuccessPoint& p : curve) {
    out << FormatDouble(p.anneal_time) << "," << FormatDouble(p.success_probability)
        << "," << FormatDouble(p.norm_drift) << "\n";
  }
  return out.str();
}

}  // namespace knapqubo
