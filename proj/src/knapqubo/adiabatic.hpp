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

#ifndef KNAPQUBO_ADIABATIC_HPP_
#define KNAPQUBO_ADIABATIC_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "knapqubo/eigensolver.hpp"
#include "knapqubo/qubo.hpp"

namespace knapqubo {

inline constexpr std::size_t kGapScanMaxQubits = 20;
inline constexpr std::size_t kEvolveMaxQubits = 16;

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

// H(s) = (1 - s) H_i + s H_f on 2^n amplitudes, where H_i = -sum_k sigma_x^(k)
// and H_f is diagonal with entry energy(qubo, z) at basis index
// sum_k z_k 2^k. Applied matrix-free.
class AnnealProblem {
 public:
  // Throws SizeLimitError above kGapScanMaxQubits qubits.
  explicit AnnealProblem(QuboProblem qubo);

  const QuboProblem& qubo() const { return qubo_; }
  std::size_t num_qubits() const { return qubo_.dimension(); }
  std::size_t dimension() const { return energies_.size(); }

  const std::vector<std::int64_t>& final_energies() const { return energies_; }
  std::int64_t ground_energy() const { return ground_energy_; }
  // Basis indices attaining ground_energy(), ascending.
  const std::vector<std::size_t>& ground_indices() const { return ground_indices_; }
  // max |energy(qubo, z)| over all z.
  double final_energy_scale() const { return energy_scale_; }

  void Apply(double s, std::span<const double> psi, std::span<double> out) const;
  void Apply(double s, std::span<const Complex> psi, std::span<Complex> out) const;

 private:
  template <typename T>
  void ApplyImpl(double s, std::span<const T> psi, std::span<T> out) const;

  QuboProblem qubo_;
  std::vector<std::int64_t> energies_;
  std::vector<double> diagonal_;
  std::int64_t ground_energy_ = 0;
  std::vector<std::size_t> ground_indices_;
  double energy_scale_ = 0.0;
};

struct GapProfile {
  std::vector<double> grid;
  std::vector<double> gaps;
  std::vector<double> ground_energies;
  double min_gap = 0.0;
  double argmin = 0.0;
};

struct GapScanOptions {
  EigensolverOptions eigensolver;
  // Gaps below this are reported as exactly zero (degenerate ground level).
  double degeneracy_tolerance = 1e-8;
};

// E_1(s) - E_0(s) on a uniform grid of `grid_points` >= 2 values of s over
// [0, 1]. Throws NumericalError naming the grid point if the eigensolver
// does not converge.
GapProfile GapScan(const AnnealProblem& problem, std::size_t grid_points,
                   const GapScanOptions& options = {});

struct EvolutionResult {
  double anneal_time = 0.0;
  StateVector final_state;
  double success_probability = 0.0;
  double norm_drift = 0.0;
  std::size_t steps = 0;
};

struct EvolveOptions {
  // Tolerance on the Krylov error estimate of each exponential.
  double krylov_tolerance = 1e-12;
  std::size_t max_krylov = 40;
  // Evolution aborts with NumericalError beyond this drift.
  double abort_drift = 1e-3;
  // Called after every step with s = t / T and the current state.
  std::function<void(double s, std::span<const Complex> psi)> observer;
};

// Integrates i d(psi)/dt = H(t/T) psi from the uniform superposition with
// the fourth-order commutator-free exponential integrator; each exponential
// is a Lanczos (Krylov) propagator. The state is never renormalised, so
// norm_drift = |1 - ||psi||^2| reports the accumulated integration error.
EvolutionResult Evolve(const AnnealProblem& problem, double anneal_time, double dt,
                       const EvolveOptions& options = {});

struct SuccessPoint {
  double anneal_time = 0.0;
  double success_probability = 0.0;
  double norm_drift = 0.0;
};

std::vector<SuccessPoint> SuccessCurve(const AnnealProblem& problem,
                                       std::span<const double> anneal_times,
                                       double dt, const EvolveOptions& options = {});

// Step size at which one step of H_f accumulates about one radian of phase;
// larger steps trigger a CLI warning.
double SuggestedTimeStep(const AnnealProblem& problem);

// CSV exports: `s,gap` and `T,success_probability,norm_drift`.
std::string GapProfileCsv(const GapProfile& profile);
std::string SuccessCurveCsv(const std::vector<SuccessPoint>& curve);

}  // namespace knapqubo

#endif  // KNAPQUBO_ADIABATIC_HPP_
