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

#include "knapqubo/eigensolver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "knapqubo/errors.hpp"
#include "knapqubo/rng.hpp"

namespace knapqubo {
namespace {

using Vector = std::vector<double>;

double Dot(const Vector& a, const Vector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double Norm(const Vector& a) { return std::sqrt(Dot(a, a)); }

void Axpy(double alpha, const Vector& x, Vector& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

// Orthogonalises `v` against `basis` with two Gram-Schmidt passes and
// normalises it. Returns false when `v` is numerically inside span(basis).
bool OrthonormalizeAgainst(const std::vector<Vector>& basis, Vector& v) {
  const double original = Norm(v);
  if (original == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& q : basis) Axpy(-Dot(q, v), q, v);
  }
  const double norm = Norm(v);
  if (norm <= 1e-10 * original) return false;
  for (double& x : v) x /= norm;
  return true;
}

std::size_t DefaultBasis(std::size_t dimension, std::size_t block) {
  // Roughly 256 MiB of basis storage at most, between 8 and 20 blocks.
  const std::size_t budget = (std::size_t{256} << 20) / (sizeof(double) * dimension);
  return std::clamp<std::size_t>(budget, 8 * block, 20 * block);
}

}  // namespace

EigenResult LowestEigenpairs(std::size_t dimension, const LinearOperator& apply,
                             std::size_t count, const EigensolverOptions& options,
                             const std::vector<std::vector<double>>& warm_start) {
  if (dimension == 0 || count == 0 || count > dimension) {
    throw ValidationError("eigensolver: need 1 <= count <= dimension");
  }
  const std::size_t block = std::max(options.block_size, count);
  const std::size_t max_basis =
      std::min(dimension, options.max_basis ? std::max(options.max_basis, 2 * block)
                                            : DefaultBasis(dimension, block));

  Rng rng(options.seed);
  std::vector<Vector> start;
  for (const Vector& v : warm_start) {
    if (v.size() == dimension && start.size() < block) start.push_back(v);
  }
  while (start.size() < block) {
    Vector v(dimension);
    for (double& x : v) x = rng.Uniform01() - 0.5;
    start.push_back(std::move(v));
  }

  EigenResult result;
  Vector hx(dimension);
  for (std::size_t restart = 0; restart <= options.max_restarts; ++restart) {
    result.restarts = restart;
    std::vector<Vector> basis;
    basis.reserve(max_basis);
    // projected(i, j) = q_i^T H q_j, filled column by column as vectors join.
    Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(max_basis), static_cast<Eigen::Index>(max_basis));
    std::vector<Vector> pending = std::move(start);
    start.clear();
    while (!pending.empty() && basis.size() < max_basis) {
      std::vector<Vector> images;
      for (Vector& v : pending) {
        if (basis.size() == max_basis) break;
        if (!OrthonormalizeAgainst(basis, v)) continue;
        basis.push_back(std::move(v));
        const std::size_t j = basis.size() - 1;
        Vector w(dimension);
        apply(basis[j], w);
        for (std::size_t i = 0; i <= j; ++i) {
          const double entry = Dot(basis[i], w);
          projected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry;
          projected(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = entry;
        }
        images.push_back(std::move(w));
      }
      pending = std::move(images);
    }

    const auto m = static_cast<Eigen::Index>(basis.size());
    if (static_cast<std::size_t>(m) < count) {
      throw NumericalError("eigensolver: Krylov space collapsed below " +
                           std::to_string(count) + " vectors");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(projected.topLeftCorner(m, m));
    const Eigen::VectorXd& theta = small.eigenvalues();
    const Eigen::MatrixXd& y = small.eigenvectors();
    const double scale = std::max(std::abs(theta(0)), std::abs(theta(m - 1)));
    const double tolerance = std::max(options.tolerance, 1e-13 * scale);

    const std::size_t keep = std::min<std::size_t>(block, static_cast<std::size_t>(m));
    std::vector<Vector> ritz(keep, Vector(dimension, 0.0));
    for (std::size_t r = 0; r < keep; ++r) {
      for (Eigen::Index j = 0; j < m; ++j) {
        Axpy(y(j, static_cast<Eigen::Index>(r)), basis[static_cast<std::size_t>(j)], ritz[r]);
      }
    }
    result.values.assign(count, 0.0);
    result.residuals.assign(count, 0.0);
    bool converged = true;
    for (std::size_t r = 0; r < count; ++r) {
      const double value = theta(static_cast<Eigen::Index>(r));
      apply(ritz[r], hx);
      Axpy(-value, ritz[r], hx);
      result.values[r] = value;
      result.residuals[r] = Norm(hx);
      converged = converged && result.residuals[r] <= tolerance;
    }
    // A basis that spans an invariant subspace yields exact Ritz pairs.
    if (converged || static_cast<std::size_t>(m) == dimension) {
      result.converged = true;
      result.vectors.assign(ritz.begin(), ritz.begin() + static_cast<std::ptrdiff_t>(count));
      return result;
    }
    start = std::move(ritz);
  }
  return result;
}

}  // namespace knapqubo
