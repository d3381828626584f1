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

#ifndef KNAPQUBO_EIGENSOLVER_HPP_
#define KNAPQUBO_EIGENSOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace knapqubo {

// y = H x for a real symmetric operator.
using LinearOperator =
    std::function<void(std::span<const double> x, std::span<double> y)>;

struct EigensolverOptions {
  // Block size; must exceed the number of wanted eigenvalues so that a
  // degenerate lowest level is resolved with its multiplicity.
  std::size_t block_size = 3;
  // Krylov basis size per restart cycle; 0 picks a size from the dimension.
  std::size_t max_basis = 0;
  std::size_t max_restarts = 2000;
  // Absolute residual bound ||H x - theta x|| for every wanted pair. Each
  // converged Ritz value is then within this distance of an eigenvalue.
  double tolerance = 1e-8;
  std::uint64_t seed = 0x5eed;
};

struct EigenResult {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // matching Ritz vectors
  std::vector<double> residuals;
  std::size_t restarts = 0;
  bool converged = false;
};

// Lowest `count` eigenpairs of a symmetric operator of size `dimension` by
// block Krylov iteration with Rayleigh-Ritz extraction and explicit restarts
// from the lowest Ritz vectors. `warm_start` vectors, when given, seed the
// first block. Does not throw on non-convergence; check `converged`.
EigenResult LowestEigenpairs(std::size_t dimension, const LinearOperator& apply,
                             std::size_t count, const EigensolverOptions& options,
                             const std::vector<std::vector<double>>& warm_start = {});

}  // namespace knapqubo

#endif  // KNAPQUBO_EIGENSOLVER_HPP_
