// Copyright 2026 The itree authors
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
//
// Exact, exponential-cost reference computations of the full outcome
// distribution. These are the ground truth every sampler is tested against.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "itree/distribution.hpp"
#include "itree/model.hpp"

namespace itree {

/// Cost ~4^N: explicit sum over every intermediate spin history.
inline constexpr int kMaxBruteForceSteps = 14;
/// Cost ~2^N * N: one chain of 2x2 products per leaf.
inline constexpr int kMaxMatrixProductSteps = 24;

/// Observables of a single event, shared by the oracle and analysis layers.
enum class Observable {
  kFirstLeftDepth,   // 1-based step of the first left move; N+1 if none
  kNumLeftBranches,  // number of left moves
};

/// Final spin amplitude vector for one leaf: the product of M_R(n) for
/// path_bits[n-1] == 0 and M_L(n) for 1, applied in step order to the
/// initial spin vector. Squared components summed over all leaves total 1.
/// Throws LengthMismatchError when path_bits.size() != n_steps.
Eigen::Vector2d leaf_amplitude(const ModelConfig& config,
                               std::span<const std::uint8_t> path_bits);

/// Sums amplitude products over all spin histories of every leaf. Exact; the
/// primary test oracle. Throws TooLargeError above kMaxBruteForceSteps.
OutcomeDistribution brute_force_distribution(const ModelConfig& config);

/// Evaluates each leaf with a chain of 2x2 matrix products; equal to the
/// brute-force table entrywise. Usable at the N = 20 experiment scale.
/// Throws TooLargeError above kMaxMatrixProductSteps.
OutcomeDistribution matrix_product_distribution(const ModelConfig& config);

/// Expectation of an observable under an exact distribution.
double exact_observable_expectation(const OutcomeDistribution& dist,
                                    Observable observable);

/// Probability mass of an observable value v, indexed by v (0..N+1).
std::vector<double> observable_pmf(const OutcomeDistribution& dist,
                                   Observable observable);

/// Observable value of an outcome key with n_steps path bits.
int observable_of_path(std::uint64_t path_key, int n_steps, Observable observable);

}  // namespace itree
