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

#include "itree/oracle.hpp"

#include <bit>
#include <string>

#include "itree/errors.hpp"

namespace itree {
namespace {

std::vector<std::pair<Eigen::Matrix2d, Eigen::Matrix2d>> step_matrices(
    const ModelConfig& config) {
  const DecoupledParams params = decoupled_params(config);
  std::vector<std::pair<Eigen::Matrix2d, Eigen::Matrix2d>> out;
  out.reserve(static_cast<std::size_t>(config.n_steps));
  for (int n = 1; n <= config.n_steps; ++n) out.push_back(recouple(params, n));
  return out;
}

// Depth-first walk over (move, next spin) choices: 4 branches per step,
// accumulating the running amplitude product. Recursion order fixes the
// per-leaf summation order, so results are reproducible bit for bit.
struct BruteForceWalker {
  const std::vector<std::pair<Eigen::Matrix2d, Eigen::Matrix2d>>& steps;
  int n_steps;
  OutcomeDistribution* amp;  // amplitude accumulator, squared at the end

  void walk(int step, int spin, double amplitude, std::uint64_t path) {
    if (amplitude == 0.0) return;  // every deeper product stays exactly zero
    if (step == n_steps) {
      amp->at(path, spin) += amplitude;
      return;
    }
    const auto& [left, right] = steps[static_cast<std::size_t>(step)];
    for (int move = 0; move < 2; ++move) {
      const Eigen::Matrix2d& m = move ? left : right;
      const std::uint64_t next_path = path | (std::uint64_t(move) << step);
      walk(step + 1, 0, amplitude * m(0, spin), next_path);
      walk(step + 1, 1, amplitude * m(1, spin), next_path);
    }
  }
};

}  // namespace

Eigen::Vector2d leaf_amplitude(const ModelConfig& config,
                               std::span<const std::uint8_t> path_bits) {
  if (static_cast<int>(path_bits.size()) != config.n_steps) {
    throw LengthMismatchError("path has " + std::to_string(path_bits.size()) +
                              " bits, expected " + std::to_string(config.n_steps));
  }
  const auto steps = step_matrices(config);
  Eigen::Vector2d v = initial_spin(config);
  for (int n = 0; n < config.n_steps; ++n) {
    const auto& [left, right] = steps[static_cast<std::size_t>(n)];
    v = (path_bits[static_cast<std::size_t>(n)] ? left : right) * v;
  }
  return v;
}

OutcomeDistribution brute_force_distribution(const ModelConfig& config) {
  if (config.n_steps > kMaxBruteForceSteps) {
    throw TooLargeError("brute force limited to n_steps <= " +
                        std::to_string(kMaxBruteForceSteps) + ", got " +
                        std::to_string(config.n_steps));
  }
  const auto steps = step_matrices(config);
  OutcomeDistribution amp =
      OutcomeDistribution::zeros(config.n_steps, "brute-force", config_hash(config));
  BruteForceWalker walker{steps, config.n_steps, &amp};
  const Eigen::Vector2d start = initial_spin(config);
  for (int spin0 = 0; spin0 < 2; ++spin0) {
    if (start[spin0] != 0.0) walker.walk(0, spin0, start[spin0], 0);
  }
  amp.prob = amp.prob.array().square();
  return amp;
}

OutcomeDistribution matrix_product_distribution(const ModelConfig& config) {
  if (config.n_steps > kMaxMatrixProductSteps) {
    throw TooLargeError("matrix product limited to n_steps <= " +
                        std::to_string(kMaxMatrixProductSteps) + ", got " +
                        std::to_string(config.n_steps));
  }
  const auto steps = step_matrices(config);
  OutcomeDistribution dist = OutcomeDistribution::zeros(
      config.n_steps, "matrix-product", config_hash(config));
  const Eigen::Vector2d start = initial_spin(config);
  const std::uint64_t n_paths = std::uint64_t{1} << config.n_steps;
  for (std::uint64_t path = 0; path < n_paths; ++path) {
    double down = start[0], up = start[1];
    for (int n = 0; n < config.n_steps; ++n) {
      const auto& [left, right] = steps[static_cast<std::size_t>(n)];
      const Eigen::Matrix2d& m = ((path >> n) & 1u) ? left : right;
      const double next_down = m(0, 0) * down + m(0, 1) * up;
      const double next_up = m(1, 0) * down + m(1, 1) * up;
      down = next_down;
      up = next_up;
    }
    dist.at(path, 0) = down * down;
    dist.at(path, 1) = up * up;
  }
  return dist;
}

int observable_of_path(std::uint64_t path_key, int n_steps, Observable observable) {
  switch (observable) {
    case Observable::kFirstLeftDepth:
      return path_key == 0 ? n_steps + 1 : std::countr_zero(path_key) + 1;
    case Observable::kNumLeftBranches:
      return std::popcount(path_key);
  }
  throw Error("Internal", "unknown observable");
}

double exact_observable_expectation(const OutcomeDistribution& dist,
                                    Observable observable) {
  double expectation = 0.0;
  const std::uint64_t n_paths = std::uint64_t{1} << dist.n_steps;
  for (std::uint64_t path = 0; path < n_paths; ++path) {
    const double mass = dist.at(path, 0) + dist.at(path, 1);
    expectation += mass * observable_of_path(path, dist.n_steps, observable);
  }
  return expectation;
}

std::vector<double> observable_pmf(const OutcomeDistribution& dist,
                                   Observable observable) {
  std::vector<double> pmf(static_cast<std::size_t>(dist.n_steps) + 2, 0.0);
  const std::uint64_t n_paths = std::uint64_t{1} << dist.n_steps;
  for (std::uint64_t path = 0; path < n_paths; ++path) {
    const double mass = dist.at(path, 0) + dist.at(path, 1);
    pmf[static_cast<std::size_t>(
        observable_of_path(path, dist.n_steps, observable))] += mass;
  }
  return pmf;
}

}  // namespace itree
