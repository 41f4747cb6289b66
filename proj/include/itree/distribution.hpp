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

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "itree/errors.hpp"

namespace itree {

/// Exact probability table over all 2^(N+1) (path, final spin) outcomes.
///
/// Outcome keys: path bits are packed little-endian with step 1 in the least
/// significant bit (bit value 1 = went left); the spin bit is kept separate.
/// The flat storage index is (path_key << 1) | spin_bit, i.e. the spin
/// occupies bit 0 of the index.
struct OutcomeDistribution {
  int n_steps = 0;
  std::string method;
  std::uint64_t config_hash = 0;
  Eigen::VectorXd prob;

  static OutcomeDistribution zeros(int n_steps, std::string method,
                                   std::uint64_t config_hash) {
    OutcomeDistribution d;
    d.n_steps = n_steps;
    d.method = std::move(method);
    d.config_hash = config_hash;
    d.prob = Eigen::VectorXd::Zero(std::int64_t{1} << (n_steps + 1));
    return d;
  }

  double& at(std::uint64_t path_key, int spin_bit) {
    return prob[static_cast<std::int64_t>((path_key << 1) | std::uint64_t(spin_bit))];
  }
  double at(std::uint64_t path_key, int spin_bit) const {
    return prob[static_cast<std::int64_t>((path_key << 1) | std::uint64_t(spin_bit))];
  }
  std::int64_t size() const { return prob.size(); }
  double total() const { return prob.sum(); }
};

/// Path key rendered as a 0/1 string, step 1 first.
std::string path_string(std::uint64_t path_key, int n_steps);

/// Inverse of path_string. Throws ConfigError on non-0/1 characters.
std::uint64_t parse_path_string(const std::string& text);

}  // namespace itree
