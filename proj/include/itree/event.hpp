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
#include <vector>

namespace itree {

/// One sampled outcome: final spin bit (0 = down, 1 = up) and one bit per
/// step (1 = went left at that step).
struct Event {
  int spin = 0;
  std::vector<std::uint8_t> path;  // size N, step 1 first

  int n_steps() const { return static_cast<int>(path.size()); }
};

/// Little-endian packed path bits (step 1 = bit 0); valid for N <= 63.
inline std::uint64_t path_key(const Event& event) {
  std::uint64_t key = 0;
  for (std::size_t n = 0; n < event.path.size(); ++n) {
    key |= std::uint64_t(event.path[n] & 1u) << n;
  }
  return key;
}

}  // namespace itree
