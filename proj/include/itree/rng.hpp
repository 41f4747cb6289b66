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

namespace itree {

/// SplitMix64 (Steele, Lea & Flood's splittable generator, Vigna's mixing
/// constants). Small, fast, and trivially splittable, which is what the
/// samplers need: every event owns an independent substream keyed by
/// (seed, event index), so results do not depend on how events are
/// partitioned across threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform draw in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Substream seed for stream `index` under a base seed. One scramble round is
/// the standard SplitMix split: streams for distinct indices are statistically
/// independent and can be created in any order.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed + 0x9e3779b97f4a7c15ull * (index + 1));
}

/// Generator for one event. Draw order is part of the output contract:
/// the two-qubit and quantum-inspired samplers consume N step draws followed
/// by one final spin draw; the naive MCMC consumes N step draws; statevector
/// sampling consumes a single draw.
inline SplitMix64 event_stream(std::uint64_t seed, std::uint64_t event_index) {
  return SplitMix64(substream_seed(seed, event_index));
}

}  // namespace itree
