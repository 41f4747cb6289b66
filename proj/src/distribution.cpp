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

#include "itree/distribution.hpp"

namespace itree {

std::string path_string(std::uint64_t path_key, int n_steps) {
  std::string text(static_cast<std::size_t>(n_steps), '0');
  for (int n = 0; n < n_steps; ++n) {
    if ((path_key >> n) & 1u) text[static_cast<std::size_t>(n)] = '1';
  }
  return text;
}

std::uint64_t parse_path_string(const std::string& text) {
  if (text.empty() || text.size() > 63) {
    throw ConfigError("path string has unsupported length " +
                      std::to_string(text.size()));
  }
  std::uint64_t key = 0;
  for (std::size_t n = 0; n < text.size(); ++n) {
    if (text[n] == '1') {
      key |= std::uint64_t{1} << n;
    } else if (text[n] != '0') {
      throw ConfigError("path string must contain only 0/1, got '" + text + "'");
    }
  }
  return key;
}

}  // namespace itree
