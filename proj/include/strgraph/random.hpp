// Copyright 2026 The strgraph Authors
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

/// \file
/// The pseudorandom generator behind every seeded construction.
///
/// SplitMix64, specified exactly so that fixtures can be regenerated in any
/// language:
///
///     state  <- state + 0x9E3779B97F4A7C15        (mod 2^64)
///     z      <- state
///     z      <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9
///     z      <- (z xor (z >> 27)) * 0x94D049BB133111EB
///     output    z xor (z >> 31)
///
/// The initial state is the seed. A draw below k is floor(output * k / 2^64),
/// computed with a 128-bit product; no draw is ever rejected.

#ifndef STRGRAPH_RANDOM_HPP
#define STRGRAPH_RANDOM_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace strgraph {

struct Seed {
  std::uint64_t value = 0;
};

class SplitMix64 {
 public:
  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below(0)");
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Fisher-Yates from the back: for i = size-1 down to 1 swap i with below(i+1).
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace strgraph

#endif  // STRGRAPH_RANDOM_HPP
