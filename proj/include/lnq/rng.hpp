// Copyright 2026 The LNQ Authors
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

#ifndef LNQ_RNG_HPP_
#define LNQ_RNG_HPP_

#include <cstdint>

namespace lnq {

// SplitMix64, used only to expand seeds into generator state.
struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ with fully specified, platform-independent output. Stream
// splitting rule: trial i of a run seeded with s draws from the generator
// seeded with s ^ (0x9e3779b97f4a7c15 * (i + 1)), so Monte Carlo results
// do not depend on how trials are scheduled across threads.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& w : s_) w = sm.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is absorbing
  }

  static Rng for_trial(uint64_t seed, uint64_t trial) {
    return Rng(seed ^ (0x9e3779b97f4a7c15ull * (trial + 1)));
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased integer in [0, bound) by rejection.
  uint64_t next_below(uint64_t bound) {
    const uint64_t limit = bound * ((~uint64_t{0}) / bound);
    uint64_t u;
    do {
      u = next_u64();
    } while (u >= limit);
    return u % bound;
  }

  // 53-bit uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace lnq

#endif  // LNQ_RNG_HPP_
