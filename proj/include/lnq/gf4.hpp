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

#ifndef LNQ_GF4_HPP_
#define LNQ_GF4_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lnq {

// GF(4) = {0, 1, w, w2} with w2 = w + 1 (characteristic 2).
//
// An element is two bits (b1, bw) with value = b1*1 + bw*w, packed as
// code = b1 | (bw << 1):
//
//   code 0 -> 0,  code 1 -> 1,  code 2 -> w,  code 3 -> w2.
//
// Addition is XOR of codes. Multiplication follows from w*w = w2 and
// w*w2 = w3 = 1. The trace Tr(a) = a + a^2 maps onto GF(2):
// Tr(0) = Tr(1) = 0 and Tr(w) = Tr(w2) = 1.
class GF4 {
 public:
  constexpr GF4() = default;
  constexpr explicit GF4(uint8_t code) : code_(static_cast<uint8_t>(code & 3u)) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 omega() { return GF4(2); }
  static constexpr GF4 omega2() { return GF4(3); }

  constexpr uint8_t code() const { return code_; }
  constexpr bool b1() const { return code_ & 1u; }         // coefficient of 1
  constexpr bool bw() const { return (code_ >> 1) & 1u; }  // coefficient of w
  constexpr bool is_zero() const { return code_ == 0; }

  constexpr GF4& operator+=(GF4 o) {
    code_ ^= o.code_;
    return *this;
  }
  constexpr GF4& operator*=(GF4 o) {
    code_ = kMul[code_][o.code_];
    return *this;
  }
  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(static_cast<uint8_t>(a.code_ ^ b.code_)); }
  friend constexpr GF4 operator*(GF4 a, GF4 b) { return GF4(kMul[a.code_][b.code_]); }
  constexpr bool operator==(const GF4&) const = default;

  // Tr(a) = a + a^2.
  constexpr bool trace() const { return code_ >= 2; }

  // Multiplicative inverse; the zero element has none.
  constexpr GF4 inverse() const {
    if (code_ == 0) throw std::domain_error("GF4: inverse of zero");
    return GF4(kInv[code_]);
  }

  // Text form used in code files and reports: 0, 1, w, W (W = w2).
  constexpr char to_char() const { return kChars[code_]; }
  static constexpr GF4 from_char(char c) {
    switch (c) {
      case '0': return zero();
      case '1': return one();
      case 'w': return omega();
      case 'W': return omega2();
      default: throw std::invalid_argument(std::string("GF4: bad element token '") + c + "'");
    }
  }

 private:
  static constexpr uint8_t kMul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  static constexpr uint8_t kInv[4] = {0, 1, 3, 2};
  static constexpr char kChars[4] = {'0', '1', 'w', 'W'};

  uint8_t code_ = 0;
};

}  // namespace lnq

#endif  // LNQ_GF4_HPP_
