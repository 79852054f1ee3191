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

#ifndef LNQ_CLASSICAL_CODE_HPP_
#define LNQ_CLASSICAL_CODE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lnq/linalg.hpp"

namespace lnq {

// A classical linear [n,k,d]_q code, q in {2,4}, held by a full-rank
// parity-check matrix in standard form [I | A]. The column permutation
// applied during standardization is recorded so errors can be reported in
// the user's original coordinates. The minimum distance is either computed
// exactly (exhaustive codeword enumeration) or declared by the user; the
// two cases are flagged apart.
class ClassicalCode {
 public:
  static constexpr uint64_t kDefaultEnumCap = uint64_t{1} << 20;

  // `h_user` in user column order; q = 2 requires binary entries.
  static ClassicalCode from_parity_check(int q, const F4Matrix& h_user);

  // Text format: line 1 "q n k", then n-k rows of n whitespace-separated
  // tokens from {0,1,w,W}, then an optional line "d <int>".
  static ClassicalCode from_stream(std::istream& in);
  static ClassicalCode from_file(const std::string& path);

  int q() const { return q_; }
  size_t n() const { return n_; }
  size_t k() const { return k_; }

  const F4Matrix& h() const { return h_; }  // standard form [I | A]
  const std::vector<size_t>& col_perm() const { return col_perm_; }
  F4Matrix a_block() const { return h_.submatrix(0, n_ - k_, n_ - k_, k_); }
  F4Matrix generator() const;  // [A^T | I_k]; satisfies G H^T = 0

  bool has_distance() const { return d_.has_value(); }
  size_t distance() const;
  bool distance_declared() const { return d_declared_; }
  void declare_distance(size_t d);
  void compute_distance(uint64_t cap = kDefaultEnumCap);
  size_t correction_radius() const { return (distance() - 1) / 2; }

  std::string name;  // catalog name or source path, for reports

 private:
  int q_ = 2;
  size_t n_ = 0, k_ = 0;
  F4Matrix h_;
  std::vector<size_t> col_perm_;
  std::optional<size_t> d_;
  bool d_declared_ = false;
};

// Exact minimum distance by exhaustive enumeration of all q^k codewords.
// Throws std::invalid_argument when q^k exceeds `cap`, telling the caller
// to declare d instead.
size_t min_distance(const ClassicalCode& code, uint64_t cap = ClassicalCode::kDefaultEnumCap);

// d == n - k + 1 (Singleton met with equality). Requires d known.
bool is_mds(const ClassicalCode& code);

// Built-in verified codes: rep3_b [3,1,3]_2, hamming7_b [7,4,3]_2,
// mds4_2_q [4,2,3]_4, ext_rs5_2_q [5,2,4]_4.
std::vector<std::string> catalog_names();
ClassicalCode catalog_get(const std::string& name);

}  // namespace lnq

#endif  // LNQ_CLASSICAL_CODE_HPP_
