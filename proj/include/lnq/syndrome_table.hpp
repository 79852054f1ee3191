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

#ifndef LNQ_SYNDROME_TABLE_HPP_
#define LNQ_SYNDROME_TABLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lnq/scheme.hpp"

namespace lnq {

// Data-qubit correction recovered from a syndrome: apply X^data_x Z^data_z.
// `error` is the full combined GF(4)^n error the syndrome identified
// (standardized coordinates); data_x / data_z are its trace segments on the
// data block.
struct Correction {
  F2Vector data_x, data_z;
  F4Vector error;
};

// Injective map from 2(n-k)-bit ancilla outcomes to the canonical
// correctable error of weight <= t. Keys cover every e in GF(4)^n with
// |supp(e)| <= t; for a binary-variant scheme such an e is the pair
// (e0, e1) = (Tr(e), Tr(w e)) keyed by (H e0^T, H e1^T).
//
// Construction fails loudly on any key collision: within the correction
// radius distinct errors must have distinct trace syndromes, so a collision
// is an internal consistency error, never something to overwrite.
class SyndromeTable {
 public:
  static constexpr uint64_t kDefaultCap = uint64_t{1} << 24;

  static SyndromeTable build(const Scheme& s, unsigned t, uint64_t cap = kDefaultCap);

  unsigned radius() const { return t_; }
  size_t size() const { return map_.size(); }
  Layout layout() const { return lay_; }
  Variant variant() const { return variant_; }

  // Number of GF(4)^n vectors with support size <= t: sum_i C(n,i) 3^i.
  static uint64_t ball_size(size_t n, unsigned t);

  const F4Vector* lookup(const F2Vector& key) const;
  std::optional<Correction> decode(const F2Vector& anc_outcome) const;

  // Entries sorted by ascending numeric value of the little-endian key
  // bit string (the on-disk order).
  std::vector<std::pair<F2Vector, F4Vector>> sorted_entries() const;

  // Versioned binary format; see syndrome_table.cpp for the exact layout.
  void write(std::ostream& out) const;
  static SyndromeTable read(std::istream& in);

  bool operator==(const SyndromeTable& o) const;

 private:
  SyndromeTable() = default;

  Layout lay_;
  Variant variant_ = Variant::quaternary;
  unsigned t_ = 0;
  std::unordered_map<F2Vector, F4Vector, F2VectorHash> map_;
};

// One full algebraic encode-error-decode-correct cycle.
struct CycleResult {
  bool success = false;               // residual on data is the identity
  bool decoded = false;               // the outcome was present in the table
  bool assumption_violated = false;   // effective ancilla bit error present
  F2Vector residual_x, residual_z;    // data residual after correction
};
CycleResult run_cycle(const Scheme& s, const SyndromeTable& table, const PauliError& err);

}  // namespace lnq

#endif  // LNQ_SYNDROME_TABLE_HPP_
