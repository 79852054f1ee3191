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

#ifndef LNQ_LINALG_HPP_
#define LNQ_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lnq/gf4.hpp"

namespace lnq {

// Dense bit-packed vector over GF(2). Length is fixed at construction;
// unused bits of the last word are kept zero so that equality and hashing
// can work on whole words.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  static F2Vector from_string(std::string_view bits);

  size_t size() const { return n_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  bool is_zero() const;
  size_t weight() const;
  std::vector<size_t> support() const;

  // Parity of the AND with another vector of the same length.
  bool dot(const F2Vector& o) const;

  F2Vector& operator^=(const F2Vector& o);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
  F2Vector& operator&=(const F2Vector& o);
  friend F2Vector operator&(F2Vector a, const F2Vector& b) { return a &= b; }
  F2Vector& operator|=(const F2Vector& o);
  friend F2Vector operator|(F2Vector a, const F2Vector& b) { return a |= b; }
  bool operator==(const F2Vector&) const = default;

  F2Vector slice(size_t start, size_t len) const;

  // First 64 bits as an integer (requires size() <= 64); used for
  // statevector index masks and table keys at desk scale.
  uint64_t low_bits() const;

  const std::vector<uint64_t>& words() const { return w_; }
  size_t hash() const;
  std::string str() const;  // e.g. "0110"

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

F2Vector concat(const F2Vector& a, const F2Vector& b);

struct F2VectorHash {
  size_t operator()(const F2Vector& v) const { return v.hash(); }
};

// Vector over GF(4), stored as two GF(2) bit planes: entry i is
// plane1[i]*1 + planew[i]*w. Plane arithmetic makes the scheme
// constructions cheap: addition is plane-wise XOR, Tr and multiplication
// by w are plane swaps/XORs, and the Z/X decomposition of a matrix is
// literally its two planes.
class F4Vector {
 public:
  F4Vector() = default;
  explicit F4Vector(size_t n) : b1_(n), bw_(n) {}
  F4Vector(F2Vector b1, F2Vector bw);
  static F4Vector from_string(std::string_view s);  // tokens 0,1,w,W
  static F4Vector lift(const F2Vector& v);          // binary -> GF(4)

  size_t size() const { return b1_.size(); }
  GF4 get(size_t i) const { return GF4(static_cast<uint8_t>(b1_.get(i) | (bw_.get(i) << 1))); }
  void set(size_t i, GF4 v) {
    b1_.set(i, v.b1());
    bw_.set(i, v.bw());
  }

  const F2Vector& plane1() const { return b1_; }
  const F2Vector& planew() const { return bw_; }

  bool is_zero() const { return b1_.is_zero() && bw_.is_zero(); }
  size_t weight() const;  // number of nonzero entries
  std::vector<size_t> support() const;

  F4Vector& operator+=(const F4Vector& o);
  friend F4Vector operator+(F4Vector a, const F4Vector& b) { return a += b; }
  bool operator==(const F4Vector&) const = default;

  F4Vector times(GF4 s) const;
  F4Vector times_omega() const;  // (b1, bw) -> (bw, b1 ^ bw)

  // Elementwise Tr(a) and Tr(w*a). For a = b1 + w*bw these are bw and
  // b1 ^ bw respectively.
  F2Vector trace() const { return bw_; }
  F2Vector trace_omega() const { return b1_ ^ bw_; }

  std::string str() const;

 private:
  F2Vector b1_, bw_;
};

// a = w2*Tr(a) + Tr(w*a): rebuilds a GF(4) vector from its two traces.
F4Vector reconstruct_from_traces(const F2Vector& t0, const F2Vector& t1);
F4Vector concat(const F4Vector& a, const F4Vector& b);

// Dense row-major matrix over GF(2); rows are packed F2Vectors.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), r_(rows, F2Vector(cols)) {}
  static F2Matrix identity(size_t n);
  static F2Matrix from_strings(const std::vector<std::string>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool get(size_t i, size_t j) const { return r_[i].get(j); }
  void set(size_t i, size_t j, bool v) { r_[i].set(j, v); }
  const F2Vector& row(size_t i) const { return r_[i]; }
  F2Vector& row(size_t i) { return r_[i]; }

  F2Vector mul(const F2Vector& v) const;       // M v^T
  F2Vector mul_left(const F2Vector& v) const;  // v M
  F2Matrix mul(const F2Matrix& o) const;
  F2Matrix transposed() const;
  F2Matrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;
  static F2Matrix vstack(const F2Matrix& a, const F2Matrix& b);
  static F2Matrix hstack(const F2Matrix& a, const F2Matrix& b);
  bool is_zero() const;
  bool is_identity() const;
  size_t rank() const;
  bool operator==(const F2Matrix&) const = default;
  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<F2Vector> r_;
};

// Dense row-major matrix over GF(4).
class F4Matrix {
 public:
  F4Matrix() = default;
  F4Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), r_(rows, F4Vector(cols)) {}
  static F4Matrix identity(size_t n);
  static F4Matrix from_strings(const std::vector<std::string>& rows);
  static F4Matrix lift(const F2Matrix& m);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  GF4 get(size_t i, size_t j) const { return r_[i].get(j); }
  void set(size_t i, size_t j, GF4 v) { r_[i].set(j, v); }
  const F4Vector& row(size_t i) const { return r_[i]; }
  F4Vector& row(size_t i) { return r_[i]; }

  F4Vector mul(const F4Vector& v) const;       // M v^T
  F4Vector mul_left(const F4Vector& v) const;  // v M
  F4Matrix times_omega() const;
  F4Matrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;
  static F4Matrix vstack(const F4Matrix& a, const F4Matrix& b);

  // The unique binary planes with M = plane1 + w*planew.
  F2Matrix plane1() const;
  F2Matrix planew() const;
  bool is_binary() const;  // planew == 0
  F2Matrix to_f2() const;  // requires is_binary()

  size_t rank() const;
  bool operator==(const F4Matrix&) const = default;
  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<F4Vector> r_;
};

// Binary matrix times GF(4) vector, plane by plane. Satisfies
// Tr(M a^T) = M Tr(a^T) since M has binary entries.
F4Vector mul(const F2Matrix& m, const F4Vector& a);

// Row reduction of a full-row-rank matrix to standard form [I | A].
// Columns may be permuted to make the left block invertible; col_perm[j]
// is the ORIGINAL column index that ended up at standardized position j.
// Throws std::invalid_argument on rank deficiency, naming the first row
// that is linearly dependent on the rows before it.
struct StandardFormF4 {
  F4Matrix h;
  std::vector<size_t> col_perm;
};
StandardFormF4 standard_form(const F4Matrix& m);

struct StandardFormF2 {
  F2Matrix h;
  std::vector<size_t> col_perm;
};
StandardFormF2 standard_form(const F2Matrix& m);

bool is_identity_perm(const std::vector<size_t>& perm);

// Rewrites a standardized-coordinate vector in the user's original column
// order: out[col_perm[j]] = in[j].
F4Vector to_original_coords(const F4Vector& v, const std::vector<size_t>& col_perm);

}  // namespace lnq

#endif  // LNQ_LINALG_HPP_
