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

#include "lnq/linalg.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace lnq {

namespace {

void check_same_size(size_t a, size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// F2Vector

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("F2Vector: bad bit character");
  }
  return v;
}

bool F2Vector::is_zero() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

size_t F2Vector::weight() const {
  size_t c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

std::vector<size_t> F2Vector::support() const {
  std::vector<size_t> s;
  for (size_t i = 0; i < n_; ++i)
    if (get(i)) s.push_back(i);
  return s;
}

bool F2Vector::dot(const F2Vector& o) const {
  check_same_size(n_, o.n_, "F2Vector::dot");
  uint64_t acc = 0;
  for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
  check_same_size(n_, o.n_, "F2Vector::operator^=");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

F2Vector& F2Vector::operator&=(const F2Vector& o) {
  check_same_size(n_, o.n_, "F2Vector::operator&=");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

F2Vector& F2Vector::operator|=(const F2Vector& o) {
  check_same_size(n_, o.n_, "F2Vector::operator|=");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

F2Vector F2Vector::slice(size_t start, size_t len) const {
  if (start + len > n_) throw std::out_of_range("F2Vector::slice");
  F2Vector out(len);
  for (size_t i = 0; i < len; ++i) out.set(i, get(start + i));
  return out;
}

uint64_t F2Vector::low_bits() const {
  if (n_ > 64) throw std::logic_error("F2Vector::low_bits: vector longer than 64 bits");
  return w_.empty() ? 0 : w_[0];
}

size_t F2Vector::hash() const {
  // FNV-1a over the packed words plus the length.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(n_);
  for (uint64_t w : w_) mix(w);
  return static_cast<size_t>(h);
}

std::string F2Vector::str() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

F2Vector concat(const F2Vector& a, const F2Vector& b) {
  F2Vector out(a.size() + b.size());
  for (size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
  for (size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
  return out;
}

// ---------------------------------------------------------------------------
// F4Vector

F4Vector::F4Vector(F2Vector b1, F2Vector bw) : b1_(std::move(b1)), bw_(std::move(bw)) {
  check_same_size(b1_.size(), bw_.size(), "F4Vector planes");
}

F4Vector F4Vector::from_string(std::string_view s) {
  F4Vector v(s.size());
  for (size_t i = 0; i < s.size(); ++i) v.set(i, GF4::from_char(s[i]));
  return v;
}

F4Vector F4Vector::lift(const F2Vector& v) { return F4Vector(v, F2Vector(v.size())); }

size_t F4Vector::weight() const { return (b1_ | bw_).weight(); }

std::vector<size_t> F4Vector::support() const {
  std::vector<size_t> s;
  for (size_t i = 0; i < size(); ++i)
    if (!get(i).is_zero()) s.push_back(i);
  return s;
}

F4Vector& F4Vector::operator+=(const F4Vector& o) {
  b1_ ^= o.b1_;
  bw_ ^= o.bw_;
  return *this;
}

F4Vector F4Vector::times(GF4 s) const {
  switch (s.code()) {
    case 0: return F4Vector(size());
    case 1: return *this;
    case 2: return times_omega();
    default: return times_omega().times_omega();  // w2 = w*w
  }
}

F4Vector F4Vector::times_omega() const {
  // w*(b1 + w*bw) = w*b1 + w2*bw = bw + w*(b1 + bw).
  return F4Vector(bw_, b1_ ^ bw_);
}

std::string F4Vector::str() const {
  std::string s(size(), '0');
  for (size_t i = 0; i < size(); ++i) s[i] = get(i).to_char();
  return s;
}

F4Vector reconstruct_from_traces(const F2Vector& t0, const F2Vector& t1) {
  check_same_size(t0.size(), t1.size(), "reconstruct_from_traces");
  // w2*t0 + t1 has planes (t0 ^ t1, t0).
  return F4Vector(t0 ^ t1, t0);
}

F4Vector concat(const F4Vector& a, const F4Vector& b) {
  return F4Vector(concat(a.plane1(), b.plane1()), concat(a.planew(), b.planew()));
}

// ---------------------------------------------------------------------------
// F2Matrix

F2Matrix F2Matrix::identity(size_t n) {
  F2Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string>& rows) {
  F2Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("F2Matrix: ragged rows");
    m.r_[i] = F2Vector::from_string(rows[i]);
  }
  return m;
}

F2Vector F2Matrix::mul(const F2Vector& v) const {
  check_same_size(cols_, v.size(), "F2Matrix::mul");
  F2Vector out(rows_);
  for (size_t i = 0; i < rows_; ++i) out.set(i, r_[i].dot(v));
  return out;
}

F2Vector F2Matrix::mul_left(const F2Vector& v) const {
  check_same_size(rows_, v.size(), "F2Matrix::mul_left");
  F2Vector out(cols_);
  for (size_t i = 0; i < rows_; ++i)
    if (v.get(i)) out ^= r_[i];
  return out;
}

F2Matrix F2Matrix::mul(const F2Matrix& o) const {
  check_same_size(cols_, o.rows_, "F2Matrix::mul");
  F2Matrix ot = o.transposed();
  F2Matrix out(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < o.cols_; ++j) out.set(i, j, r_[i].dot(ot.r_[j]));
  return out;
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix out(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (get(i, j)) out.set(j, i, true);
  return out;
}

F2Matrix F2Matrix::submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("F2Matrix::submatrix");
  F2Matrix out(nr, nc);
  for (size_t i = 0; i < nr; ++i) out.r_[i] = r_[r0 + i].slice(c0, nc);
  return out;
}

F2Matrix F2Matrix::vstack(const F2Matrix& a, const F2Matrix& b) {
  check_same_size(a.cols_, b.cols_, "F2Matrix::vstack");
  F2Matrix out(a.rows_ + b.rows_, a.cols_);
  for (size_t i = 0; i < a.rows_; ++i) out.r_[i] = a.r_[i];
  for (size_t i = 0; i < b.rows_; ++i) out.r_[a.rows_ + i] = b.r_[i];
  return out;
}

F2Matrix F2Matrix::hstack(const F2Matrix& a, const F2Matrix& b) {
  check_same_size(a.rows_, b.rows_, "F2Matrix::hstack");
  F2Matrix out(a.rows_, a.cols_ + b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) out.r_[i] = concat(a.r_[i], b.r_[i]);
  return out;
}

bool F2Matrix::is_zero() const {
  for (const auto& r : r_)
    if (!r.is_zero()) return false;
  return true;
}

bool F2Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

size_t F2Matrix::rank() const {
  std::vector<F2Vector> rows = r_;
  size_t rank = 0;
  for (size_t c = 0; c < cols_ && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && !rows[piv].get(c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].get(c)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::string F2Matrix::str() const {
  std::string s;
  for (size_t i = 0; i < rows_; ++i) {
    s += r_[i].str();
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------
// F4Matrix

F4Matrix F4Matrix::identity(size_t n) {
  F4Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, GF4::one());
  return m;
}

F4Matrix F4Matrix::from_strings(const std::vector<std::string>& rows) {
  F4Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("F4Matrix: ragged rows");
    m.r_[i] = F4Vector::from_string(rows[i]);
  }
  return m;
}

F4Matrix F4Matrix::lift(const F2Matrix& m) {
  F4Matrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) out.r_[i] = F4Vector::lift(m.row(i));
  return out;
}

F4Vector F4Matrix::mul(const F4Vector& v) const {
  check_same_size(cols_, v.size(), "F4Matrix::mul");
  // Row dot product in planes: with row m = mz + w*mx and v = vz + w*vx,
  //   m.v = (mz.vz ^ mx.vx) + w*(mz.vx ^ mx.vz ^ mx.vx).
  F4Vector out(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    const F2Vector& mz = r_[i].plane1();
    const F2Vector& mx = r_[i].planew();
    bool zz = mz.dot(v.plane1());
    bool xx = mx.dot(v.planew());
    bool zx = mz.dot(v.planew());
    bool xz = mx.dot(v.plane1());
    out.set(i, GF4(static_cast<uint8_t>((zz ^ xx) | ((zx ^ xz ^ xx) << 1))));
  }
  return out;
}

F4Vector F4Matrix::mul_left(const F4Vector& v) const {
  check_same_size(rows_, v.size(), "F4Matrix::mul_left");
  F4Vector out(cols_);
  for (size_t i = 0; i < rows_; ++i) {
    GF4 s = v.get(i);
    if (!s.is_zero()) out += r_[i].times(s);
  }
  return out;
}

F4Matrix F4Matrix::times_omega() const {
  F4Matrix out(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i) out.r_[i] = r_[i].times_omega();
  return out;
}

F4Matrix F4Matrix::submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("F4Matrix::submatrix");
  F4Matrix out(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) out.set(i, j, get(r0 + i, c0 + j));
  return out;
}

F4Matrix F4Matrix::vstack(const F4Matrix& a, const F4Matrix& b) {
  check_same_size(a.cols_, b.cols_, "F4Matrix::vstack");
  F4Matrix out(a.rows_ + b.rows_, a.cols_);
  for (size_t i = 0; i < a.rows_; ++i) out.r_[i] = a.r_[i];
  for (size_t i = 0; i < b.rows_; ++i) out.r_[a.rows_ + i] = b.r_[i];
  return out;
}

F2Matrix F4Matrix::plane1() const {
  F2Matrix out(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i) out.row(i) = r_[i].plane1();
  return out;
}

F2Matrix F4Matrix::planew() const {
  F2Matrix out(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i) out.row(i) = r_[i].planew();
  return out;
}

bool F4Matrix::is_binary() const {
  for (const auto& r : r_)
    if (!r.planew().is_zero()) return false;
  return true;
}

F2Matrix F4Matrix::to_f2() const {
  if (!is_binary()) throw std::logic_error("F4Matrix::to_f2: matrix has non-binary entries");
  return plane1();
}

size_t F4Matrix::rank() const {
  F4Matrix m = *this;
  size_t rank = 0;
  for (size_t c = 0; c < cols_ && rank < rows_; ++c) {
    size_t piv = rank;
    while (piv < rows_ && m.get(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    std::swap(m.r_[rank], m.r_[piv]);
    GF4 inv = m.get(rank, c).inverse();
    m.r_[rank] = m.r_[rank].times(inv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == rank) continue;
      GF4 f = m.get(i, c);
      if (!f.is_zero()) m.r_[i] += m.r_[rank].times(f);
    }
    ++rank;
  }
  return rank;
}

std::string F4Matrix::str() const {
  std::string s;
  for (size_t i = 0; i < rows_; ++i) {
    s += r_[i].str();
    s += '\n';
  }
  return s;
}

F4Vector mul(const F2Matrix& m, const F4Vector& a) {
  return F4Vector(m.mul(a.plane1()), m.mul(a.planew()));
}

// ---------------------------------------------------------------------------
// Standard form

namespace {

// First row that is linearly dependent on the rows before it.
size_t first_dependent_row(const F4Matrix& m) {
  std::vector<F4Vector> basis;
  for (size_t i = 0; i < m.rows(); ++i) {
    F4Vector v = m.row(i);
    for (const auto& b : basis) {
      // Reduce v by b's leading coordinate.
      size_t lead = b.support().front();
      GF4 f = v.get(lead) * b.get(lead).inverse();
      if (!f.is_zero()) v += b.times(f);
    }
    if (v.is_zero()) return i;
    basis.push_back(v);
  }
  return m.rows();  // full rank
}

}  // namespace

StandardFormF4 standard_form(const F4Matrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  F4Matrix w = m;
  std::vector<size_t> pivot_cols;

  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && w.get(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap(w.row(r), w.row(piv));
    GF4 inv = w.get(r, c).inverse();
    if (!(w.get(r, c) == GF4::one())) w.row(r) = w.row(r).times(inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      GF4 f = w.get(i, c);
      if (!f.is_zero()) w.row(i) += w.row(r).times(f);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  if (r < rows) {
    size_t dep = first_dependent_row(m);
    throw std::invalid_argument("standard_form: matrix is rank deficient; row " +
                                std::to_string(dep) + " depends on earlier rows");
  }

  // Pivot columns first, remaining columns in their original order.
  std::vector<size_t> perm = pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) perm.push_back(c);

  F4Matrix out(rows, cols);
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows; ++i) out.set(i, j, w.get(i, perm[j]));
  return {std::move(out), std::move(perm)};
}

StandardFormF2 standard_form(const F2Matrix& m) {
  StandardFormF4 r4 = standard_form(F4Matrix::lift(m));
  return {r4.h.to_f2(), std::move(r4.col_perm)};
}

bool is_identity_perm(const std::vector<size_t>& perm) {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

F4Vector to_original_coords(const F4Vector& v, const std::vector<size_t>& col_perm) {
  if (v.size() != col_perm.size())
    throw std::invalid_argument("to_original_coords: size mismatch");
  F4Vector out(v.size());
  for (size_t j = 0; j < v.size(); ++j) out.set(col_perm[j], v.get(j));
  return out;
}

}  // namespace lnq
