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

#include "lnq/classical_code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lnq {

ClassicalCode ClassicalCode::from_parity_check(int q, const F4Matrix& h_user) {
  if (q != 2 && q != 4) throw std::invalid_argument("ClassicalCode: q must be 2 or 4");
  if (h_user.rows() == 0 || h_user.rows() >= h_user.cols())
    throw std::invalid_argument("ClassicalCode: parity-check must have 0 < rows < cols");
  if (q == 2 && !h_user.is_binary())
    throw std::invalid_argument("ClassicalCode: q=2 code has non-binary entries");

  StandardFormF4 sf = standard_form(h_user);  // throws on rank deficiency

  ClassicalCode c;
  c.q_ = q;
  c.n_ = h_user.cols();
  c.k_ = h_user.cols() - h_user.rows();
  c.h_ = std::move(sf.h);
  c.col_perm_ = std::move(sf.col_perm);
  return c;
}

ClassicalCode ClassicalCode::from_stream(std::istream& in) {
  int q;
  size_t n, k;
  if (!(in >> q >> n >> k)) throw std::invalid_argument("code file: bad header line, want 'q n k'");
  if (q != 2 && q != 4) throw std::invalid_argument("code file: q must be 2 or 4");
  if (k >= n || n == 0) throw std::invalid_argument("code file: need 0 < k < n");

  F4Matrix h(n - k, n);
  for (size_t i = 0; i < n - k; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("code file: truncated matrix");
      if (tok.size() != 1)
        throw std::invalid_argument("code file: bad element token '" + tok + "'");
      GF4 v = GF4::from_char(tok[0]);
      if (q == 2 && v.bw())
        throw std::invalid_argument("code file: non-binary entry '" + tok + "' in a q=2 code");
      h.set(i, j, v);
    }
  }

  ClassicalCode c = from_parity_check(q, h);

  std::string tok;
  if (in >> tok) {
    if (tok != "d") throw std::invalid_argument("code file: unexpected trailing token '" + tok + "'");
    long long d;
    if (!(in >> d) || d < 1 || static_cast<size_t>(d) > n)
      throw std::invalid_argument("code file: bad declared distance");
    c.declare_distance(static_cast<size_t>(d));
  }
  return c;
}

ClassicalCode ClassicalCode::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file: " + path);
  ClassicalCode c = from_stream(in);
  c.name = path;
  return c;
}

F4Matrix ClassicalCode::generator() const {
  // H = [I | A]  =>  G = [A^T | I_k] (characteristic 2, so -A^T = A^T).
  F4Matrix g(k_, n_);
  F4Matrix a = a_block();
  for (size_t i = 0; i < k_; ++i) {
    for (size_t j = 0; j < n_ - k_; ++j) g.set(i, j, a.get(j, i));
    g.set(i, n_ - k_ + i, GF4::one());
  }
  return g;
}

size_t ClassicalCode::distance() const {
  if (!d_)
    throw std::invalid_argument("ClassicalCode: distance unknown; compute it or declare it "
                                "(code file line 'd <int>')");
  return *d_;
}

void ClassicalCode::declare_distance(size_t d) {
  if (d < 1 || d > n_) throw std::invalid_argument("ClassicalCode: distance out of range");
  d_ = d;
  d_declared_ = true;
}

void ClassicalCode::compute_distance(uint64_t cap) {
  d_ = min_distance(*this, cap);
  d_declared_ = false;
}

size_t min_distance(const ClassicalCode& code, uint64_t cap) {
  const size_t k = code.k();
  const unsigned bits_per_digit = code.q() == 4 ? 2 : 1;
  if (k * bits_per_digit >= 63 || (uint64_t{1} << (k * bits_per_digit)) > cap) {
    throw std::invalid_argument(
        "min_distance: q^k exceeds the enumeration cap; declare d explicitly");
  }

  const F4Matrix g = code.generator();
  const uint64_t n_msgs = uint64_t{1} << (k * bits_per_digit);
  const uint8_t digit_mask = code.q() == 4 ? 3 : 1;

  size_t best = code.n() + 1;
  for (uint64_t msg = 1; msg < n_msgs; ++msg) {
    F4Vector cw(code.n());
    uint64_t m = msg;
    for (size_t i = 0; i < k; ++i, m >>= bits_per_digit) {
      GF4 coef(static_cast<uint8_t>(m & digit_mask));
      if (!coef.is_zero()) cw += g.row(i).times(coef);
    }
    size_t w = cw.weight();
    if (w < best) best = w;
  }
  if (best > code.n()) throw std::logic_error("min_distance: no nonzero codeword found");
  return best;
}

bool is_mds(const ClassicalCode& code) { return code.distance() == code.n() - code.k() + 1; }

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct CatalogEntry {
  const char* name;
  int q;
  std::vector<std::string> h_rows;
  size_t expected_d;
};

// mds4_2_q is the length-4 Reed-Solomon code over GF(4) (evaluation at all
// four field elements, degree < 2); ext_rs5_2_q extends it by the
// leading-coefficient position. Both are stored as explicit parity checks.
const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"rep3_b", 2, {"110", "101"}, 3},
      {"hamming7_b", 2, {"1001101", "0101011", "0010111"}, 3},
      {"mds4_2_q", 4, {"10Ww", "01wW"}, 3},
      {"ext_rs5_2_q", 4, {"Ww100", "wW010", "11001"}, 4},
  };
  return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

ClassicalCode catalog_get(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (name == e.name) {
      ClassicalCode c = ClassicalCode::from_parity_check(e.q, F4Matrix::from_strings(e.h_rows));
      c.compute_distance();
      if (c.distance() != e.expected_d)
        throw std::logic_error("catalog: verified distance of " + name +
                               " does not match its record");
      c.name = name;
      return c;
    }
  }
  throw std::invalid_argument("catalog: unknown code '" + name + "'");
}

}  // namespace lnq
