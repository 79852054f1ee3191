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

#include "lnq/syndrome_table.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace lnq {

namespace {

// Lexicographically next support set of fixed size, or false when done.
bool next_combination(std::vector<size_t>& idx, size_t n) {
  const size_t w = idx.size();
  for (size_t i = w; i-- > 0;) {
    if (idx[i] + (w - i) < n) {
      ++idx[i];
      for (size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Numeric comparison of equal-length little-endian bit strings.
bool key_less(const F2Vector& a, const F2Vector& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (size_t i = wa.size(); i-- > 0;)
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  return false;
}

void put_u32(std::ostream& out, uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

void put_u64(std::ostream& out, uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw std::invalid_argument("syndrome table: truncated file");
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
  return v;
}

uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw std::invalid_argument("syndrome table: truncated file");
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

void put_bits(std::ostream& out, const F2Vector& v) {
  const size_t nbytes = (v.size() + 7) / 8;
  for (size_t i = 0; i < nbytes; ++i) {
    unsigned char byte = 0;
    for (size_t b = 0; b < 8; ++b) {
      size_t bit = 8 * i + b;
      if (bit < v.size() && v.get(bit)) byte |= 1u << b;
    }
    out.put(static_cast<char>(byte));
  }
}

F2Vector get_bits(std::istream& in, size_t nbits) {
  F2Vector v(nbits);
  const size_t nbytes = (nbits + 7) / 8;
  for (size_t i = 0; i < nbytes; ++i) {
    int c = in.get();
    if (c < 0) throw std::invalid_argument("syndrome table: truncated file");
    for (size_t b = 0; b < 8; ++b) {
      size_t bit = 8 * i + b;
      if (bit < nbits && ((c >> b) & 1)) v.set(bit, true);
    }
  }
  return v;
}

constexpr char kMagic[4] = {'Q', 'S', 'T', 'B'};
constexpr uint32_t kFormatVersion = 1;

}  // namespace

uint64_t SyndromeTable::ball_size(size_t n, unsigned t) {
  // Saturates instead of overflowing; a saturated count simply fails the
  // cap check in build().
  constexpr uint64_t kMax = ~uint64_t{0};
  auto mul_sat = [](uint64_t a, uint64_t b) { return (a && b > kMax / a) ? kMax : a * b; };
  uint64_t total = 0, binom = 1, pow3 = 1;
  for (unsigned i = 0; i <= t && i <= n; ++i) {
    const uint64_t term = mul_sat(binom, pow3);
    total = total > kMax - term ? kMax : total + term;
    binom = mul_sat(binom, n - i) == kMax ? kMax : binom * (n - i) / (i + 1);
    pow3 = mul_sat(pow3, 3);
  }
  return total;
}

SyndromeTable SyndromeTable::build(const Scheme& s, unsigned t, uint64_t cap) {
  const size_t n = s.layout.n;
  if (!s.code.has_distance())
    throw std::invalid_argument("syndrome table: code distance unknown; compute or declare it");
  if (t > s.code.correction_radius())
    throw std::invalid_argument("syndrome table: t exceeds floor((d-1)/2) = " +
                                std::to_string(s.code.correction_radius()));
  if (ball_size(n, t) > cap)
    throw std::invalid_argument("syndrome table: enumeration would exceed the entry cap");

  SyndromeTable table;
  table.lay_ = s.layout;
  table.variant_ = s.variant;
  table.t_ = t;

  const GF4 nonzero[3] = {GF4::one(), GF4::omega(), GF4::omega2()};

  for (unsigned w = 0; w <= t && w <= n; ++w) {
    std::vector<size_t> supp(w);
    for (size_t i = 0; i < w; ++i) supp[i] = i;
    do {
      // Odometer over the 3^w nonzero patterns on this support.
      std::vector<unsigned> pat(w, 0);
      while (true) {
        F4Vector e(n);
        for (size_t i = 0; i < w; ++i) e.set(supp[i], nonzero[pat[i]]);
        F2Vector key = trace_syndrome(s, e);
        auto [it, inserted] = table.map_.emplace(std::move(key), std::move(e));
        if (!inserted)
          throw std::logic_error(
              "syndrome table: key collision between weight-<=t errors; "
              "trace-syndrome injectivity is violated (internal error)");
        size_t d = w;
        while (d-- > 0) {
          if (++pat[d] < 3) break;
          pat[d] = 0;
        }
        if (d == static_cast<size_t>(-1)) break;
        if (w == 0) break;
      }
    } while (w > 0 && next_combination(supp, n));
  }

  if (table.map_.size() != ball_size(n, t))
    throw std::logic_error("syndrome table: enumeration produced the wrong entry count");
  return table;
}

const F4Vector* SyndromeTable::lookup(const F2Vector& key) const {
  auto it = map_.find(key);
  return it == map_.end() ? nullptr : &it->second;
}

std::optional<Correction> SyndromeTable::decode(const F2Vector& anc_outcome) const {
  const F4Vector* e = lookup(anc_outcome);
  if (!e) return std::nullopt;
  const size_t k = lay_.k, nmk = lay_.nmk();
  Correction c;
  c.data_x = e->trace().slice(nmk, k);        // x_r segment of the identified error
  c.data_z = e->trace_omega().slice(nmk, k);  // z_r segment
  c.error = *e;
  return c;
}

std::vector<std::pair<F2Vector, F4Vector>> SyndromeTable::sorted_entries() const {
  std::vector<std::pair<F2Vector, F4Vector>> v(map_.begin(), map_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return key_less(a.first, b.first); });
  return v;
}

// On-disk layout, all integers little-endian:
//   magic "QSTB" | u32 version | u8 variant (0=q4, 1=q2) | u8 t | u16 0
//   u64 n | u64 k | u64 entry count
//   entries sorted by key: key bits (ceil(2(n-k)/8) bytes) then the error's
//   plane1 and planew bits (ceil(n/8) bytes each), all packed LSB-first.
void SyndromeTable::write(std::ostream& out) const {
  out.write(kMagic, 4);
  put_u32(out, kFormatVersion);
  out.put(variant_ == Variant::quaternary ? '\0' : '\1');
  out.put(static_cast<char>(t_));
  out.put('\0');
  out.put('\0');
  put_u64(out, lay_.n);
  put_u64(out, lay_.k);
  put_u64(out, map_.size());
  for (const auto& [key, e] : sorted_entries()) {
    put_bits(out, key);
    put_bits(out, e.plane1());
    put_bits(out, e.planew());
  }
  if (!out) throw std::runtime_error("syndrome table: write failed");
}

SyndromeTable SyndromeTable::read(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string_view(magic, 4) != std::string_view(kMagic, 4))
    throw std::invalid_argument("syndrome table: bad magic");
  if (get_u32(in) != kFormatVersion)
    throw std::invalid_argument("syndrome table: unsupported format version");
  int variant_byte = in.get();
  int t_byte = in.get();
  in.get();
  in.get();
  if (variant_byte < 0 || variant_byte > 1 || t_byte < 0)
    throw std::invalid_argument("syndrome table: bad header");
  SyndromeTable table;
  table.variant_ = variant_byte == 0 ? Variant::quaternary : Variant::binary;
  table.t_ = static_cast<unsigned>(t_byte);
  size_t n = get_u64(in);
  size_t k = get_u64(in);
  if (k >= n) throw std::invalid_argument("syndrome table: bad dimensions");
  table.lay_ = Layout{n, k};
  uint64_t count = get_u64(in);
  for (uint64_t i = 0; i < count; ++i) {
    F2Vector key = get_bits(in, 2 * (n - k));
    F2Vector p1 = get_bits(in, n);
    F2Vector pw = get_bits(in, n);
    auto [it, inserted] = table.map_.emplace(std::move(key), F4Vector(std::move(p1), std::move(pw)));
    if (!inserted) throw std::invalid_argument("syndrome table: duplicate key in file");
  }
  return table;
}

bool SyndromeTable::operator==(const SyndromeTable& o) const {
  return lay_ == o.lay_ && variant_ == o.variant_ && t_ == o.t_ && map_ == o.map_;
}

CycleResult run_cycle(const Scheme& s, const SyndromeTable& table, const PauliError& err) {
  if (!(table.layout() == s.layout))
    throw std::invalid_argument("run_cycle: table does not match the scheme");

  const Propagation prop = propagate_closed_form(s, err);

  CycleResult r;
  r.assumption_violated = prop.assumption_violated;
  auto corr = table.decode(prop.anc_outcome);
  if (!corr) {
    r.decoded = false;
    r.success = false;
    r.residual_x = prop.data_x;
    r.residual_z = prop.data_z;
    return r;
  }
  r.decoded = true;
  r.residual_x = prop.data_x ^ corr->data_x;
  r.residual_z = prop.data_z ^ corr->data_z;
  r.success = r.residual_x.is_zero() && r.residual_z.is_zero();
  return r;
}

}  // namespace lnq
