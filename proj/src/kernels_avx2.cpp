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

// AVX2 + FMA amplitude kernels. One __m256d holds two complex<double>
// amplitudes as [re0, im0, re1, im1]. Compiled with -mavx2 -mfma and
// selected at runtime; equivalence against the scalar kernels is enforced
// by tests/kernels_test.cpp.

#include <immintrin.h>

#include <bit>

#include "lnq/kernels.hpp"

namespace lnq::kern::avx2 {

namespace {

inline bool parity(uint64_t v) { return std::popcount(v) & 1; }

// Sign masks per 2-complex vector, indexed by (negate_c0 | negate_c1 << 1).
// XORing the IEEE sign bit negates without touching the mantissa, keeping
// results bitwise identical to the scalar kernels.
const __m256d kSignMask[4] = {
    _mm256_castsi256_pd(_mm256_set_epi64x(0, 0, 0, 0)),
    _mm256_castsi256_pd(_mm256_set_epi64x(0, 0, INT64_MIN, INT64_MIN)),
    _mm256_castsi256_pd(_mm256_set_epi64x(INT64_MIN, INT64_MIN, 0, 0)),
    _mm256_castsi256_pd(_mm256_set_epi64x(INT64_MIN, INT64_MIN, INT64_MIN, INT64_MIN)),
};

inline double* dp(cplx* a) { return reinterpret_cast<double*>(a); }
inline const double* dp(const cplx* a) { return reinterpret_cast<const double*>(a); }

inline __m256d load2(const cplx* a, size_t i) { return _mm256_loadu_pd(dp(a) + 2 * i); }
inline void store2(cplx* a, size_t i, __m256d v) { _mm256_storeu_pd(dp(a) + 2 * i, v); }

// Swaps the two complex halves of a vector: [c0, c1] -> [c1, c0].
inline __m256d swap_cplx(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x01); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void phase(cplx* a, size_t n, uint64_t zmask) {
  if (zmask == 0) return;
  if (n < 2) {
    scalar_ops().phase(a, n, zmask);
    return;
  }
  const unsigned zlow = static_cast<unsigned>(zmask & 1);
  for (size_t i = 0; i < n; i += 2) {
    const unsigned s0 = parity(i & zmask);
    const unsigned s1 = s0 ^ zlow;  // i is even, so (i+1) flips only bit 0
    const unsigned idx = s0 | (s1 << 1);
    if (idx) store2(a, i, _mm256_xor_pd(load2(a, i), kSignMask[idx]));
  }
}

void pauli(cplx* a, size_t n, uint64_t xmask, uint64_t zmask) {
  if (xmask == 0) {
    phase(a, n, zmask);
    return;
  }
  if (n < 4) {
    scalar_ops().pauli(a, n, xmask, zmask);
    return;
  }
  const unsigned zlow = static_cast<unsigned>(zmask & 1);
  const uint64_t top = uint64_t{1} << (63 - std::countl_zero(xmask));

  if (xmask == 1) {
    // Partner lives in the same vector: swap halves, then sign.
    for (size_t i = 0; i < n; i += 2) {
      const unsigned s1 = parity((i + 1) & zmask);  // sign written to slot i
      const unsigned s0 = s1 ^ zlow;                // sign written to slot i+1
      store2(a, i, _mm256_xor_pd(swap_cplx(load2(a, i)), kSignMask[s1 | (s0 << 1)]));
    }
    return;
  }

  // Enumerate each pair {i, i^x} once via indices with the top x-bit clear;
  // those form runs of length `top` >= 2 starting at even offsets.
  if ((xmask & 1) == 0) {
    for (size_t base = 0; base < n; base += 2 * top) {
      for (size_t i = base; i < base + top; i += 2) {
        const size_t j = i ^ xmask;  // even as well
        const unsigned qi = parity(j & zmask);          // sign pair written at i
        const unsigned pi = parity(i & zmask);          // sign pair written at j
        __m256d vi = load2(a, i), vj = load2(a, j);
        store2(a, i, _mm256_xor_pd(vj, kSignMask[qi | ((qi ^ zlow) << 1)]));
        store2(a, j, _mm256_xor_pd(vi, kSignMask[pi | ((pi ^ zlow) << 1)]));
      }
    }
    return;
  }

  // x odd with top >= 2: the partner of pair (i, i+1) is (j, j-1), j odd.
  for (size_t base = 0; base < n; base += 2 * top) {
    for (size_t i = base; i < base + top; i += 2) {
      const size_t j = i ^ xmask;
      const unsigned sj = parity(j & zmask);   // sign for value landing at i
      const unsigned si = parity(i & zmask);   // sign for value landing at j
      __m256d vi = load2(a, i);
      __m256d vp = swap_cplx(load2(a, j - 1));  // [a[j], a[j-1]]
      store2(a, i, _mm256_xor_pd(vp, kSignMask[sj | ((sj ^ zlow) << 1)]));
      store2(a, j - 1, _mm256_xor_pd(swap_cplx(vi), kSignMask[(si ^ zlow) | (si << 1)]));
    }
  }
}

void cx(cplx* a, size_t n, unsigned cbit, unsigned tbit) {
  const uint64_t cm = uint64_t{1} << cbit, tm = uint64_t{1} << tbit;
  if (n < 4 || (cbit < tbit && cbit == 0)) {
    scalar_ops().cx(a, n, cbit, tbit);
    return;
  }
  if (cbit > tbit) {
    if (tm == 1) {
      // Adjacent swap: in-vector half swap where bit c is set.
      for (size_t i = 0; i < n; i += 2)
        if (i & cm) store2(a, i, swap_cplx(load2(a, i)));
      return;
    }
    for (size_t base = 0; base < n; base += 2 * tm) {
      if (!(base & cm)) continue;
      for (size_t i = base; i < base + tm; i += 2) {
        __m256d lo = load2(a, i), hi = load2(a, i + tm);
        store2(a, i, hi);
        store2(a, i + tm, lo);
      }
    }
    return;
  }
  // cbit < tbit, cbit >= 1: within each target-clear run, sub-runs with
  // bit c set are contiguous blocks of length cm >= 2.
  for (size_t base = 0; base < n; base += 2 * tm) {
    for (size_t sub = base + cm; sub < base + tm; sub += 2 * cm) {
      for (size_t i = sub; i < sub + cm; i += 2) {
        __m256d lo = load2(a, i), hi = load2(a, i + tm);
        store2(a, i, hi);
        store2(a, i + tm, lo);
      }
    }
  }
}

void cz(cplx* a, size_t n, unsigned b1, unsigned b2) {
  if (n < 4) {
    scalar_ops().cz(a, n, b1, b2);
    return;
  }
  const unsigned lo_bit = b1 < b2 ? b1 : b2;
  const unsigned hi_bit = b1 < b2 ? b2 : b1;
  const uint64_t lm = uint64_t{1} << lo_bit, hm = uint64_t{1} << hi_bit;
  if (lo_bit == 0) {
    // Negate odd complexes inside blocks where the high bit is set.
    for (size_t base = hm; base < n; base += 2 * hm)
      for (size_t i = base; i < base + hm; i += 2)
        store2(a, i, _mm256_xor_pd(load2(a, i), kSignMask[2]));
    return;
  }
  for (size_t base = hm; base < n; base += 2 * hm)
    for (size_t sub = base + lm; sub < base + hm; sub += 2 * lm)
      for (size_t i = sub; i < sub + lm; i += 2)
        store2(a, i, _mm256_xor_pd(load2(a, i), kSignMask[3]));
}

void hadamard(cplx* a, size_t n, unsigned qbit) {
  if (n < 4) {
    scalar_ops().hadamard(a, n, qbit);
    return;
  }
  const __m256d inv_sqrt2 = _mm256_set1_pd(0.7071067811865475244);
  const uint64_t qm = uint64_t{1} << qbit;
  if (qm == 1) {
    for (size_t i = 0; i < n; i += 2) {
      __m256d v = load2(a, i);
      __m256d t = swap_cplx(v);
      __m256d plus = _mm256_add_pd(v, t);   // [u+v, v+u]
      __m256d minus = _mm256_sub_pd(t, v);  // [v-u, u-v]
      __m256d r = _mm256_blend_pd(plus, minus, 0b1100);  // [u+v, u-v]
      store2(a, i, _mm256_mul_pd(r, inv_sqrt2));
    }
    return;
  }
  for (size_t base = 0; base < n; base += 2 * qm) {
    for (size_t i = base; i < base + qm; i += 2) {
      __m256d u = load2(a, i), v = load2(a, i + qm);
      store2(a, i, _mm256_mul_pd(_mm256_add_pd(u, v), inv_sqrt2));
      store2(a, i + qm, _mm256_mul_pd(_mm256_sub_pd(u, v), inv_sqrt2));
    }
  }
}

cplx inner(const cplx* a, const cplx* b, size_t n) {
  if (n < 4) return scalar_ops().inner(a, b, n);
  const __m256d odd_neg =
      _mm256_castsi256_pd(_mm256_set_epi64x(INT64_MIN, 0, INT64_MIN, 0));
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  for (size_t i = 0; i < n; i += 2) {
    __m256d va = load2(a, i), vb = load2(b, i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    // conj(a)*b imaginary part: re(a)*im(b) - im(a)*re(b).
    __m256d vb_swap = _mm256_xor_pd(_mm256_permute_pd(vb, 0b0101), odd_neg);
    acc_im = _mm256_fmadd_pd(va, vb_swap, acc_im);
  }
  return {hsum(acc_re), hsum(acc_im)};
}

double norm_sq(const cplx* a, size_t n) {
  if (n < 4) return scalar_ops().norm_sq(a, n);
  __m256d acc = _mm256_setzero_pd();
  for (size_t i = 0; i < n; i += 2) {
    __m256d v = load2(a, i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  return hsum(acc);
}

void scale(cplx* a, size_t n, double s) {
  if (n < 4) {
    scalar_ops().scale(a, n, s);
    return;
  }
  const __m256d vs = _mm256_set1_pd(s);
  for (size_t i = 0; i < n; i += 2) store2(a, i, _mm256_mul_pd(load2(a, i), vs));
}

}  // namespace

extern const Ops kOps = {"avx2", phase, pauli, cx, cz, hadamard, inner, norm_sq, scale};

}  // namespace lnq::kern::avx2
