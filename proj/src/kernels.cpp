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

#include "lnq/kernels.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <utility>

namespace lnq::kern {

namespace scalar {

namespace {

inline bool parity(uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

void phase(cplx* a, size_t n, uint64_t zmask) {
  if (zmask == 0) return;
  for (size_t i = 0; i < n; ++i)
    if (parity(i & zmask)) a[i] = -a[i];
}

void pauli(cplx* a, size_t n, uint64_t xmask, uint64_t zmask) {
  if (xmask == 0) {
    phase(a, n, zmask);
    return;
  }
  // Visit each unordered pair {i, i^x} once: take i with the top x-bit clear.
  const uint64_t top = uint64_t{1} << (63 - std::countl_zero(xmask));
  for (size_t i = 0; i < n; ++i) {
    if (i & top) continue;
    const size_t j = i ^ xmask;
    cplx vi = a[i], vj = a[j];
    a[i] = parity((i ^ xmask) & zmask) ? -vj : vj;
    a[j] = parity((j ^ xmask) & zmask) ? -vi : vi;
  }
}

void cx(cplx* a, size_t n, unsigned cbit, unsigned tbit) {
  const uint64_t cm = uint64_t{1} << cbit, tm = uint64_t{1} << tbit;
  for (size_t i = 0; i < n; ++i)
    if ((i & cm) && !(i & tm)) std::swap(a[i], a[i | tm]);
}

void cz(cplx* a, size_t n, unsigned b1, unsigned b2) {
  const uint64_t m = (uint64_t{1} << b1) | (uint64_t{1} << b2);
  for (size_t i = 0; i < n; ++i)
    if ((i & m) == m) a[i] = -a[i];
}

void hadamard(cplx* a, size_t n, unsigned qbit) {
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  const uint64_t qm = uint64_t{1} << qbit;
  for (size_t i = 0; i < n; ++i) {
    if (i & qm) continue;
    const cplx u = a[i], v = a[i | qm];
    a[i] = (u + v) * kInvSqrt2;
    a[i | qm] = (u - v) * kInvSqrt2;
  }
}

cplx inner(const cplx* a, const cplx* b, size_t n) {
  double re = 0, im = 0;
  for (size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq(const cplx* a, size_t n) {
  double s = 0;
  for (size_t i = 0; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

void scale(cplx* a, size_t n, double s) {
  for (size_t i = 0; i < n; ++i) a[i] *= s;
}

const Ops kOps = {"scalar", phase, pauli, cx, cz, hadamard, inner, norm_sq, scale};

}  // namespace scalar

const Ops& scalar_ops() { return scalar::kOps; }

#if defined(LNQ_HAVE_AVX2)
namespace avx2 {
extern const Ops kOps;  // kernels_avx2.cpp
}

namespace {
bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
}  // namespace

const Ops* avx2_ops() { return cpu_has_avx2() ? &avx2::kOps : nullptr; }
#else
const Ops* avx2_ops() { return nullptr; }
#endif

namespace {
std::atomic<const Ops*> g_active{nullptr};
}

void select_backend(Backend b) {
  const Ops* chosen = nullptr;
  switch (b) {
    case Backend::auto_detect:
      chosen = avx2_ops() ? avx2_ops() : &scalar_ops();
      break;
    case Backend::scalar:
      chosen = &scalar_ops();
      break;
    case Backend::avx2:
      if (!avx2_ops()) throw std::invalid_argument("kernels: AVX2 backend not available");
      chosen = avx2_ops();
      break;
  }
  g_active.store(chosen, std::memory_order_release);
}

const Ops& ops() {
  const Ops* p = g_active.load(std::memory_order_acquire);
  if (!p) {
    p = avx2_ops() ? avx2_ops() : &scalar_ops();
    g_active.store(p, std::memory_order_release);
  }
  return *p;
}

}  // namespace lnq::kern
