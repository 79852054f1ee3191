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

#ifndef LNQ_KERNELS_HPP_
#define LNQ_KERNELS_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>

// Amplitude kernels behind the statevector. Every kernel exists as a
// scalar reference implementation and, on x86-64, as an AVX2 variant; the
// active set is chosen once at runtime from CPU capabilities and the two
// are equivalence-tested against each other. Arrays hold n complex
// amplitudes indexed by basis state; n must be a power of two and masks /
// bit positions must address valid index bits.
//
// Element-moving kernels (pauli, cx, cz, hadamard, phase) are exact sign
// flips, swaps, or two-term butterflies, so scalar and SIMD variants agree
// bitwise. The reductions (inner, norm_sq) may reassociate, so they agree
// only to rounding.

namespace lnq::kern {

using cplx = std::complex<double>;

struct Ops {
  const char* name;
  // a[i] *= (-1)^parity(i & zmask)
  void (*phase)(cplx* a, size_t n, uint64_t zmask);
  // X^x Z^z on index bits: out[i] = (-1)^parity((i^x) & z) * in[i^x]
  void (*pauli)(cplx* a, size_t n, uint64_t xmask, uint64_t zmask);
  // swap a[i] <-> a[i + 2^t] where bit c of i is 1 and bit t is 0
  void (*cx)(cplx* a, size_t n, unsigned cbit, unsigned tbit);
  // a[i] = -a[i] where bits b1 and b2 of i are both 1
  void (*cz)(cplx* a, size_t n, unsigned b1, unsigned b2);
  // butterfly (u, v) -> ((u+v)/sqrt2, (u-v)/sqrt2) across bit q
  void (*hadamard)(cplx* a, size_t n, unsigned qbit);
  // sum conj(a[i]) * b[i]
  cplx (*inner)(const cplx* a, const cplx* b, size_t n);
  // sum |a[i]|^2
  double (*norm_sq)(const cplx* a, size_t n);
  // a[i] *= s
  void (*scale)(cplx* a, size_t n, double s);
};

enum class Backend { auto_detect, scalar, avx2 };

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when not built or not supported by the CPU

// Selects the backend used by ops(); auto_detect prefers AVX2.
// Throws std::invalid_argument when forcing an unavailable backend.
void select_backend(Backend b);
const Ops& ops();

}  // namespace lnq::kern

#endif  // LNQ_KERNELS_HPP_
