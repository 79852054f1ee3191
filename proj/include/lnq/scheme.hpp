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

#ifndef LNQ_SCHEME_HPP_
#define LNQ_SCHEME_HPP_

#include <string>

#include "lnq/classical_code.hpp"
#include "lnq/linalg.hpp"

namespace lnq {

// Qubit layout shared by every scheme derived from an [n,k] code:
// 2(n-k) ancilla qubits followed by k data qubits, 2n-k physical in total.
struct Layout {
  size_t n = 0, k = 0;
  size_t nmk() const { return n - k; }
  size_t n_anc() const { return 2 * (n - k); }
  size_t n_phys() const { return 2 * n - k; }
  bool operator==(const Layout&) const = default;
};

// A discretized quantum error on the 2n-k physical qubits: the operator
// X^x Z^z with x, z over GF(2)^(2n-k). Qubit i carries X iff x[i], Z iff
// z[i], Y meaning both. Named segments follow the qubit layout:
//   x = (x_l | x_r)          ancilla block, data block
//   z = (z_l0 | z_l1 | z_r)  first n-k ancillas, next n-k, data block
class PauliError {
 public:
  explicit PauliError(Layout lay) : lay_(lay), x_(lay.n_phys()), z_(lay.n_phys()) {}
  PauliError(Layout lay, F2Vector x, F2Vector z);

  Layout layout() const { return lay_; }
  const F2Vector& x() const { return x_; }
  const F2Vector& z() const { return z_; }
  F2Vector& x() { return x_; }
  F2Vector& z() { return z_; }

  F2Vector x_l() const { return x_.slice(0, lay_.n_anc()); }
  F2Vector x_r() const { return x_.slice(lay_.n_anc(), lay_.k); }
  F2Vector z_l() const { return z_.slice(0, lay_.n_anc()); }
  F2Vector z_l0() const { return z_.slice(0, lay_.nmk()); }
  F2Vector z_l1() const { return z_.slice(lay_.nmk(), lay_.nmk()); }
  F2Vector z_r() const { return z_.slice(lay_.n_anc(), lay_.k); }

  // |supp(x) u supp(z)|: the number of qubits hit by any Pauli.
  size_t union_weight() const { return (x_ | z_).weight(); }

  bool operator==(const PauliError&) const = default;
  std::string str() const;  // "IXZY" string, '|' between ancilla and data blocks

 private:
  Layout lay_;
  F2Vector x_, z_;
};

enum class Variant { quaternary, binary };

// The derived quantum scheme. For a quaternary code, h_q stacks H over wH
// and h_z/h_x are its unique binary planes, of block shape
//   h_z = [I .. | .]    h_x = [0 .. | .]
//         [0 .. | .]          [I .. | .]
// with right-hand k-column blocks h_zp and h_xp (the primed matrices that
// parameterize the encoding operator Q). A binary code is lifted into
// GF(4) and follows the same path, which lands exactly on
// h_zp = [A ; 0], h_xp = [0 ; A].
//
// `dual` marks the Hadamard-rotated variant that tolerates ancilla bit
// errors instead of phase errors: ancillas are prepared and measured in
// the computational basis and the ancilla halves of (x, z) swap roles.
struct Scheme {
  ClassicalCode code;
  Variant variant = Variant::quaternary;
  bool dual = false;
  Layout layout;

  F4Matrix h_q;         // 2(n-k) x n
  F2Matrix h_z, h_x;    // binary planes of h_q
  F2Matrix h_zp, h_xp;  // right k columns of h_z, h_x
  F2Matrix h_zp_hxp_t;  // h_zp * h_xp^T, used by the closed form

  std::string variant_name() const;  // "q4", "q2", "q4-dual", "q2-dual"
  bool matrices_equal(const Scheme& o) const;
};

Scheme build_quaternary(const ClassicalCode& code);
Scheme build_binary(const ClassicalCode& code);
Scheme build_scheme(const ClassicalCode& code);  // dispatch on code.q()

// Toggles between phase-error-tolerant and bit-error-tolerant ancillas.
// An involution: dualize(dualize(s)) has the same matrices and flags as s.
Scheme dualize(Scheme s);

// Exchanges the ancilla halves of x and z (a Hadamard on the ancillas maps
// X^a Z^b to X^b Z^a up to phase). Data segments are untouched.
PauliError swap_ancilla_roles(const PauliError& err);

// The error with the scheme's frame applied: identity for a primal scheme,
// swap_ancilla_roles for a dual one.
PauliError effective_error(const Scheme& s, const PauliError& err);

// The canonical physical error realizing a combined GF(4)^n error with no
// forbidden ancilla component: x_l = 0 for a primal scheme, z_l = 0 for a
// dual one. Its data segments are the trace segments of e.
PauliError pauli_from_combined(const Scheme& s, const F4Vector& e);

// Writes the one allowed ancilla Pauli (Z, or X when dual) on ancilla i.
void set_allowed_ancilla_error(const Scheme& s, PauliError& err, size_t anc_index);
// Writes X (pauli=0), Z (1), or Y (2) on data qubit j.
void set_data_error(Layout lay, PauliError& err, size_t data_index, unsigned pauli);

// The combined GF(4)^n error whose trace syndrome the measurement reveals:
//   e = w2*(z_l0, x_r) + (z_l1, z_r),
// so that Tr(e) = (z_l0, x_r) and Tr(w e) = (z_l1, z_r).
F4Vector combined_error(Layout lay, const PauliError& err);

// Trace syndrome Tr(H_Q e^T), evaluated over GF(4).
F2Vector trace_syndrome(const Scheme& s, const F4Vector& e);
// Same value by the split identity H_Z Tr(e^T) + H_X Tr(w e^T); kept as an
// independent evaluation path and compared against the direct one in tests.
F2Vector trace_syndrome_split(const Scheme& s, const F4Vector& e);

// Deterministic state after encode -> error -> decode-conjugate:
//   ancilla readout  m = h_zp x_r^T + h_xp z_r^T + h_zp h_xp^T x_l^T + z_l^T
//   data residual    X^(x_l h_xp + x_r) Z^(x_l h_zp + z_r)
// in terms of the effective (frame-adjusted) error segments. When x_l = 0
// the readout reduces to Tr(H_Q e^T) and the residual to X^(x_r) Z^(z_r).
struct Propagation {
  F2Vector anc_outcome;        // 2(n-k) measurement bits
  F2Vector data_x, data_z;     // residual Pauli on the k data qubits
  bool assumption_violated;    // effective x_l was nonzero
};
Propagation propagate_closed_form(const Scheme& s, const PauliError& err);

// Entanglement-assisted parameters [[k, k, >=d; 2(n-k)]] obtained when the
// ancillas are noiseless. d is a lower bound on the true distance.
struct EaParameters {
  size_t n_e = 0, k_e = 0, d_e = 0, c = 0;
  bool d_declared = false;
};
EaParameters ea_parameters(const ClassicalCode& code);

// Quantum Singleton bound k_e - c <= n_e - 2 d_e + 2, stated for
// n_e >= 2(d_e - 1). `slack` is (n_e - 2 d_e + 2) - (k_e - c), computed
// unconditionally; `applicable` records whether the hypothesis holds.
// MDS input codes give slack 0.
struct SingletonReport {
  long long slack = 0;
  bool applicable = false;
  bool saturates = false;  // slack == 0
};
SingletonReport singleton_slack(const EaParameters& p);

}  // namespace lnq

#endif  // LNQ_SCHEME_HPP_
