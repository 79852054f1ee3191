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

#ifndef LNQ_STATEVECTOR_HPP_
#define LNQ_STATEVECTOR_HPP_

#include <complex>
#include <vector>

#include "lnq/rng.hpp"
#include "lnq/syndrome_table.hpp"

namespace lnq {

using cplx = std::complex<double>;

// Dense statevector on `n_qubits` qubits; qubit q is index bit q.
// Deliberately small and simple: this is the independent oracle the
// algebraic path is checked against, not a performance simulator.
class StateVector {
 public:
  static constexpr unsigned kQubitCap = 14;  // 2^14 amplitudes ~ 0.25 MiB

  explicit StateVector(unsigned n_qubits);  // |0...0>
  static StateVector from_amplitudes(std::vector<cplx> amps);

  unsigned n_qubits() const { return nq_; }
  size_t n_amps() const { return a_.size(); }
  const std::vector<cplx>& amps() const { return a_; }
  std::vector<cplx>& amps() { return a_; }

  void apply_h(unsigned q);
  void apply_cx(unsigned control, unsigned target);
  void apply_cz(unsigned q0, unsigned q1);
  void apply_pauli_masks(uint64_t xmask, uint64_t zmask);

  double norm() const;
  void normalize();
  cplx inner(const StateVector& other) const;  // <this|other>

 private:
  unsigned nq_;
  std::vector<cplx> a_;
};

// Controlled-Pauli decomposition of the encoder Q: ancilla i controls a
// Pauli on data qubit j for every nonzero entry of the primed matrices.
// Stored in circuit order (first gate applied first): the CZ block
// (row-major over h_zp), then the CX block (row-major over h_xp), which
// reproduces the operator X^(mu h_xp) Z^(mu h_zp) acting on |mu>|b>.
// All gates commute within each block, so only the block order matters.
struct ControlledGate {
  enum class Kind { cz, cx };
  Kind kind;
  size_t anc, data;
};
struct GateList {
  std::vector<ControlledGate> circuit;
};
GateList gates_for_q(const Scheme& s);

// A scheme's physical register: data qubits are index bits 0..k-1,
// ancilla i is index bit k+i (so each ancilla pattern mu owns a contiguous
// 2^k amplitude block). Prepared as anc x |psi> with ancillas in |0>_X,
// or |0> computational for a dual scheme.
class SchemeRegister {
 public:
  SchemeRegister(const Scheme& s, const std::vector<cplx>& psi);

  // Q (or its conjugate) via the gate list; a dual scheme wraps the gates
  // in Hadamards on the ancillas.
  void apply_q(bool dagger);
  // Q via its definition: per ancilla pattern mu, apply X^(mu h_xp)
  // Z^(mu h_zp) to the data block. Used to cross-check the gate list.
  void apply_q_definitional(bool dagger);

  void apply_error(const PauliError& err);

  // Reads the deterministic ancilla outcome (X basis, or computational for
  // a dual scheme) and returns the collapsed, normalized data register.
  // Throws std::logic_error when no outcome has probability >= 1 - 1e-10,
  // which would mean the state is not the product the closed form predicts.
  struct Measurement {
    F2Vector outcome;
    StateVector data;
  };
  Measurement measure_ancillas();

  const StateVector& state() const { return sv_; }
  StateVector& state() { return sv_; }

 private:
  const Scheme* s_;
  StateVector sv_;
};

// Gate-simulated LHS of the propagation identity vs. the closed-form RHS,
// compared by fidelity (global phase ignored). ok iff fidelity >= 1 - 1e-10.
struct PropagationCheck {
  bool ok = false;
  double fidelity = 0.0;
  F2Vector outcome_sim, outcome_pred;
};
PropagationCheck verify_propagation(const Scheme& s, const PauliError& err,
                               const std::vector<cplx>& psi);

// Full simulated cycle: encode, error, decode-conjugate, measure, correct.
// Returns |<psi|psi_out>|; decode failures leave the residual uncorrected.
double end_to_end_fidelity(const Scheme& s, const SyndromeTable& table, const PauliError& err,
                           const std::vector<cplx>& psi);

// Normalized k-qubit state with i.i.d. complex Gaussian amplitudes.
std::vector<cplx> random_state(unsigned k_qubits, Rng& rng);

// X^x Z^z applied to a copy of a k-qubit state (data indexing).
std::vector<cplx> apply_pauli_to_state(const std::vector<cplx>& psi, const F2Vector& x,
                                       const F2Vector& z);

}  // namespace lnq

#endif  // LNQ_STATEVECTOR_HPP_
