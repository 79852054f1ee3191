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

#include "lnq/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "lnq/kernels.hpp"

namespace lnq {

namespace {

constexpr double kProductTol = 1e-10;

uint64_t mask_from_bits(const F2Vector& v, unsigned shift = 0) { return v.low_bits() << shift; }

}  // namespace

StateVector::StateVector(unsigned n_qubits) : nq_(n_qubits) {
  if (n_qubits > kQubitCap)
    throw std::invalid_argument("StateVector: " + std::to_string(n_qubits) +
                                " qubits exceeds the cap of " + std::to_string(kQubitCap));
  a_.assign(size_t{1} << nq_, cplx{0.0, 0.0});
  a_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps) {
  unsigned nq = 0;
  while ((size_t{1} << nq) < amps.size()) ++nq;
  if ((size_t{1} << nq) != amps.size())
    throw std::invalid_argument("StateVector: amplitude count must be a power of two");
  StateVector sv(nq);
  sv.a_ = std::move(amps);
  return sv;
}

void StateVector::apply_h(unsigned q) { kern::ops().hadamard(a_.data(), a_.size(), q); }

void StateVector::apply_cx(unsigned control, unsigned target) {
  kern::ops().cx(a_.data(), a_.size(), control, target);
}

void StateVector::apply_cz(unsigned q0, unsigned q1) {
  kern::ops().cz(a_.data(), a_.size(), q0, q1);
}

void StateVector::apply_pauli_masks(uint64_t xmask, uint64_t zmask) {
  kern::ops().pauli(a_.data(), a_.size(), xmask, zmask);
}

double StateVector::norm() const { return std::sqrt(kern::ops().norm_sq(a_.data(), a_.size())); }

void StateVector::normalize() {
  double n = norm();
  if (n == 0.0) throw std::logic_error("StateVector: cannot normalize the zero vector");
  kern::ops().scale(a_.data(), a_.size(), 1.0 / n);
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.n_amps() != n_amps()) throw std::invalid_argument("StateVector::inner: size mismatch");
  return kern::ops().inner(a_.data(), other.a_.data(), a_.size());
}

GateList gates_for_q(const Scheme& s) {
  if (s.layout.n_phys() > StateVector::kQubitCap)
    throw std::invalid_argument("gates_for_q: scheme exceeds the statevector qubit cap");
  GateList g;
  for (size_t i = 0; i < s.layout.n_anc(); ++i)
    for (size_t j = 0; j < s.layout.k; ++j)
      if (s.h_zp.get(i, j)) g.circuit.push_back({ControlledGate::Kind::cz, i, j});
  for (size_t i = 0; i < s.layout.n_anc(); ++i)
    for (size_t j = 0; j < s.layout.k; ++j)
      if (s.h_xp.get(i, j)) g.circuit.push_back({ControlledGate::Kind::cx, i, j});
  return g;
}

SchemeRegister::SchemeRegister(const Scheme& s, const std::vector<cplx>& psi)
    : s_(&s), sv_(static_cast<unsigned>(s.layout.n_phys())) {
  const size_t k = s.layout.k, n_anc = s.layout.n_anc();
  if (psi.size() != (size_t{1} << k))
    throw std::invalid_argument("SchemeRegister: psi must have 2^k amplitudes");

  auto& a = sv_.amps();
  if (s.dual) {
    // Ancillas in |0> computational: only the mu = 0 block is occupied.
    for (size_t b = 0; b < psi.size(); ++b) a[b] = psi[b];
    for (size_t i = psi.size(); i < a.size(); ++i) a[i] = 0.0;
  } else {
    // Ancillas in |0>_X: uniform positive amplitude over every mu block.
    const double w = std::pow(0.5, static_cast<double>(n_anc) / 2.0);
    for (size_t mu = 0; mu < (size_t{1} << n_anc); ++mu)
      for (size_t b = 0; b < psi.size(); ++b) a[(mu << k) | b] = w * psi[b];
  }
}

void SchemeRegister::apply_q(bool dagger) {
  const size_t k = s_->layout.k;
  const GateList g = gates_for_q(*s_);

  auto h_ancillas = [&] {
    for (size_t i = 0; i < s_->layout.n_anc(); ++i) sv_.apply_h(static_cast<unsigned>(k + i));
  };

  if (s_->dual) h_ancillas();
  auto apply_one = [&](const ControlledGate& cg) {
    const unsigned anc_bit = static_cast<unsigned>(k + cg.anc);
    const unsigned data_bit = static_cast<unsigned>(cg.data);
    if (cg.kind == ControlledGate::Kind::cx)
      sv_.apply_cx(anc_bit, data_bit);
    else
      sv_.apply_cz(anc_bit, data_bit);
  };
  // Q's gates are self-inverse, so Q^dag is the reversed circuit.
  if (!dagger)
    for (auto it = g.circuit.begin(); it != g.circuit.end(); ++it) apply_one(*it);
  else
    for (auto it = g.circuit.rbegin(); it != g.circuit.rend(); ++it) apply_one(*it);
  if (s_->dual) h_ancillas();
}

void SchemeRegister::apply_q_definitional(bool dagger) {
  const size_t k = s_->layout.k, n_anc = s_->layout.n_anc();
  const size_t block = size_t{1} << k;

  auto h_ancillas = [&] {
    for (size_t i = 0; i < n_anc; ++i) sv_.apply_h(static_cast<unsigned>(k + i));
  };

  // Row masks of the primed matrices, as data-index masks.
  std::vector<uint64_t> xrow(n_anc), zrow(n_anc);
  for (size_t i = 0; i < n_anc; ++i) {
    xrow[i] = s_->h_xp.row(i).low_bits();
    zrow[i] = s_->h_zp.row(i).low_bits();
  }

  if (s_->dual) h_ancillas();
  auto& a = sv_.amps();
  for (size_t mu = 0; mu < (size_t{1} << n_anc); ++mu) {
    uint64_t xm = 0, zm = 0;
    for (size_t i = 0; i < n_anc; ++i) {
      if ((mu >> i) & 1) {
        xm ^= xrow[i];
        zm ^= zrow[i];
      }
    }
    if (xm == 0 && zm == 0) continue;
    cplx* blk = a.data() + (mu << k);
    kern::ops().pauli(blk, block, xm, zm);
    // (X^x Z^z)^dag = (-1)^(x.z) X^x Z^z.
    if (dagger && (std::popcount(xm & zm) & 1)) kern::ops().scale(blk, block, -1.0);
  }
  if (s_->dual) h_ancillas();
}

void SchemeRegister::apply_error(const PauliError& err) {
  if (!(err.layout() == s_->layout)) throw std::invalid_argument("apply_error: layout mismatch");
  const unsigned k = static_cast<unsigned>(s_->layout.k);
  // Qubit numbering is ancillas first; index bits put data low, ancillas high.
  const uint64_t xm = mask_from_bits(err.x_r()) | mask_from_bits(err.x_l(), k);
  const uint64_t zm = mask_from_bits(err.z_r()) | mask_from_bits(err.z_l(), k);
  sv_.apply_pauli_masks(xm, zm);
}

SchemeRegister::Measurement SchemeRegister::measure_ancillas() {
  const size_t k = s_->layout.k, n_anc = s_->layout.n_anc();
  const size_t block = size_t{1} << k;

  // X-basis readout = Hadamard then computational readout; a dual scheme
  // measures the computational basis directly.
  if (!s_->dual)
    for (size_t i = 0; i < n_anc; ++i) sv_.apply_h(static_cast<unsigned>(k + i));

  const auto& a = sv_.amps();
  size_t best_mu = 0;
  double best_p = -1.0, total = 0.0;
  for (size_t mu = 0; mu < (size_t{1} << n_anc); ++mu) {
    double p = kern::ops().norm_sq(a.data() + (mu << k), block);
    total += p;
    if (p > best_p) {
      best_p = p;
      best_mu = mu;
    }
  }
  if (total <= 0.0 || best_p / total < 1.0 - kProductTol)
    throw std::logic_error(
        "measure_ancillas: no deterministic outcome; the state is not the "
        "predicted ancilla-data product");

  F2Vector outcome(n_anc);
  for (size_t i = 0; i < n_anc; ++i) outcome.set(i, (best_mu >> i) & 1);

  std::vector<cplx> data(a.begin() + (best_mu << k), a.begin() + ((best_mu + 1) << k));
  StateVector collapsed = StateVector::from_amplitudes(std::move(data));
  collapsed.normalize();
  return {std::move(outcome), std::move(collapsed)};
}

PropagationCheck verify_propagation(const Scheme& s, const PauliError& err,
                               const std::vector<cplx>& psi) {
  SchemeRegister reg(s, psi);
  reg.apply_q(false);
  reg.apply_error(err);
  reg.apply_q(true);
  auto m = reg.measure_ancillas();

  const Propagation pred = propagate_closed_form(s, err);

  PropagationCheck chk;
  chk.outcome_sim = m.outcome;
  chk.outcome_pred = pred.anc_outcome;

  StateVector rhs =
      StateVector::from_amplitudes(apply_pauli_to_state(psi, pred.data_x, pred.data_z));
  chk.fidelity = std::abs(m.data.inner(rhs));
  chk.ok = (m.outcome == pred.anc_outcome) && chk.fidelity >= 1.0 - kProductTol;
  return chk;
}

double end_to_end_fidelity(const Scheme& s, const SyndromeTable& table, const PauliError& err,
                           const std::vector<cplx>& psi) {
  SchemeRegister reg(s, psi);
  reg.apply_q(false);
  reg.apply_error(err);
  reg.apply_q(true);
  auto m = reg.measure_ancillas();

  StateVector out = std::move(m.data);
  if (auto corr = table.decode(m.outcome)) {
    out.apply_pauli_masks(corr->data_x.low_bits(), corr->data_z.low_bits());
  }
  StateVector ref = StateVector::from_amplitudes(psi);
  ref.normalize();
  return std::abs(ref.inner(out));
}

std::vector<cplx> random_state(unsigned k_qubits, Rng& rng) {
  std::vector<cplx> psi(size_t{1} << k_qubits);
  double norm_sq = 0.0;
  for (auto& amp : psi) {
    // Box-Muller; u in (0,1] to keep the log finite.
    const double u = 1.0 - rng.next_unit();
    const double v = rng.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u));
    amp = {r * std::cos(2 * M_PI * v), r * std::sin(2 * M_PI * v)};
    norm_sq += std::norm(amp);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& amp : psi) amp *= inv;
  return psi;
}

std::vector<cplx> apply_pauli_to_state(const std::vector<cplx>& psi, const F2Vector& x,
                                       const F2Vector& z) {
  std::vector<cplx> out = psi;
  kern::ops().pauli(out.data(), out.size(), x.low_bits(), z.low_bits());
  return out;
}

}  // namespace lnq
