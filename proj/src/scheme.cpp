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

#include "lnq/scheme.hpp"

#include <stdexcept>

namespace lnq {

PauliError::PauliError(Layout lay, F2Vector x, F2Vector z)
    : lay_(lay), x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != lay.n_phys() || z_.size() != lay.n_phys())
    throw std::invalid_argument("PauliError: vectors must have length 2n-k");
}

std::string PauliError::str() const {
  std::string s;
  for (size_t i = 0; i < lay_.n_phys(); ++i) {
    if (i == lay_.n_anc()) s += '|';
    s += "IXZY"[x_.get(i) | (z_.get(i) << 1)];
  }
  return s;
}

std::string Scheme::variant_name() const {
  std::string base = variant == Variant::quaternary ? "q4" : "q2";
  return dual ? base + "-dual" : base;
}

bool Scheme::matrices_equal(const Scheme& o) const {
  return layout == o.layout && variant == o.variant && dual == o.dual && h_q == o.h_q &&
         h_z == o.h_z && h_x == o.h_x && h_zp == o.h_zp && h_xp == o.h_xp;
}

namespace {

// The construction is shared: the binary case is the quaternary case run on
// the GF(4) lift of H, whose planes land exactly on the stacked-A blocks.
Scheme build_impl(const ClassicalCode& code, Variant variant) {
  const size_t n = code.n(), k = code.k(), nmk = n - k;

  Scheme s;
  s.code = code;
  s.variant = variant;
  s.layout = Layout{n, k};
  s.h_q = F4Matrix::vstack(code.h(), code.h().times_omega());
  s.h_z = s.h_q.plane1();
  s.h_x = s.h_q.planew();
  s.h_zp = s.h_z.submatrix(0, nmk, 2 * nmk, k);
  s.h_xp = s.h_x.submatrix(0, nmk, 2 * nmk, k);
  s.h_zp_hxp_t = s.h_zp.mul(s.h_xp.transposed());

  // Block shapes forced by H = [I | A]: left halves of h_z and h_x are
  // [I ; 0] and [0 ; I]. A violation would be a construction bug.
  if (!s.h_z.submatrix(0, 0, nmk, nmk).is_identity() ||
      !s.h_z.submatrix(nmk, 0, nmk, nmk).is_zero() ||
      !s.h_x.submatrix(0, 0, nmk, nmk).is_zero() ||
      !s.h_x.submatrix(nmk, 0, nmk, nmk).is_identity())
    throw std::logic_error("build_scheme: Z/X matrices lost their block shape");
  return s;
}

}  // namespace

Scheme build_quaternary(const ClassicalCode& code) {
  if (code.q() != 4) throw std::invalid_argument("build_quaternary: code is not over GF(4)");
  return build_impl(code, Variant::quaternary);
}

Scheme build_binary(const ClassicalCode& code) {
  if (code.q() != 2) throw std::invalid_argument("build_binary: code is not over GF(2)");
  Scheme s = build_impl(code, Variant::binary);

  // For binary H = [I | A] the primed blocks are the stacked forms.
  const size_t nmk = code.n() - code.k(), k = code.k();
  F2Matrix a = code.a_block().to_f2();
  if (!(s.h_zp.submatrix(0, 0, nmk, k) == a) || !s.h_zp.submatrix(nmk, 0, nmk, k).is_zero() ||
      !s.h_xp.submatrix(0, 0, nmk, k).is_zero() || !(s.h_xp.submatrix(nmk, 0, nmk, k) == a))
    throw std::logic_error("build_binary: primed blocks are not [A;0], [0;A]");
  return s;
}

Scheme build_scheme(const ClassicalCode& code) {
  return code.q() == 4 ? build_quaternary(code) : build_binary(code);
}

Scheme dualize(Scheme s) {
  s.dual = !s.dual;
  return s;
}

PauliError swap_ancilla_roles(const PauliError& err) {
  const Layout lay = err.layout();
  F2Vector x = concat(err.z_l(), err.x_r());
  F2Vector z = concat(err.x_l(), err.z_r());
  return PauliError(lay, std::move(x), std::move(z));
}

PauliError effective_error(const Scheme& s, const PauliError& err) {
  return s.dual ? swap_ancilla_roles(err) : err;
}

PauliError pauli_from_combined(const Scheme& s, const F4Vector& e) {
  const Layout lay = s.layout;
  if (e.size() != lay.n) throw std::invalid_argument("pauli_from_combined: length mismatch");
  const F2Vector t0 = e.trace();        // (z_l0, x_r)
  const F2Vector t1 = e.trace_omega();  // (z_l1, z_r)
  F2Vector x = concat(F2Vector(lay.n_anc()), t0.slice(lay.nmk(), lay.k));
  F2Vector z = concat(concat(t0.slice(0, lay.nmk()), t1.slice(0, lay.nmk())),
                      t1.slice(lay.nmk(), lay.k));
  PauliError err(lay, std::move(x), std::move(z));
  return s.dual ? swap_ancilla_roles(err) : err;
}

void set_allowed_ancilla_error(const Scheme& s, PauliError& err, size_t anc_index) {
  if (s.dual)
    err.x().set(anc_index, true);
  else
    err.z().set(anc_index, true);
}

void set_data_error(Layout lay, PauliError& err, size_t data_index, unsigned pauli) {
  const size_t q = lay.n_anc() + data_index;
  if (pauli != 1) err.x().set(q, true);
  if (pauli != 0) err.z().set(q, true);
}

F4Vector combined_error(Layout lay, const PauliError& err) {
  if (!(lay == err.layout())) throw std::invalid_argument("combined_error: layout mismatch");
  F2Vector t0 = concat(err.z_l0(), err.x_r());  // becomes Tr(e)
  F2Vector t1 = concat(err.z_l1(), err.z_r());  // becomes Tr(w e)
  return reconstruct_from_traces(t0, t1);
}

F2Vector trace_syndrome(const Scheme& s, const F4Vector& e) {
  if (e.size() != s.layout.n) throw std::invalid_argument("trace_syndrome: length mismatch");
  return s.h_q.mul(e).trace();
}

F2Vector trace_syndrome_split(const Scheme& s, const F4Vector& e) {
  if (e.size() != s.layout.n) throw std::invalid_argument("trace_syndrome_split: length mismatch");
  return s.h_z.mul(e.trace()) ^ s.h_x.mul(e.trace_omega());
}

Propagation propagate_closed_form(const Scheme& s, const PauliError& err) {
  const PauliError eff = effective_error(s, err);
  const F2Vector xl = eff.x_l();

  Propagation p;
  p.assumption_violated = !xl.is_zero();
  p.anc_outcome = s.h_zp.mul(eff.x_r()) ^ s.h_xp.mul(eff.z_r()) ^ s.h_zp_hxp_t.mul(xl) ^ eff.z_l();
  p.data_x = s.h_xp.mul_left(xl) ^ eff.x_r();
  p.data_z = s.h_zp.mul_left(xl) ^ eff.z_r();
  return p;
}

EaParameters ea_parameters(const ClassicalCode& code) {
  EaParameters p;
  p.n_e = code.k();
  p.k_e = code.k();
  p.d_e = code.distance();  // lower bound on the EA code's distance
  p.c = 2 * (code.n() - code.k());
  p.d_declared = code.distance_declared();
  return p;
}

SingletonReport singleton_slack(const EaParameters& p) {
  SingletonReport r;
  const long long ne = static_cast<long long>(p.n_e), ke = static_cast<long long>(p.k_e),
                  de = static_cast<long long>(p.d_e), c = static_cast<long long>(p.c);
  r.applicable = ne >= 2 * (de - 1);
  r.slack = (ne - 2 * de + 2) - (ke - c);
  r.saturates = r.slack == 0;
  return r;
}

}  // namespace lnq
