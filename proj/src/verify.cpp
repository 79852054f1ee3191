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

#include "lnq/verify.hpp"

#include <cmath>
#include <sstream>

namespace lnq {

namespace {

constexpr double kFidTol = 1e-10;

std::string original_coords_str(const Scheme& s, const F4Vector& e_std) {
  return to_original_coords(e_std, s.code.col_perm()).str();
}

std::string describe_error(const Scheme& s, const PauliError& err) {
  std::ostringstream os;
  os << "pauli=" << err.str() << " combined_e(orig coords)="
     << original_coords_str(s, combined_error(s.layout, effective_error(s, err)));
  return os.str();
}

F4Vector random_f4_vector(size_t n, Rng& rng) {
  F4Vector v(n);
  for (size_t i = 0; i < n; ++i) v.set(i, GF4(static_cast<uint8_t>(rng.next_below(4))));
  return v;
}

PauliError random_error(const Scheme& s, Rng& rng) {
  const size_t np = s.layout.n_phys();
  F2Vector x(np), z(np);
  for (size_t i = 0; i < np; ++i) {
    x.set(i, rng.next_below(2));
    z.set(i, rng.next_below(2));
  }
  return PauliError(s.layout, std::move(x), std::move(z));
}

bool sv_capped(const Scheme& s) { return s.layout.n_phys() > StateVector::kQubitCap; }

SuiteResult skipped(std::string name, std::string why) {
  SuiteResult r;
  r.name = std::move(name);
  r.skipped = true;
  r.pass = true;
  r.detail = std::move(why);
  return r;
}

}  // namespace

std::vector<PauliError> enumerate_bounded_errors(const Scheme& s, unsigned t) {
  const Layout lay = s.layout;
  const size_t nq = lay.n_phys();
  std::vector<PauliError> out;

  // Support sets of size w over the physical qubits, with an odometer over
  // per-qubit Pauli choices (ancillas have one allowed Pauli, data have 3).
  std::vector<size_t> supp;
  auto emit_for_support = [&] {
    const size_t w = supp.size();
    std::vector<unsigned> pat(w, 0);
    while (true) {
      PauliError err(lay);
      for (size_t i = 0; i < w; ++i) {
        if (supp[i] < lay.n_anc())
          set_allowed_ancilla_error(s, err, supp[i]);
        else
          set_data_error(lay, err, supp[i] - lay.n_anc(), pat[i]);
      }
      out.push_back(std::move(err));
      size_t d = w;
      bool done = true;
      while (d-- > 0) {
        const unsigned lim = supp[d] < lay.n_anc() ? 1 : 3;
        if (++pat[d] < lim) {
          done = false;
          break;
        }
        pat[d] = 0;
      }
      if (done) break;
    }
  };

  // Iterative combination walk.
  for (unsigned w = 0; w <= t && w <= nq; ++w) {
    supp.assign(w, 0);
    for (size_t i = 0; i < w; ++i) supp[i] = i;
    while (true) {
      emit_for_support();
      if (w == 0) break;
      size_t i = w;
      bool advanced = false;
      while (i-- > 0) {
        if (supp[i] + (w - i) < nq) {
          ++supp[i];
          for (size_t j = i + 1; j < w; ++j) supp[j] = supp[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return out;
}

SuiteResult verify_split_syndrome(const Scheme& s, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "trace-syndrome split identity";
  const size_t n = s.layout.n;

  auto check = [&](const F4Vector& e) -> bool {
    ++r.checks;
    F2Vector direct = trace_syndrome(s, e);
    F2Vector split = trace_syndrome_split(s, e);
    if (direct == split) return true;
    std::ostringstream os;
    os << "e(orig coords)=" << original_coords_str(s, e) << " Tr(H_Q e^T)=" << direct.str()
       << " H_Z Tr(e)+H_X Tr(we)=" << split.str();
    r.detail = os.str();
    return false;
  };

  if (n <= 6) {
    for (uint64_t v = 0; v < (uint64_t{1} << (2 * n)); ++v) {
      F4Vector e(n);
      for (size_t i = 0; i < n; ++i) e.set(i, GF4(static_cast<uint8_t>((v >> (2 * i)) & 3)));
      if (!check(e)) return r;
    }
  } else {
    Rng rng(opt.seed);
    for (uint64_t i = 0; i < opt.random_trials; ++i)
      if (!check(random_f4_vector(n, rng))) return r;
  }
  r.pass = true;
  return r;
}

SuiteResult verify_table_injectivity(const Scheme& s, unsigned t) {
  SuiteResult r;
  r.name = "syndrome-table injectivity";
  try {
    SyndromeTable table = SyndromeTable::build(s, t);
    r.checks = table.size();
    if (table.size() != SyndromeTable::ball_size(s.layout.n, t)) {
      r.detail = "entry count does not match the ball size";
      return r;
    }
    auto zero = table.decode(F2Vector(s.layout.n_anc()));
    if (!zero || !zero->error.is_zero()) {
      r.detail = "zero outcome does not map to the zero error";
      return r;
    }
  } catch (const std::exception& ex) {
    r.detail = ex.what();
    return r;
  }
  r.pass = true;
  return r;
}

SuiteResult verify_propagation_oracle(const Scheme& s, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "closed-form propagation vs statevector";
  if (sv_capped(s)) return skipped(r.name, "scheme exceeds the statevector qubit cap");

  Rng rng(opt.seed ^ 0x70726f7061676174ull);

  auto check = [&](const PauliError& err) -> bool {
    for (unsigned si = 0; si < opt.states_per_error; ++si) {
      ++r.checks;
      auto psi = random_state(static_cast<unsigned>(s.layout.k), rng);
      PropagationCheck chk = verify_propagation(s, err, psi);
      if (chk.ok) continue;
      std::ostringstream os;
      os << describe_error(s, err) << " outcome(sim)=" << chk.outcome_sim.str()
         << " outcome(closed form)=" << chk.outcome_pred.str() << " fidelity=" << chk.fidelity;
      r.detail = os.str();
      return false;
    }
    return true;
  };

  // Zero error and every single-qubit Pauli, forbidden ancilla errors
  // included: the closed form holds for arbitrary errors.
  if (!check(PauliError(s.layout))) return r;
  for (size_t q = 0; q < s.layout.n_phys(); ++q) {
    for (unsigned p = 0; p < 3; ++p) {
      PauliError err(s.layout);
      if (p != 1) err.x().set(q, true);
      if (p != 0) err.z().set(q, true);
      if (!check(err)) return r;
    }
  }
  for (uint64_t i = 0; i < opt.random_trials; ++i)
    if (!check(random_error(s, rng))) return r;
  r.pass = true;
  return r;
}

SuiteResult verify_recovery_algebraic(const Scheme& s, const SyndromeTable& table) {
  SuiteResult r;
  r.name = "in-radius recovery (algebraic)";
  for (const PauliError& err : enumerate_bounded_errors(s, table.radius())) {
    ++r.checks;
    const PauliError eff = effective_error(s, err);
    if (combined_error(s.layout, eff).weight() > err.union_weight()) {
      r.detail = "weight chain |supp(e)| <= |supp(x) u supp(z)| violated for " +
                 describe_error(s, err);
      return r;
    }
    CycleResult res = run_cycle(s, table, err);
    if (!res.success) {
      std::ostringstream os;
      os << describe_error(s, err) << " residual X=" << res.residual_x.str()
         << " Z=" << res.residual_z.str() << (res.decoded ? "" : " (outcome missing from table)");
      r.detail = os.str();
      return r;
    }
  }
  r.pass = true;
  return r;
}

SuiteResult verify_recovery_statevector(const Scheme& s, const SyndromeTable& table,
                                        const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "in-radius recovery (statevector)";
  if (sv_capped(s)) return skipped(r.name, "scheme exceeds the statevector qubit cap");

  Rng rng(opt.seed ^ 0x7265636f76657279ull);

  auto check = [&](const PauliError& err) -> bool {
    for (unsigned si = 0; si < opt.states_per_error; ++si) {
      ++r.checks;
      auto psi = random_state(static_cast<unsigned>(s.layout.k), rng);
      double f = end_to_end_fidelity(s, table, err, psi);
      if (f >= 1.0 - kFidTol) continue;
      std::ostringstream os;
      os << describe_error(s, err) << " fidelity=" << f;
      r.detail = os.str();
      return false;
    }
    return true;
  };

  for (const PauliError& err : enumerate_bounded_errors(s, table.radius()))
    if (!check(err)) return r;
  // Canonical errors of every table entry, covering combined errors whose
  // physical weight exceeds the radius (e.g. paired ancilla phase errors).
  for (const auto& [key, e] : table.sorted_entries())
    if (!check(pauli_from_combined(s, e))) return r;
  r.pass = true;
  return r;
}

SuiteResult verify_miscorrection_prediction(const Scheme& s, const SyndromeTable& table,
                                            const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "forbidden-ancilla-error miscorrection prediction";
  if (sv_capped(s)) return skipped(r.name, "scheme exceeds the statevector qubit cap");

  Rng rng(opt.seed ^ 0x6d69736372723131ull);
  uint64_t produced = 0;
  while (produced < opt.random_trials) {
    PauliError err = random_error(s, rng);
    if (effective_error(s, err).x_l().is_zero()) continue;  // want violations only
    ++produced;
    ++r.checks;

    const Propagation pred = propagate_closed_form(s, err);
    auto psi = random_state(static_cast<unsigned>(s.layout.k), rng);

    SchemeRegister reg(s, psi);
    reg.apply_q(false);
    reg.apply_error(err);
    reg.apply_q(true);
    auto m = reg.measure_ancillas();
    if (!(m.outcome == pred.anc_outcome)) {
      r.detail = describe_error(s, err) + " outcome(sim)=" + m.outcome.str() +
                 " != predicted " + pred.anc_outcome.str();
      return r;
    }

    // Apply the (mis)correction the decoder would issue and compare with
    // the predicted net residual X^(data_x + cx) Z^(data_z + cz).
    F2Vector net_x = pred.data_x, net_z = pred.data_z;
    StateVector out = std::move(m.data);
    if (auto corr = table.decode(m.outcome)) {
      out.apply_pauli_masks(corr->data_x.low_bits(), corr->data_z.low_bits());
      net_x ^= corr->data_x;
      net_z ^= corr->data_z;
    }
    StateVector predicted = StateVector::from_amplitudes(apply_pauli_to_state(psi, net_x, net_z));
    const double fid = std::abs(predicted.inner(out));
    if (fid < 1.0 - kFidTol) {
      std::ostringstream os;
      os << describe_error(s, err) << " net residual X=" << net_x.str() << " Z=" << net_z.str()
         << " fidelity=" << fid;
      r.detail = os.str();
      return r;
    }
  }
  r.pass = true;
  return r;
}

SuiteResult verify_dual_involution(const Scheme& s) {
  SuiteResult r;
  r.name = "dual involution";
  r.checks = 1;
  r.pass = dualize(dualize(s)).matrices_equal(s);
  if (!r.pass) r.detail = "dualize(dualize(s)) differs from s";
  return r;
}

std::vector<SuiteResult> verify_all(const Scheme& s, const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  const unsigned t = s.code.correction_radius();

  out.push_back(verify_split_syndrome(s, opt));
  out.push_back(verify_table_injectivity(s, t));

  SyndromeTable table = SyndromeTable::build(s, t);
  out.push_back(verify_recovery_algebraic(s, table));
  out.push_back(verify_propagation_oracle(s, opt));
  out.push_back(verify_recovery_statevector(s, table, opt));
  out.push_back(verify_miscorrection_prediction(s, table, opt));
  out.push_back(verify_dual_involution(s));
  return out;
}

}  // namespace lnq
