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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "lnq/rng.hpp"
#include "lnq/syndrome_table.hpp"
#include "lnq/verify.hpp"

using namespace lnq;

namespace {

Scheme tiny_q4() {
  // H = [1 | w], a [2,1]_4 code with d = 2.
  ClassicalCode c = ClassicalCode::from_parity_check(4, F4Matrix::from_strings({"1w"}));
  c.compute_distance();
  return build_quaternary(c);
}

PauliError random_error(Layout lay, Rng& rng) {
  PauliError err(lay);
  for (size_t i = 0; i < lay.n_phys(); ++i) {
    err.x().set(i, rng.next_below(2));
    err.z().set(i, rng.next_below(2));
  }
  return err;
}

PauliError error_from_bits(Layout lay, uint64_t xbits, uint64_t zbits) {
  PauliError err(lay);
  for (size_t i = 0; i < lay.n_phys(); ++i) {
    err.x().set(i, (xbits >> i) & 1);
    err.z().set(i, (zbits >> i) & 1);
  }
  return err;
}

}  // namespace

TEST_CASE("quaternary build: H = [1 | w] worked example") {
  Scheme s = tiny_q4();
  CHECK(s.h_q == F4Matrix::from_strings({"1w", "wW"}));

  // Entrywise decomposition oracle: each entry q of H_Q splits uniquely as
  // q = z + w*x with z, x binary; H_Z and H_X collect those bits.
  for (size_t i = 0; i < s.h_q.rows(); ++i) {
    for (size_t j = 0; j < s.h_q.cols(); ++j) {
      GF4 q = s.h_q.get(i, j);
      int found = 0;
      for (uint8_t z = 0; z < 2; ++z) {
        for (uint8_t x = 0; x < 2; ++x) {
          if (GF4(z) + GF4::omega() * GF4(x) == q) {
            ++found;
            CHECK(s.h_z.get(i, j) == (z == 1));
            CHECK(s.h_x.get(i, j) == (x == 1));
          }
        }
      }
      CHECK(found == 1);  // uniqueness
    }
  }
  CHECK(s.h_z == F2Matrix::from_strings({"10", "01"}));
  CHECK(s.h_x == F2Matrix::from_strings({"01", "11"}));
  CHECK(s.h_zp == F2Matrix::from_strings({"0", "1"}));
  CHECK(s.h_xp == F2Matrix::from_strings({"1", "1"}));
}

TEST_CASE("H_Q = H_Z + w H_X and block shapes, all catalog schemes") {
  for (const auto& name : catalog_names()) {
    Scheme s = build_scheme(catalog_get(name));
    CAPTURE(name);
    const size_t nmk = s.layout.nmk();
    // Plane arithmetic is definitional, so recompose entry by entry.
    F4Matrix recomposed(s.h_q.rows(), s.h_q.cols());
    for (size_t i = 0; i < s.h_q.rows(); ++i)
      for (size_t j = 0; j < s.h_q.cols(); ++j)
        recomposed.set(i, j, GF4(static_cast<uint8_t>(s.h_z.get(i, j))) +
                                 GF4::omega() * GF4(static_cast<uint8_t>(s.h_x.get(i, j))));
    CHECK(recomposed == s.h_q);
    // Top half H, bottom half wH.
    CHECK(s.h_q.submatrix(0, 0, nmk, s.layout.n) == s.code.h());
    CHECK(s.h_q.submatrix(nmk, 0, nmk, s.layout.n) == s.code.h().times_omega());
    // Left blocks [I;0] and [0;I].
    CHECK(s.h_z.submatrix(0, 0, nmk, nmk).is_identity());
    CHECK(s.h_z.submatrix(nmk, 0, nmk, nmk).is_zero());
    CHECK(s.h_x.submatrix(0, 0, nmk, nmk).is_zero());
    CHECK(s.h_x.submatrix(nmk, 0, nmk, nmk).is_identity());
  }
}

TEST_CASE("binary build: stacked primed blocks") {
  Scheme rep = build_binary(catalog_get("rep3_b"));
  CHECK(rep.h_zp == F2Matrix::from_strings({"1", "1", "0", "0"}));
  CHECK(rep.h_xp == F2Matrix::from_strings({"0", "0", "1", "1"}));

  Scheme ham = build_binary(catalog_get("hamming7_b"));
  F2Matrix a = ham.code.a_block().to_f2();
  REQUIRE(ham.h_zp.rows() == 6);
  CHECK(ham.h_zp.submatrix(0, 0, 3, 4) == a);
  CHECK(ham.h_zp.submatrix(3, 0, 3, 4).is_zero());
  CHECK(ham.h_xp.submatrix(0, 0, 3, 4).is_zero());
  CHECK(ham.h_xp.submatrix(3, 0, 3, 4) == a);

  // A = 0 gives vanishing primed blocks.
  ClassicalCode c = ClassicalCode::from_parity_check(2, F4Matrix::from_strings({"10"}));
  c.compute_distance();
  Scheme z = build_binary(c);
  CHECK(z.h_zp.is_zero());
  CHECK(z.h_xp.is_zero());

  CHECK_THROWS_AS(build_binary(catalog_get("mds4_2_q")), std::invalid_argument);
  CHECK_THROWS_AS(build_quaternary(catalog_get("rep3_b")), std::invalid_argument);
}

TEST_CASE("trace syndrome: zero error and codewords are invisible") {
  Scheme s = build_quaternary(catalog_get("mds4_2_q"));
  CHECK(trace_syndrome(s, F4Vector(4)).is_zero());

  // All 16 codewords of the [4,2]_4 code have zero trace syndrome.
  F4Matrix g = s.code.generator();
  for (uint8_t m0 = 0; m0 < 4; ++m0) {
    for (uint8_t m1 = 0; m1 < 4; ++m1) {
      F4Vector msg(2);
      msg.set(0, GF4(m0));
      msg.set(1, GF4(m1));
      F4Vector cw = g.mul_left(msg);
      CHECK(trace_syndrome(s, cw).is_zero());
      CHECK(trace_syndrome_split(s, cw).is_zero());
    }
  }
}

TEST_CASE("trace syndrome: single-position errors are distinct and nonzero") {
  Scheme s = build_quaternary(catalog_get("mds4_2_q"));
  std::set<std::string> seen;
  for (size_t pos = 0; pos < 4; ++pos) {
    for (uint8_t val = 1; val < 4; ++val) {
      F4Vector e(4);
      e.set(pos, GF4(val));
      F2Vector syn = trace_syndrome(s, e);
      CHECK(!syn.is_zero());
      seen.insert(syn.str());
    }
  }
  CHECK(seen.size() == 12);  // all 4*3 single-position errors separated
}

TEST_CASE("split-syndrome identity: exhaustive at n <= 4, random at n = 7") {
  for (const char* name : {"mds4_2_q", "rep3_b"}) {
    Scheme s = build_scheme(catalog_get(name));
    const size_t n = s.layout.n;
    for (uint64_t v = 0; v < (uint64_t{1} << (2 * n)); ++v) {
      F4Vector e(n);
      for (size_t i = 0; i < n; ++i) e.set(i, GF4(static_cast<uint8_t>((v >> (2 * i)) & 3)));
      CHECK(trace_syndrome(s, e) == trace_syndrome_split(s, e));
    }
  }
  Scheme ham = build_binary(catalog_get("hamming7_b"));
  Rng rng(21);
  for (int trial = 0; trial < 10000; ++trial) {
    F4Vector e(7);
    for (size_t i = 0; i < 7; ++i) e.set(i, GF4(static_cast<uint8_t>(rng.next_below(4))));
    CHECK(trace_syndrome(ham, e) == trace_syndrome_split(ham, e));
  }
}

TEST_CASE("combined error: examples and segment identities") {
  Scheme s = build_quaternary(catalog_get("mds4_2_q"));
  const Layout lay = s.layout;  // n=4, k=2, 4 ancillas + 2 data

  CHECK(combined_error(lay, PauliError(lay)).is_zero());

  // X on the first data qubit: e has w2 at the first data coordinate.
  PauliError xd(lay);
  xd.x().set(lay.n_anc() + 0, true);
  CHECK(combined_error(lay, xd) == F4Vector::from_string("00W0"));

  // Z on the third ancilla (first of the z_l1 half): e has a 1 in the
  // ancilla-indexed block.
  PauliError za(lay);
  za.z().set(2, true);
  CHECK(combined_error(lay, za) == F4Vector::from_string("1000"));

  // Tr(e) = (z_l0, x_r) and Tr(w e) = (z_l1, z_r), exhaustive over all
  // 4^5 (x, z) pairs of the 5-qubit rep3_b layout.
  Scheme rep = build_binary(catalog_get("rep3_b"));
  const Layout rl = rep.layout;
  for (uint64_t xb = 0; xb < 32; ++xb) {
    for (uint64_t zb = 0; zb < 32; ++zb) {
      PauliError err = error_from_bits(rl, xb, zb);
      F4Vector e = combined_error(rl, err);
      CHECK(e.trace() == concat(err.z_l0(), err.x_r()));
      CHECK(e.trace_omega() == concat(err.z_l1(), err.z_r()));
    }
  }
}

TEST_CASE("closed form: zero error and the x_l = 0 reduction") {
  for (const char* name : {"mds4_2_q", "hamming7_b"}) {
    Scheme s = build_scheme(catalog_get(name));
    const Layout lay = s.layout;

    Propagation zero = propagate_closed_form(s, PauliError(lay));
    CHECK(zero.anc_outcome.is_zero());
    CHECK(zero.data_x.is_zero());
    CHECK(zero.data_z.is_zero());
    CHECK(!zero.assumption_violated);

    // With x_l = 0 the readout is Tr(H_Q e^T) and the residual is
    // X^(x_r) Z^(z_r).
    Rng rng(31);
    for (int trial = 0; trial < 500; ++trial) {
      PauliError err = random_error(lay, rng);
      for (size_t i = 0; i < lay.n_anc(); ++i) err.x().set(i, false);
      Propagation p = propagate_closed_form(s, err);
      CHECK(!p.assumption_violated);
      CHECK(p.anc_outcome == trace_syndrome(s, combined_error(lay, err)));
      CHECK(p.data_x == err.x_r());
      CHECK(p.data_z == err.z_r());
    }
  }
}

TEST_CASE("closed form equals the trace-syndrome statement for arbitrary errors") {
  // anc_outcome == Tr(H_Q e^T) + H_Z' H_X'^T x_l^T, with e built from the
  // effective error; exhaustive on the 5-qubit rep3_b register.
  for (bool dual : {false, true}) {
    Scheme s = build_binary(catalog_get("rep3_b"));
    if (dual) s = dualize(s);
    const Layout lay = s.layout;
    for (uint64_t xb = 0; xb < 32; ++xb) {
      for (uint64_t zb = 0; zb < 32; ++zb) {
        PauliError err = error_from_bits(lay, xb, zb);
        PauliError eff = effective_error(s, err);
        Propagation p = propagate_closed_form(s, err);
        F2Vector expected =
            trace_syndrome(s, combined_error(lay, eff)) ^ s.h_zp_hxp_t.mul(eff.x_l());
        CHECK(p.anc_outcome == expected);
        CHECK(p.assumption_violated == !eff.x_l().is_zero());
      }
    }
  }
}

TEST_CASE("binary variant: outcome halves are the two classical syndromes") {
  Scheme s = build_binary(catalog_get("hamming7_b"));
  const Layout lay = s.layout;
  F2Matrix h = s.code.h().to_f2();
  Rng rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    PauliError err = random_error(lay, rng);
    for (size_t i = 0; i < lay.n_anc(); ++i) err.x().set(i, false);
    Propagation p = propagate_closed_form(s, err);
    F2Vector e0 = concat(err.z_l0(), err.x_r());
    F2Vector e1 = concat(err.z_l1(), err.z_r());
    CHECK(p.anc_outcome.slice(0, lay.nmk()) == h.mul(e0));
    CHECK(p.anc_outcome.slice(lay.nmk(), lay.nmk()) == h.mul(e1));
  }
}

TEST_CASE("syndrome table: sizes, zero entry, decode round trip") {
  Scheme s = build_quaternary(catalog_get("mds4_2_q"));

  SyndromeTable t0 = SyndromeTable::build(s, 0);
  CHECK(t0.size() == 1);
  auto c0 = t0.decode(F2Vector(s.layout.n_anc()));
  REQUIRE(c0.has_value());
  CHECK(c0->error.is_zero());
  CHECK(c0->data_x.is_zero());

  SyndromeTable t1 = SyndromeTable::build(s, 1);
  CHECK(t1.size() == 13);  // 1 + 4*3
  CHECK(SyndromeTable::ball_size(4, 1) == 13);
  CHECK(SyndromeTable::ball_size(7, 1) == 22);
  CHECK(SyndromeTable::ball_size(7, 2) == 1 + 21 + 189);
  CHECK(SyndromeTable::ball_size(100, 3) == 4410751);
  CHECK(SyndromeTable::ball_size(64, 64) == ~uint64_t{0});  // saturates, no overflow

  // The outcome of a single data X error decodes to exactly that X.
  PauliError xd(s.layout);
  xd.x().set(s.layout.n_anc() + 1, true);
  Propagation p = propagate_closed_form(s, xd);
  auto corr = t1.decode(p.anc_outcome);
  REQUIRE(corr.has_value());
  CHECK(corr->data_x == xd.x_r());
  CHECK(corr->data_z == xd.z_r());

  CHECK(SyndromeTable::build(build_binary(catalog_get("hamming7_b")), 1).size() == 22);

  CHECK_THROWS_AS(SyndromeTable::build(s, 2), std::invalid_argument);  // t > floor((d-1)/2)
  CHECK_THROWS_AS(SyndromeTable::build(s, 1, 5), std::invalid_argument);  // cap exceeded
}

TEST_CASE("run_cycle: guaranteed correction within the radius") {
  for (const char* name : {"mds4_2_q", "hamming7_b", "rep3_b", "ext_rs5_2_q"}) {
    Scheme s = build_scheme(catalog_get(name));
    SyndromeTable table = SyndromeTable::build(s, s.code.correction_radius());
    CAPTURE(name);
    for (const PauliError& err : enumerate_bounded_errors(s, table.radius())) {
      CycleResult res = run_cycle(s, table, err);
      CHECK(res.success);
      CHECK(res.decoded);
      CHECK(!res.assumption_violated);
    }
  }
}

TEST_CASE("run_cycle: a weight-2 error on a d=3 code escapes the table") {
  Scheme s = build_quaternary(catalog_get("mds4_2_q"));
  SyndromeTable table = SyndromeTable::build(s, 1);

  bool found_undecodable = false, found_miscorrected = false;
  for (const PauliError& err : enumerate_bounded_errors(s, 2)) {
    if (err.union_weight() != 2) continue;
    CycleResult res = run_cycle(s, table, err);
    if (!res.decoded) found_undecodable = true;
    if (res.decoded && !res.success) found_miscorrected = true;
  }
  CHECK(found_undecodable);   // some outcomes fall outside the table
  CHECK(found_miscorrected);  // others decode to the wrong representative
}

TEST_CASE("run_cycle flags forbidden ancilla errors and predicts the residual") {
  Scheme s = build_binary(catalog_get("hamming7_b"));
  SyndromeTable table = SyndromeTable::build(s, 1);
  // Single ancilla bit flip: the closed form says the readout picks up
  // H_Z' H_X'^T x_l^T and the data picks up X^(x_l H_X') Z^(x_l H_Z').
  PauliError err(s.layout);
  err.x().set(0, true);
  CycleResult res = run_cycle(s, table, err);
  CHECK(res.assumption_violated);
  Propagation p = propagate_closed_form(s, err);
  CHECK(p.data_x == s.h_xp.mul_left(err.x_l()));
  CHECK(p.data_z == s.h_zp.mul_left(err.x_l()));
  if (res.decoded) {
    auto corr = table.decode(p.anc_outcome);
    CHECK(res.residual_x == (p.data_x ^ corr->data_x));
    CHECK(res.residual_z == (p.data_z ^ corr->data_z));
  }
}

TEST_CASE("dualize: involution and bit-error-only recovery") {
  Scheme s = build_quaternary(catalog_get("mds4_2_q"));
  Scheme d = dualize(s);
  CHECK(d.dual);
  CHECK(dualize(d).matrices_equal(s));

  SyndromeTable table = SyndromeTable::build(d, 1);
  for (const PauliError& err : enumerate_bounded_errors(d, 1)) {
    // Allowed errors for the dual have z_l = 0.
    CHECK(err.z_l().is_zero());
    CHECK(run_cycle(d, table, err).success);
  }

  // A phase error on a dual-scheme ancilla violates the dual assumption.
  PauliError za(d.layout);
  za.z().set(0, true);
  CHECK(run_cycle(d, table, za).assumption_violated);
}

TEST_CASE("ea_parameters and singleton_slack across the catalog") {
  auto ea = ea_parameters(catalog_get("mds4_2_q"));
  CHECK(ea.n_e == 2);
  CHECK(ea.k_e == 2);
  CHECK(ea.d_e == 3);
  CHECK(ea.c == 4);
  auto sr = singleton_slack(ea);
  CHECK(sr.slack == 0);  // k_e - c = -2 = n_e - 2 d_e + 2
  CHECK(sr.saturates);
  CHECK(!sr.applicable);  // n_e = 2 < 2(d_e - 1) = 4

  auto ham = singleton_slack(ea_parameters(catalog_get("hamming7_b")));
  CHECK(ham.slack == 2);  // (4 - 6 + 2) - (4 - 6)
  CHECK(ham.applicable);  // n_e = 4 = 2(d_e - 1)
  CHECK(!ham.saturates);

  auto rep = singleton_slack(ea_parameters(catalog_get("rep3_b")));
  CHECK(rep.slack == 0);
  CHECK(!rep.applicable);  // n_e = 1 < 4

  auto ext = singleton_slack(ea_parameters(catalog_get("ext_rs5_2_q")));
  CHECK(ext.slack == 0);  // k_e - c = -4 = n_e - 2 d_e + 2
  CHECK(ext.saturates);
}

TEST_CASE("syndrome table serialization round trip") {
  for (const char* name : {"mds4_2_q", "hamming7_b"}) {
    Scheme s = build_scheme(catalog_get(name));
    SyndromeTable table = SyndromeTable::build(s, 1);
    std::stringstream buf;
    table.write(buf);
    SyndromeTable back = SyndromeTable::read(buf);
    CHECK(back == table);
    CHECK(back.radius() == 1);
    CHECK(back.variant() == s.variant);
  }
  std::stringstream junk("not a table at all");
  CHECK_THROWS_AS(SyndromeTable::read(junk), std::invalid_argument);

  // Truncation anywhere raises instead of crashing or inventing entries.
  std::stringstream whole;
  SyndromeTable::build(build_quaternary(catalog_get("mds4_2_q")), 1).write(whole);
  const std::string bytes = whole.str();
  for (size_t len : {size_t{0}, size_t{3}, size_t{10}, size_t{30}, bytes.size() - 1}) {
    std::stringstream cut(bytes.substr(0, len));
    CHECK_THROWS_AS(SyndromeTable::read(cut), std::invalid_argument);
  }
}

TEST_CASE("verification suites detect a falsified scheme, with counterexamples") {
  // Corrupt one entry of H_Z' after construction: the gate list and the
  // stale H_Z' H_X'^T product now disagree, which the oracle suites must
  // report (with a counterexample) rather than miss or crash.
  Scheme s = build_quaternary(catalog_get("mds4_2_q"));
  s.h_zp.set(0, 0, !s.h_zp.get(0, 0));

  VerifyOptions opt;
  opt.random_trials = 300;
  opt.states_per_error = 2;
  SuiteResult oracle = verify_propagation_oracle(s, opt);
  CHECK(!oracle.pass);
  CHECK(!oracle.detail.empty());
  CHECK(oracle.detail.find("outcome") != std::string::npos);

  SyndromeTable table = SyndromeTable::build(s, 1);
  SuiteResult rec = verify_recovery_algebraic(s, table);
  CHECK(!rec.pass);
  CHECK(!rec.detail.empty());
}

TEST_CASE("pauli error segments concatenate back to the full vectors") {
  Layout lay{7, 4};  // 6 ancillas + 4 data
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    PauliError err = random_error(lay, rng);
    CHECK(concat(err.x_l(), err.x_r()) == err.x());
    CHECK(concat(concat(err.z_l0(), err.z_l1()), err.z_r()) == err.z());
    CHECK(err.z_l() == concat(err.z_l0(), err.z_l1()));
    CHECK(err.union_weight() == (err.x() | err.z()).weight());
  }
}

TEST_CASE("serialized entries are sorted by syndrome key value") {
  Scheme s = build_binary(catalog_get("hamming7_b"));
  auto entries = SyndromeTable::build(s, 1).sorted_entries();
  for (size_t i = 1; i < entries.size(); ++i) {
    const auto& prev = entries[i - 1].first.words();
    const auto& cur = entries[i].first.words();
    CHECK(prev[0] < cur[0]);  // keys fit one word here; strictly increasing
  }
}

TEST_CASE("table construction is deterministic across calls") {
  Scheme s = build_quaternary(catalog_get("ext_rs5_2_q"));
  std::stringstream a, b;
  SyndromeTable::build(s, 1).write(a);
  SyndromeTable::build(s, 1).write(b);
  CHECK(a.str() == b.str());
}

TEST_CASE("column-permuting codes work through the whole cycle") {
  // Hamming [7,4] with its identity columns buried: the first three columns
  // sum to zero, so standardization must permute.
  ClassicalCode code = ClassicalCode::from_parity_check(
      2, F4Matrix::from_strings({"1101001", "1011010", "0111100"}));
  code.compute_distance();
  CHECK(code.distance() == 3);
  CHECK(!is_identity_perm(code.col_perm()));

  Scheme s = build_binary(code);
  SyndromeTable table = SyndromeTable::build(s, 1);
  CHECK(table.size() == 22);
  for (const PauliError& err : enumerate_bounded_errors(s, 1))
    CHECK(run_cycle(s, table, err).success);

  // Reporting maps standardized coordinates back to the caller's columns.
  F4Vector e(7);
  e.set(0, GF4::omega());
  F4Vector orig = to_original_coords(e, code.col_perm());
  CHECK(orig.weight() == 1);
  CHECK(orig.get(code.col_perm()[0]) == GF4::omega());
}

TEST_CASE("larger codes run the algebraic path (statevector would overflow)") {
  // Hamming [15,11]: columns are all nonzero 4-bit patterns, 19 physical
  // qubits, beyond the simulator cap but fine algebraically.
  F4Matrix h(4, 15);
  for (size_t col = 1; col <= 15; ++col)
    for (size_t row = 0; row < 4; ++row)
      if ((col >> row) & 1) h.set(row, col - 1, GF4::one());
  ClassicalCode code = ClassicalCode::from_parity_check(2, h);
  code.compute_distance();  // 2^11 codewords, exhaustive
  CHECK(code.distance() == 3);

  Scheme s = build_binary(code);
  CHECK(s.layout.n_phys() == 19);
  SyndromeTable table = SyndromeTable::build(s, 1);
  CHECK(table.size() == 46);  // 1 + 15*3
  for (const PauliError& err : enumerate_bounded_errors(s, 1))
    CHECK(run_cycle(s, table, err).success);

  VerifyOptions opt;
  SuiteResult sv_suite = verify_propagation_oracle(s, opt);
  CHECK(sv_suite.skipped);  // cap honored, reported as a skip, not a failure
  CHECK(sv_suite.pass);
}

TEST_CASE("pauli_from_combined reproduces every table entry's data segments") {
  for (bool dual : {false, true}) {
    Scheme s = build_quaternary(catalog_get("mds4_2_q"));
    if (dual) s = dualize(s);
    SyndromeTable table = SyndromeTable::build(s, 1);
    for (const auto& [key, e] : table.sorted_entries()) {
      PauliError err = pauli_from_combined(s, e);
      PauliError eff = effective_error(s, err);
      CHECK(eff.x_l().is_zero());
      CHECK(combined_error(s.layout, eff) == e);
      CHECK(run_cycle(s, table, err).success);
    }
  }
}
