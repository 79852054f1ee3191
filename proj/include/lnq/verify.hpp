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

#ifndef LNQ_VERIFY_HPP_
#define LNQ_VERIFY_HPP_

#include <string>
#include <vector>

#include "lnq/statevector.hpp"
#include "lnq/syndrome_table.hpp"

namespace lnq {

// One verification suite outcome. On failure `detail` carries the
// counterexample: error vectors in original code coordinates and the value
// each evaluation path produced.
struct SuiteResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  uint64_t checks = 0;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 1;
  uint64_t random_trials = 1000;  // random errors for the oracle suites
  unsigned states_per_error = 3;  // random data states per checked error
};

// Every physical error with |supp(x) u supp(z)| <= t whose ancilla
// component respects the scheme's assumption (Z-only, or X-only when dual).
std::vector<PauliError> enumerate_bounded_errors(const Scheme& s, unsigned t);

// Both trace-syndrome evaluation paths agree: exhaustive over GF(4)^n for
// n <= 6, otherwise `random_trials` random vectors.
SuiteResult verify_split_syndrome(const Scheme& s, const VerifyOptions& opt);

// Syndrome-table construction at radius t completes collision-free with
// the exact ball-size entry count, and maps the zero outcome to the zero
// error.
SuiteResult verify_table_injectivity(const Scheme& s, unsigned t);

// Closed-form propagation matches the gate-level statevector: all
// single-qubit Paulis (including forbidden ancilla errors) plus random
// multi-qubit errors.
SuiteResult verify_propagation_oracle(const Scheme& s, const VerifyOptions& opt);

// Every in-radius error with an allowed ancilla component is corrected by
// the algebraic cycle; also checks |supp(e)| <= |supp(x) u supp(z)|.
SuiteResult verify_recovery_algebraic(const Scheme& s, const SyndromeTable& table);

// Same guarantee end-to-end on the statevector: fidelity >= 1 - 1e-10 for
// every table entry's canonical error and every in-radius physical error.
SuiteResult verify_recovery_statevector(const Scheme& s, const SyndromeTable& table,
                                        const VerifyOptions& opt);

// Errors violating the ancilla assumption produce exactly the predicted
// readout and post-correction residual on the statevector.
SuiteResult verify_miscorrection_prediction(const Scheme& s, const SyndromeTable& table,
                                            const VerifyOptions& opt);

// dualize is a matrix-level involution.
SuiteResult verify_dual_involution(const Scheme& s);

// All of the above at t = floor((d-1)/2). Statevector suites are skipped
// (marked, not failed) when the scheme exceeds the simulator's qubit cap.
std::vector<SuiteResult> verify_all(const Scheme& s, const VerifyOptions& opt);

}  // namespace lnq

#endif  // LNQ_VERIFY_HPP_
