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

#ifndef LNQ_NOISE_HPP_
#define LNQ_NOISE_HPP_

#include <cstdint>

#include "lnq/rng.hpp"
#include "lnq/syndrome_table.hpp"

namespace lnq {

// Error models respecting the scheme's ancilla assumption: ancilla qubits
// never draw the forbidden Pauli (X for a primal scheme, Z for a dual one).
//
//   adversarial(t): uniform over all errors with |supp(x) u supp(z)| <= t.
//   iid(p_data, p_anc): each data qubit independently draws X, Z, or Y with
//     probability p_data each; each ancilla draws its allowed Pauli with
//     probability p_anc.
struct NoiseModel {
  enum class Kind { adversarial, iid };
  Kind kind = Kind::adversarial;
  unsigned t = 0;
  double p_data = 0.0;
  double p_anc = 0.0;

  static NoiseModel adversarial(unsigned t);
  static NoiseModel iid(double p_data, double p_anc);
};

PauliError sample_adversarial(const NoiseModel& model, const Scheme& s, Rng& rng);
PauliError sample_iid(const NoiseModel& model, const Scheme& s, Rng& rng);
PauliError sample_error(const NoiseModel& model, const Scheme& s, Rng& rng);

struct MonteCarloReport {
  uint64_t trials = 0;
  uint64_t failures = 0;         // residual not identity after correction
  uint64_t decode_failures = 0;  // outcome absent from the table
  double failure_rate = 0.0;
  double wilson_lo = 0.0, wilson_hi = 0.0;  // 95% Wilson score interval
  uint64_t seed = 0;
};

// Runs `trials` independent encode-error-decode cycles. Trial i draws from
// Rng::for_trial(seed, i), so the report is bit-identical for any thread
// count.
MonteCarloReport monte_carlo(const Scheme& s, const SyndromeTable& table, const NoiseModel& model,
                             uint64_t trials, uint64_t seed, unsigned threads = 1);

}  // namespace lnq

#endif  // LNQ_NOISE_HPP_
