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

#include "lnq/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lnq {

NoiseModel NoiseModel::adversarial(unsigned t) {
  NoiseModel m;
  m.kind = Kind::adversarial;
  m.t = t;
  return m;
}

NoiseModel NoiseModel::iid(double p_data, double p_anc) {
  if (p_data < 0 || p_anc < 0 || p_anc > 1 || 3 * p_data > 1)
    throw std::invalid_argument("NoiseModel::iid: need p_anc in [0,1] and 3*p_data <= 1");
  NoiseModel m;
  m.kind = Kind::iid;
  m.p_data = p_data;
  m.p_anc = p_anc;
  return m;
}

namespace {

// Uniform w-subset of [0, n) by sequential selection.
void sample_subset(Rng& rng, size_t n, size_t w, std::vector<size_t>& out) {
  out.clear();
  size_t need = w;
  for (size_t i = 0; i < n && need > 0; ++i) {
    if (rng.next_below(n - i) < need) {
      out.push_back(i);
      --need;
    }
  }
}

uint64_t binom(size_t n, size_t k) {
  if (k > n) return 0;
  uint64_t r = 1;
  for (size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

PauliError sample_adversarial(const NoiseModel& model, const Scheme& s, Rng& rng) {
  const Layout lay = s.layout;
  if (model.t > lay.n_phys())
    throw std::invalid_argument("sample_adversarial: t exceeds the number of physical qubits");

  // Count errors by (a ancilla qubits hit, b data qubits hit):
  // C(n_anc, a) * C(k, b) * 3^b, then draw a class proportionally.
  struct Cls {
    size_t a, b;
    uint64_t count;
  };
  std::vector<Cls> classes;
  uint64_t total = 0;
  for (size_t a = 0; a <= model.t && a <= lay.n_anc(); ++a) {
    uint64_t pow3 = 1;
    for (size_t b = 0; a + b <= model.t && b <= lay.k; ++b) {
      uint64_t c = binom(lay.n_anc(), a) * binom(lay.k, b) * pow3;
      classes.push_back({a, b, c});
      total += c;
      pow3 *= 3;
    }
  }

  uint64_t r = rng.next_below(total);
  size_t pick = 0;
  while (r >= classes[pick].count) r -= classes[pick++].count;

  PauliError err(lay);
  std::vector<size_t> subset;
  sample_subset(rng, lay.n_anc(), classes[pick].a, subset);
  for (size_t anc : subset) set_allowed_ancilla_error(s, err, anc);
  sample_subset(rng, lay.k, classes[pick].b, subset);
  for (size_t j : subset) set_data_error(lay, err, j, static_cast<unsigned>(rng.next_below(3)));
  return err;
}

PauliError sample_iid(const NoiseModel& model, const Scheme& s, Rng& rng) {
  const Layout lay = s.layout;
  PauliError err(lay);
  for (size_t anc = 0; anc < lay.n_anc(); ++anc)
    if (rng.bernoulli(model.p_anc)) set_allowed_ancilla_error(s, err, anc);
  for (size_t j = 0; j < lay.k; ++j) {
    double u = rng.next_unit();
    if (u < model.p_data)
      set_data_error(lay, err, j, 0);
    else if (u < 2 * model.p_data)
      set_data_error(lay, err, j, 1);
    else if (u < 3 * model.p_data)
      set_data_error(lay, err, j, 2);
  }
  return err;
}

PauliError sample_error(const NoiseModel& model, const Scheme& s, Rng& rng) {
  PauliError err = model.kind == NoiseModel::Kind::adversarial ? sample_adversarial(model, s, rng)
                                                               : sample_iid(model, s, rng);
  // Structural guarantee of both models.
  if (!effective_error(s, err).x_l().is_zero())
    throw std::logic_error("sample_error: drew a forbidden ancilla error");
  return err;
}

namespace {

void wilson_interval(uint64_t failures, uint64_t trials, double& lo, double& hi) {
  if (trials == 0) {
    lo = hi = 0.0;
    return;
  }
  const double z = 1.959963984540054;  // 97.5th normal percentile
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = p + z2 / (2 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  lo = (center - spread) / denom;
  hi = (center + spread) / denom;
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
}

}  // namespace

MonteCarloReport monte_carlo(const Scheme& s, const SyndromeTable& table, const NoiseModel& model,
                             uint64_t trials, uint64_t seed, unsigned threads) {
  if (threads == 0) threads = 1;

  auto run_range = [&](uint64_t lo, uint64_t hi, uint64_t& failures, uint64_t& decode_failures) {
    for (uint64_t i = lo; i < hi; ++i) {
      Rng rng = Rng::for_trial(seed, i);
      PauliError err = sample_error(model, s, rng);
      CycleResult res = run_cycle(s, table, err);
      if (!res.success) ++failures;
      if (!res.decoded) ++decode_failures;
    }
  };

  std::vector<uint64_t> fails(threads, 0), dfails(threads, 0);
  if (threads == 1) {
    run_range(0, trials, fails[0], dfails[0]);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned ti = 0; ti < threads; ++ti) {
      const uint64_t lo = ti * chunk;
      const uint64_t hi = std::min<uint64_t>(trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, ti, lo, hi] { run_range(lo, hi, fails[ti], dfails[ti]); });
    }
    for (auto& th : pool) th.join();
  }

  MonteCarloReport rep;
  rep.trials = trials;
  rep.seed = seed;
  for (unsigned ti = 0; ti < threads; ++ti) {
    rep.failures += fails[ti];
    rep.decode_failures += dfails[ti];
  }
  rep.failure_rate = trials ? static_cast<double>(rep.failures) / static_cast<double>(trials) : 0.0;
  wilson_interval(rep.failures, rep.trials, rep.wilson_lo, rep.wilson_hi);
  return rep;
}

}  // namespace lnq
