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

#include "lnq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lnq/noise.hpp"
#include "lnq/verify.hpp"

namespace lnq {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

ClassicalCode load_code(const std::string& spec, std::ostream& err) {
  if (spec.empty())
    throw std::invalid_argument("no code given; use --code catalog:<name> or --code <file>");
  ClassicalCode code;
  if (spec.rfind("catalog:", 0) == 0) {
    code = catalog_get(spec.substr(8));
  } else {
    code = ClassicalCode::from_file(spec);
  }
  if (!code.has_distance()) {
    try {
      code.compute_distance();
    } catch (const std::invalid_argument& ex) {
      err << "note: " << ex.what() << "\n";
    }
  }
  return code;
}

Scheme scheme_for(const ClassicalCode& code, const std::string& variant) {
  if (variant == "q4") {
    return build_quaternary(code);
  } else if (variant == "q2") {
    return build_binary(code);
  } else if (variant == "dual") {
    return dualize(build_scheme(code));
  } else if (variant == "auto") {
    return build_scheme(code);
  }
  throw std::invalid_argument("unknown variant '" + variant + "'");
}

json code_json(const ClassicalCode& c) {
  json j = {{"name", c.name.empty() ? json() : json(c.name)},
            {"q", c.q()},
            {"n", c.n()},
            {"k", c.k()}};
  if (c.has_distance()) {
    j["d"] = c.distance();
    j["d_declared"] = c.distance_declared();
    j["mds"] = is_mds(c);
  } else {
    j["d"] = nullptr;
  }
  return j;
}

std::vector<std::string> matrix_rows(const F4Matrix& m) {
  std::vector<std::string> rows;
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).str());
  return rows;
}

std::vector<std::string> matrix_rows(const F2Matrix& m) {
  std::vector<std::string> rows;
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).str());
  return rows;
}

void print_matrix(std::ostream& out, const std::string& label, const std::vector<std::string>& rows) {
  out << label << ":\n";
  for (const auto& r : rows) out << "  " << r << "\n";
}

std::string ea_string(const EaParameters& p) {
  std::ostringstream os;
  os << "[[" << p.n_e << "," << p.k_e << ",>=" << p.d_e << ";" << p.c << "]]";
  return os.str();
}

int cmd_codes(bool as_json, std::ostream& out) {
  if (as_json) {
    json codes = json::array();
    for (const auto& name : catalog_names()) {
      ClassicalCode c = catalog_get(name);
      codes.push_back(code_json(c));
    }
    out << json{{"schema_version", kSchemaVersion}, {"command", "codes"}, {"codes", codes}}.dump()
        << "\n";
    return 0;
  }
  for (const auto& name : catalog_names()) {
    ClassicalCode c = catalog_get(name);
    EaParameters ea = ea_parameters(c);
    out << name << "  [" << c.n() << "," << c.k() << "," << c.distance() << "]_" << c.q()
        << (is_mds(c) ? "  MDS" : "     ") << "  ->  EA " << ea_string(ea) << "\n";
  }
  return 0;
}

int cmd_build(const Scheme& s, bool as_json, std::ostream& out) {
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion},
              {"command", "build"},
              {"code", code_json(s.code)},
              {"variant", s.variant_name()},
              {"n_phys", s.layout.n_phys()},
              {"n_anc", s.layout.n_anc()},
              {"col_perm", s.code.col_perm()},
              {"h", matrix_rows(s.code.h())},
              {"h_q", matrix_rows(s.h_q)},
              {"h_z", matrix_rows(s.h_z)},
              {"h_x", matrix_rows(s.h_x)},
              {"h_zp", matrix_rows(s.h_zp)},
              {"h_xp", matrix_rows(s.h_xp)}};
    out << j.dump() << "\n";
    return 0;
  }
  out << "variant " << s.variant_name() << ": " << s.layout.n_phys() << " physical qubits ("
      << s.layout.n_anc() << " ancilla + " << s.layout.k << " data)\n";
  if (s.dual) out << "ancillas tolerate bit errors only (Hadamard-rotated frame)\n";
  print_matrix(out, "H (standard form)", matrix_rows(s.code.h()));
  if (!is_identity_perm(s.code.col_perm())) {
    out << "column permutation (std position -> original column):";
    for (size_t c : s.code.col_perm()) out << " " << c;
    out << "\n";
  }
  print_matrix(out, "H_Q", matrix_rows(s.h_q));
  print_matrix(out, "H_Z", matrix_rows(s.h_z));
  print_matrix(out, "H_X", matrix_rows(s.h_x));
  print_matrix(out, "H_Z'", matrix_rows(s.h_zp));
  print_matrix(out, "H_X'", matrix_rows(s.h_xp));
  return 0;
}

int cmd_params(const ClassicalCode& code, bool as_json, std::ostream& out) {
  EaParameters ea = ea_parameters(code);
  SingletonReport sr = singleton_slack(ea);
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion},
              {"command", "params"},
              {"code", code_json(code)},
              {"ea", {{"n_e", ea.n_e}, {"k_e", ea.k_e}, {"d_e_lower", ea.d_e}, {"c", ea.c},
                      {"d_declared", ea.d_declared}}},
              {"singleton",
               {{"slack", sr.slack}, {"applicable", sr.applicable}, {"saturates", sr.saturates}}}};
    out << j.dump() << "\n";
    return 0;
  }
  out << ea_string(ea) << " slack=" << sr.slack << (sr.saturates ? " (saturates)" : "");
  if (!sr.applicable) out << " [bound hypothesis n_e >= 2(d_e-1) not met]";
  if (ea.d_declared) out << " [d declared, not verified]";
  out << "\n";
  return 0;
}

int cmd_verify(const Scheme& s, const VerifyOptions& opt, bool as_json, std::ostream& out) {
  std::vector<SuiteResult> results = verify_all(s, opt);
  bool all_pass = true;
  for (const auto& r : results)
    if (!r.pass) all_pass = false;

  if (as_json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"name", r.name},
                     {"pass", r.pass},
                     {"skipped", r.skipped},
                     {"checks", r.checks},
                     {"detail", r.detail}});
    json j = {{"schema_version", kSchemaVersion},
              {"command", "verify"},
              {"code", code_json(s.code)},
              {"variant", s.variant_name()},
              {"seed", opt.seed},
              {"results", arr},
              {"pass", all_pass}};
    out << j.dump() << "\n";
  } else {
    for (const auto& r : results) {
      const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      out << tag << "  " << r.name;
      if (r.skipped)
        out << ": " << r.detail;
      else if (r.pass)
        out << " (" << r.checks << " checks)";
      else
        out << ": " << r.detail;
      out << "\n";
    }
    out << (all_pass ? "all suites passed" : "VERIFICATION FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_table(const Scheme& s, int t_flag, const std::string& out_path, const std::string& in_path,
              bool as_json, std::ostream& out) {
  if (!in_path.empty()) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open table file: " + in_path);
    SyndromeTable table = SyndromeTable::read(in);
    if (!(table.layout() == s.layout) || table.variant() != s.variant)
      throw std::invalid_argument("table file does not match the scheme");
    // Revalidate: every stored entry must be keyed by its own syndrome.
    for (const auto& [key, e] : table.sorted_entries())
      if (!(trace_syndrome(s, e) == key))
        throw std::invalid_argument("table file entry disagrees with the scheme's syndromes");
    if (as_json) {
      out << json{{"schema_version", kSchemaVersion}, {"command", "table"},
                  {"source", in_path},   {"t", table.radius()},
                  {"entries", table.size()}, {"validated", true}}
                 .dump()
          << "\n";
    } else {
      out << "loaded table: t=" << table.radius() << " entries=" << table.size()
          << " (validated against the scheme)\n";
    }
    return 0;
  }

  const unsigned t = t_flag < 0 ? s.code.correction_radius() : static_cast<unsigned>(t_flag);
  SyndromeTable table = SyndromeTable::build(s, t);
  size_t bytes = 0;
  if (!out_path.empty()) {
    std::ofstream ofs(out_path, std::ios::binary);
    if (!ofs) throw std::invalid_argument("cannot open output file: " + out_path);
    table.write(ofs);
    bytes = static_cast<size_t>(ofs.tellp());
  }
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion},
              {"command", "table"},
              {"t", table.radius()},
              {"entries", table.size()}};
    if (!out_path.empty()) {
      j["file"] = out_path;
      j["bytes"] = bytes;
    }
    out << j.dump() << "\n";
  } else {
    out << "built table: t=" << table.radius() << " entries=" << table.size();
    if (!out_path.empty()) out << " -> " << out_path << " (" << bytes << " bytes)";
    out << "\n";
  }
  return 0;
}

int cmd_simulate(const Scheme& s, const std::string& code_spec, const NoiseModel& model, int t_flag,
                 uint64_t trials, uint64_t seed, unsigned threads, bool as_json,
                 std::ostream& out) {
  const unsigned t = t_flag < 0 ? s.code.correction_radius() : static_cast<unsigned>(t_flag);
  SyndromeTable table = SyndromeTable::build(s, t);
  MonteCarloReport rep = monte_carlo(s, table, model, trials, seed, threads);

  json noise = model.kind == NoiseModel::Kind::adversarial
                   ? json{{"kind", "adversarial"}, {"t", model.t}}
                   : json{{"kind", "iid"}, {"p_data", model.p_data}, {"p_anc", model.p_anc}};
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion},
              {"command", "simulate"},
              {"code", code_spec},
              {"variant", s.variant_name()},
              {"noise", noise},
              {"table_radius", t},
              {"trials", rep.trials},
              {"failures", rep.failures},
              {"decode_failures", rep.decode_failures},
              {"rate", rep.failure_rate},
              {"ci95", {rep.wilson_lo, rep.wilson_hi}},
              {"seed", rep.seed}};
    out << j.dump() << "\n";
  } else {
    out << "trials=" << rep.trials << " failures=" << rep.failures
        << " (decode failures=" << rep.decode_failures << ") rate=" << rep.failure_rate
        << " ci95=[" << rep.wilson_lo << "," << rep.wilson_hi << "] seed=" << rep.seed << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quantum error correction from classical GF(2)/GF(4) codes, assisted by "
               "phase-noise-only ancilla qubits"};
  app.name("qec");
  app.require_subcommand(1);

  std::string code_spec;
  std::string variant = "auto";
  uint64_t seed = 1;
  bool as_json = false;
  app.add_option("--code", code_spec, "catalog:<name> or path to a code file");
  app.add_option("--variant", variant, "scheme variant")
      ->check(CLI::IsMember({"auto", "q4", "q2", "dual"}));
  app.add_option("--seed", seed, "RNG seed");
  app.add_flag("--json", as_json, "machine-readable output");

  auto* sc_codes = app.add_subcommand("codes", "list the built-in code catalog");
  auto* sc_build = app.add_subcommand("build", "print the scheme matrices for a code");
  auto* sc_verify = app.add_subcommand("verify", "run the verification suites");
  auto* sc_table = app.add_subcommand("table", "build, save, or load a syndrome table");
  auto* sc_simulate = app.add_subcommand("simulate", "Monte Carlo logical failure estimation");
  auto* sc_params = app.add_subcommand("params", "entanglement-assisted parameters and "
                                                 "Singleton slack");

  uint64_t random_trials = 1000;
  unsigned states_per_error = 3;
  sc_verify->add_option("--random", random_trials, "random errors per oracle suite");
  sc_verify->add_option("--states", states_per_error, "random data states per error");

  int t_flag = -1;
  std::string table_out, table_in;
  sc_table->add_option("--t", t_flag, "correction radius (default floor((d-1)/2))");
  sc_table->add_option("--out", table_out, "write the table to a file");
  sc_table->add_option("--in", table_in, "load and validate a table file");

  int sim_adversarial = -1;
  double p_data = -1.0, p_anc = 0.0;
  uint64_t trials = 10000;
  unsigned threads = 1;
  int sim_t = -1;
  sc_simulate->add_option("--adversarial", sim_adversarial, "uniform weight-<=t errors");
  sc_simulate->add_option("--p-data", p_data, "iid X/Z/Y probability per data qubit");
  sc_simulate->add_option("--p-anc-z", p_anc, "iid probability of the allowed ancilla Pauli");
  sc_simulate->add_option("--trials", trials, "number of Monte Carlo trials");
  sc_simulate->add_option("--threads", threads, "worker threads");
  sc_simulate->add_option("--t", sim_t, "table radius (default floor((d-1)/2))");

  for (auto* sc : {sc_codes, sc_build, sc_verify, sc_table, sc_simulate, sc_params})
    sc->fallthrough();

  // CLI11 wants mutable char pointers.
  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("qec"));
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc_codes)) return cmd_codes(as_json, out);

    ClassicalCode code = load_code(code_spec, err);
    if (app.got_subcommand(sc_params)) return cmd_params(code, as_json, out);

    Scheme scheme = scheme_for(code, variant);
    if (app.got_subcommand(sc_build)) return cmd_build(scheme, as_json, out);
    if (app.got_subcommand(sc_verify)) {
      VerifyOptions opt;
      opt.seed = seed;
      opt.random_trials = random_trials;
      opt.states_per_error = states_per_error;
      return cmd_verify(scheme, opt, as_json, out);
    }
    if (app.got_subcommand(sc_table))
      return cmd_table(scheme, t_flag, table_out, table_in, as_json, out);
    if (app.got_subcommand(sc_simulate)) {
      if ((sim_adversarial >= 0) == (p_data >= 0.0))
        throw std::invalid_argument("simulate: give exactly one of --adversarial or --p-data");
      NoiseModel model = sim_adversarial >= 0
                             ? NoiseModel::adversarial(static_cast<unsigned>(sim_adversarial))
                             : NoiseModel::iid(p_data, p_anc);
      return cmd_simulate(scheme, code_spec, model, sim_t, trials, seed, threads, as_json, out);
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::logic_error& ex) {
    err << "internal consistency failure: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lnq
