// Copyright 2026 The Authors.
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

#ifndef STABLULC_CLI_HPP_
#define STABLULC_CLI_HPP_

#include <CLI11.hpp>

#include <algorithm>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stablulc/certificate.hpp"
#include "stablulc/embedded_graph.hpp"
#include "stablulc/factory.hpp"
#include "stablulc/limits.hpp"
#include "stablulc/matroid.hpp"
#include "stablulc/pauli.hpp"
#include "stablulc/state_oracle.hpp"
#include "stablulc/surface_code.hpp"
#include "stablulc/text_format.hpp"

namespace stablulc::cli {

inline constexpr const char* kVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoProof = 2;

namespace detail {

inline int status_exit(CertificateStatus s) { return s == CertificateStatus::kCertified ? kExitOk : kExitNoProof; }

/// First token of the first non-comment line.
inline std::string first_token(const std::string& text) {
  for (const auto& line : stablulc::detail::split_lines(text)) return std::string(line.tokens[0].text);
  return {};
}

inline bool is_qform_text(const std::string& text) {
  const std::string t = first_token(text);
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline bool has_dlu_line(const std::string& text) {
  for (const auto& line : stablulc::detail::split_lines(text)) {
    if (line.tokens[0].text == "dlu:") return true;
  }
  return false;
}

inline std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out.empty() ? "-" : out;
}

inline std::string witness_text(const MinorWitness& w) {
  return "deleted=" + join(w.deleted) + " contracted=" + join(w.contracted);
}

inline CssCode code_by_name(const std::string& name) {
  if (name == "rep2") return rep2();
  if (name == "rm15") return rm15();
  if (name == "rm31") return rm31();
  return parse_css_code(read_text_file(name));
}

inline std::string plan_text(const LengthPlan& p) {
  return "n=" + std::to_string(p.n) + " " + p.to_string() + (p.distance_three() ? " distance>=3" : " distance=2");
}

inline std::string z4_text(const std::vector<std::uint8_t>& a) {
  std::string out;
  for (auto v : a) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

inline int analyze_state(const std::string& path, std::ostream& out) {
  const std::string text = read_text_file(path);
  const StabilizerGroup s =
      is_qform_text(text) ? stabilizer_from_quadratic_form(parse_qform(text)) : parse_stabilizer(text);
  out << "qubits: " << s.num_qubits() << "\n";
  out << "generators: " << s.num_generators() << "\n";
  out << "css: " << (is_css(s).is_css ? "yes" : "no") << "\n";
  if (!s.is_state()) {
    const Certificate c = msc_certificate(s);
    out << c.to_string() << "\n";
    return status_exit(c.status);
  }
  out << "distance: " << distance(s) << "\n";
  const BellPairResult bell = is_bell_pair_free(s);
  out << "bell_pair: "
      << (bell.free ? std::string("none")
                    : std::to_string(bell.witness->first + 1) + "," + std::to_string(bell.witness->second + 1))
      << "\n";
  const MinimalElementReport report = minimal_elements(s);
  out << "minimal_elements: " << report.elements.size() << "\n";
  const Certificate c = msc_certificate(s, &report);
  out << c.to_string() << "\n";
  return status_exit(c.status);
}

inline int surface_certify(const std::string& path, std::size_t l, bool transversal, std::ostream& out) {
  const EmbeddedGraph g = parse_graph(read_text_file(path));
  const SurfaceCode code = build_code(g);
  const GirthCogirth gc = girth_and_cogirth(g);
  out << "qubits: " << code.num_qubits() << "\n";
  out << "logical: " << code.num_logical() << "\n";
  out << "genus: " << embedding_genus(g) << "\n";
  out << "girth: " << count_or_inf(gc.girth) << "\n";
  out << "cogirth: " << count_or_inf(gc.cogirth) << "\n";
  const Certificate c = lulc_certificate(code, l);
  out << c.to_string() << "\n";
  if (transversal) {
    if (c.certified()) {
      const TransversalReport r = full_transversal_report(code);
      const auto forced = std::count(r.forced_clifford.begin(), r.forced_clifford.end(), true);
      out << "transversal: " << r.conclusion() << " forced_clifford=" << forced << "/" << code.num_qubits()
          << " fixed_elements=" << r.fixed_elements << "\n";
    } else {
      out << "transversal: skipped\n";
    }
  }
  return status_exit(c.status);
}

inline int grid_certify(std::size_t rows, std::size_t cols, std::ostream& out) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  const Certificate c = grid_minimality_certificate(rows, cols);
  out << c.to_string() << "\n";
  return status_exit(c.status);
}

inline int matroid_screen(const std::string& g_path, const std::string& h_path, std::ostream& out) {
  const BinaryMatroid g = parse_matroid(read_text_file(g_path));
  const BinaryMatroid h = parse_matroid(read_text_file(h_path));
  CssScreenResult r;
  try {
    r = css_counterexample_screen(g.representation(), h.representation());
  } catch (const HypothesisError& e) {
    out << "HYPOTHESIS_FAILED reason=" << e.what() << "\n";
    return kExitNoProof;
  }
  out << "distance: " << r.distance << "\n";
  out << "dual_distance: " << r.dual_distance << "\n";
  if (r.graphic_obstruction) {
    out << "graphic_obstruction: " << r.graphic_obstruction->name << " " << witness_text(r.graphic_obstruction->witness)
        << "\n";
  }
  if (r.cographic_obstruction) {
    out << "cographic_obstruction: " << r.cographic_obstruction->name << " "
        << witness_text(r.cographic_obstruction->witness) << "\n";
  }
  out << r.to_string() << "\n";
  return r.outcome == CssScreenOutcome::kInconclusive ? kExitNoProof : kExitOk;
}

inline int matroid_minor(const std::string& path, const std::string& minor, std::ostream& out) {
  const BinaryMatroid m = parse_matroid(read_text_file(path));
  const bool named = std::any_of(excluded_minor_catalog().begin(), excluded_minor_catalog().end(),
                                 [&](const NamedMatroid& e) { return e.name == minor; });
  const BinaryMatroid target = named ? catalog_entry(minor).matroid : parse_matroid(read_text_file(minor));
  const auto w = find_minor(m, target);
  if (!w) {
    out << "NONE\n";
    return kExitNoProof;
  }
  out << "MINOR " << minor << " " << witness_text(*w) << "\n";
  return kExitOk;
}

inline int factory_lengths(std::optional<std::size_t> n, std::optional<std::size_t> max_n, bool distance3,
                           std::ostream& out) {
  if (n) {
    const auto p = length_plan(*n, distance3);
    if (!p) {
      out << "NONE n=" << *n << "\n";
      return kExitNoProof;
    }
    out << plan_text(*p) << "\n";
    return kExitOk;
  }
  for (const auto& p : enumerate_lengths(*max_n, distance3)) out << plan_text(p) << "\n";
  return kExitOk;
}

inline int factory_encode(const std::string& path, std::size_t qubit, const std::string& code_name,
                          const std::string& out_path, std::ostream& out) {
  const CounterexampleSeed seed = parse_seed(read_text_file(path), path);
  const CssCode code = code_by_name(code_name);
  if (qubit == 0 || qubit > seed.num_qubits()) throw std::invalid_argument("--qubit must be in 1.." +
                                                                           std::to_string(seed.num_qubits()));
  const bool seed_ok = dlu_verified(seed);
  const CounterexampleSeed enc = encode_pair(seed, qubit - 1, code);
  out << "seed_dlu_verified: " << (seed_ok ? "true" : "false") << "\n";
  out << "provenance: " << enc.provenance << "\n";
  out << "encoded_qubits: " << enc.num_qubits() << "\n";
  std::string encoded_status = "skipped";
  if (enc.num_qubits() <= 20) encoded_status = dlu_verified(enc) ? "true" : "false";
  out << "encoded_dlu_verified: " << encoded_status << "\n";
  if (out_path.empty()) {
    out << format_seed(enc);
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << format_seed(enc);
  }
  if (!seed_ok) {
    out << "UNVERIFIED seed DLU does not map (S,0) to (S,q)\n";
    return kExitNoProof;
  }
  out << "ENCODED\n";
  return kExitOk;
}

inline int dlc_check(const std::string& path, std::ostream& out) {
  const std::string text = read_text_file(path);
  const bool with_dlu = has_dlu_line(text);
  std::optional<CounterexampleSeed> seed;
  QuadraticFormState qf;
  if (with_dlu) {
    seed = parse_seed(text, path);
    qf = seed->form;
  } else {
    qf = parse_qform(text);
  }
  out << "qubits: " << qf.num_qubits() << "\n";
  out << "dimension: " << qf.dimension() << "\n";
  const auto a = dlc_feasible(qf);
  out << "dlc: " << (a ? "feasible a=" + z4_text(*a) : std::string("infeasible")) << "\n";
  bool verified = false;
  if (seed) {
    verified = dlu_verified(*seed);
    out << "dlu_verified: " << (verified ? "true" : "false") << "\n";
  }
  if (a) {
    out << "LC_EQUIVALENT\n";
    return kExitOk;
  }
  if (verified) {
    out << "LU_NOT_LC\n";
    return kExitOk;
  }
  out << "INCONCLUSIVE dlc infeasible without a verified DLU\n";
  return kExitNoProof;
}

inline std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace detail

/// Runs one command. Reports go to `out`, diagnostics and the optional
/// --stamp line to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizer-state LU=LC certificates, matroid screens and counterexample factory", "stablulc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  bool stamp = false;
  app.add_flag("--stamp", stamp, "Print run metadata to stderr");

  std::string state_path;
  auto* analyze = app.add_subcommand("analyze-state", "Minimal elements and MSC certificate of a stabilizer state");
  analyze->add_option("file", state_path, "Stabilizer or quadratic-form file")->required();

  std::string graph_path;
  std::size_t logical = 0;
  bool transversal = false;
  auto* surface = app.add_subcommand("surface-certify", "LU=LC certificate for a surface-code state");
  surface->add_option("graph", graph_path, "Embedded graph file")->required();
  surface->add_option("--l", logical, "Number of fixed logical X classes");
  surface->add_flag("--transversal", transversal, "Also report transversal-gate constraints");

  std::size_t rows = 0, cols = 0;
  auto* grid = app.add_subcommand("grid-certify", "Minimality certificate for the grid cluster state");
  grid->add_option("--rows", rows, "Grid rows")->required();
  grid->add_option("--cols", cols, "Grid columns")->required();

  std::string g_path, h_path;
  auto* screen = app.add_subcommand("matroid-screen", "Graphic/cographic screen of a CSS state");
  screen->set_help_flag("--help", "Print this help message and exit");
  screen->add_option("--g", g_path, "Matrix file spanning the X part")->required();
  screen->add_option("--h", h_path, "Matrix file spanning the Z part")->required();

  std::string matroid_path, minor_name;
  auto* minor = app.add_subcommand("matroid-minor", "Search for a binary matroid minor");
  minor->add_option("file", matroid_path, "Matroid file")->required();
  minor->add_option("--minor", minor_name, "Catalog name (F7, F7*, M(K5), ...) or matroid file")->required();

  std::optional<std::size_t> length_n, length_max;
  bool distance3 = false;
  auto* lengths = app.add_subcommand("factory-lengths", "Concatenation plan for a counterexample length");
  auto* n_opt = lengths->add_option("--n", length_n, "Target length");
  auto* max_opt = lengths->add_option("--max", length_max, "List all reachable lengths up to this bound");
  n_opt->excludes(max_opt);
  lengths->add_flag("--distance3", distance3, "Only plans without the [[2,1,1]] code");

  std::string seed_path, code_name = "rep2", encode_out;
  std::size_t qubit = 0;
  auto* encode = app.add_subcommand("factory-encode", "Encode one seed qubit into a CSS code");
  encode->add_option("seed", seed_path, "Seed file")->required();
  encode->add_option("--qubit", qubit, "1-based qubit to encode")->required();
  encode->add_option("--code", code_name, "rep2, rm15, rm31 or a CSS code file");
  encode->add_option("--out", encode_out, "Write the encoded seed here instead of stdout");

  std::string dlc_path;
  auto* dlc = app.add_subcommand("dlc-check", "Diagonal local Clifford feasibility of a seed or quadratic form");
  dlc->add_option("file", dlc_path, "Seed or quadratic-form file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (lengths->parsed() && !length_n && !length_max) throw CLI::RequiredError("--n or --max");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (stamp) {
    err << "stamp: stablulc " << kVersion << " command=" << chosen->get_name() << " enum_cap=" << enumeration_cap()
        << " utc=" << detail::utc_now() << "\n";
  }
  try {
    if (chosen == analyze) return detail::analyze_state(state_path, out);
    if (chosen == surface) return detail::surface_certify(graph_path, logical, transversal, out);
    if (chosen == grid) return detail::grid_certify(rows, cols, out);
    if (chosen == screen) return detail::matroid_screen(g_path, h_path, out);
    if (chosen == minor) return detail::matroid_minor(matroid_path, minor_name, out);
    if (chosen == lengths) return detail::factory_lengths(length_n, length_max, distance3, out);
    if (chosen == encode) return detail::factory_encode(seed_path, qubit, code_name, encode_out, out);
    if (chosen == dlc) return detail::dlc_check(dlc_path, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace stablulc::cli

#endif  // STABLULC_CLI_HPP_
