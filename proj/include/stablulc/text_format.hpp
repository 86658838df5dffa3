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

#ifndef STABLULC_TEXT_FORMAT_HPP_
#define STABLULC_TEXT_FORMAT_HPP_

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stablulc/embedded_graph.hpp"
#include "stablulc/factory.hpp"
#include "stablulc/gf2.hpp"
#include "stablulc/matroid.hpp"
#include "stablulc/pauli.hpp"
#include "stablulc/state_oracle.hpp"

namespace stablulc {

/// Input error with a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t col = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string text;
  std::vector<Token> tokens;
};

/// Splits text into non-blank lines; '#' starts a comment.
inline std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++number;
    std::string raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, std::move(raw), {}};
    pos = end + 1;
    if (line.text.find_first_not_of(" \t") == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  for (auto& l : out) {
    std::string_view sv(l.text);
    std::size_t i = 0;
    while (i < sv.size()) {
      while (i < sv.size() && (sv[i] == ' ' || sv[i] == '\t')) ++i;
      if (i >= sv.size()) break;
      std::size_t j = i;
      while (j < sv.size() && sv[j] != ' ' && sv[j] != '\t') ++j;
      l.tokens.push_back({sv.substr(i, j - i), i + 1});
      i = j;
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : lines_(split_lines(text)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_.at(pos_); }
  const Line& next() {
    if (done()) throw ParseError(last_line_ + 1, 1, "unexpected end of input");
    last_line_ = lines_[pos_].number;
    return lines_[pos_++];
  }
  /// Number of the most recently consumed line, 0 before the first.
  std::size_t last_line() const { return last_line_; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

inline std::size_t parse_count(const Line& line, const Token& tok, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || p != tok.text.data() + tok.text.size()) {
    throw ParseError(line.number, tok.col, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return v;
}

inline double parse_real(const Line& line, const Token& tok, const char* what) {
  double v = 0;
  auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || p != tok.text.data() + tok.text.size()) {
    throw ParseError(line.number, tok.col, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return v;
}

inline BitVector parse_bits(const Line& line, const Token& tok, std::size_t expected_len) {
  for (std::size_t i = 0; i < tok.text.size(); ++i) {
    if (tok.text[i] != '0' && tok.text[i] != '1') {
      throw ParseError(line.number, tok.col + i, std::string("expected 0 or 1, got '") + tok.text[i] + "'");
    }
  }
  if (tok.text.size() != expected_len) {
    throw ParseError(line.number, tok.col + std::min(tok.text.size(), expected_len),
                     "row has " + std::to_string(tok.text.size()) + " entries, expected " +
                         std::to_string(expected_len));
  }
  return BitVector::from_string(tok.text);
}

inline const Line& expect_tokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) {
    const std::size_t col = line.tokens.size() > count ? line.tokens[count].col : line.text.size() + 1;
    throw ParseError(line.number, col, std::string("expected ") + shape);
  }
  return line;
}

/// "rows cols" header followed by rows of 0/1 characters.
inline BitMatrix read_matrix_block(Reader& r) {
  const Line& header = expect_tokens(r.next(), 2, "'rows cols'");
  const std::size_t rows = parse_count(header, header.tokens[0], "row count");
  const std::size_t cols = parse_count(header, header.tokens[1], "column count");
  BitMatrix m(0, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Line& l = expect_tokens(r.next(), 1, "one row of 0/1 characters");
    m.append_row(parse_bits(l, l.tokens[0], cols));
  }
  return m;
}

inline bool is_keyword(const Line& l, std::string_view key) { return !l.tokens.empty() && l.tokens[0].text == key; }

inline void expect_end(const Reader& r) {
  if (!r.done()) throw ParseError(r.peek().number, r.peek().tokens[0].col, "unexpected trailing content");
}

}  // namespace detail

inline BitMatrix parse_matrix(const std::string& text) {
  detail::Reader r(text);
  BitMatrix m = detail::read_matrix_block(r);
  detail::expect_end(r);
  return m;
}

inline std::string format_matrix(const BitMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const auto& row : m.row_vectors()) out += row.to_string() + "\n";
  return out;
}

/// Matrix file plus an optional "labels: a b c" line.
inline BinaryMatroid parse_matroid(const std::string& text) {
  detail::Reader r(text);
  BitMatrix m = detail::read_matrix_block(r);
  std::vector<std::string> labels = default_labels(m.cols());
  if (!r.done()) {
    const detail::Line& l = r.next();
    if (!detail::is_keyword(l, "labels:")) throw ParseError(l.number, l.tokens[0].col, "expected 'labels:'");
    if (l.tokens.size() != m.cols() + 1) {
      throw ParseError(l.number, l.tokens.size() > m.cols() + 1 ? l.tokens[m.cols() + 1].col : l.text.size() + 1,
                       "expected " + std::to_string(m.cols()) + " labels");
    }
    labels.clear();
    for (std::size_t i = 1; i < l.tokens.size(); ++i) labels.emplace_back(l.tokens[i].text);
    try {
      detail::expect_end(r);
      return BinaryMatroid(m, std::move(labels));
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.number, l.tokens[0].col, e.what());
    }
  }
  return BinaryMatroid(m, std::move(labels));
}

inline std::string format_matroid(const BinaryMatroid& m) {
  std::string out = format_matrix(m.representation()) + "labels:";
  for (const auto& l : m.labels()) out += " " + l;
  return out + "\n";
}

/// One generator per line: optional sign then letters from IXYZ.
inline StabilizerGroup parse_stabilizer(const std::string& text) {
  detail::Reader r(text);
  std::vector<PauliOperator> gens;
  std::optional<std::size_t> n;
  std::size_t first_line = 0;
  while (!r.done()) {
    const detail::Line& l = detail::expect_tokens(r.next(), 1, "one Pauli string");
    if (first_line == 0) first_line = l.number;
    std::string word(l.tokens[0].text);
    std::size_t offset = 0;
    if (word.rfind("\xE2\x88\x92", 0) == 0) {  // U+2212 minus sign
      word.replace(0, 3, "-");
      offset = 2;
    }
    std::size_t letters = word.size() - ((word[0] == '+' || word[0] == '-') ? 1 : 0);
    if (n && letters != *n) {
      throw ParseError(l.number, l.tokens[0].col, "generator has " + std::to_string(letters) + " qubits, expected " +
                                                      std::to_string(*n));
    }
    for (std::size_t i = (word[0] == '+' || word[0] == '-') ? 1 : 0; i < word.size(); ++i) {
      if (std::string_view("IXYZ").find(word[i]) == std::string_view::npos) {
        throw ParseError(l.number, l.tokens[0].col + i + offset, std::string("invalid Pauli letter '") + word[i] + "'");
      }
    }
    n = letters;
    gens.push_back(PauliOperator::parse(word));
  }
  if (!n) throw ParseError(1, 1, "empty stabilizer file");
  try {
    return StabilizerGroup(*n, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(first_line, 1, e.what());
  }
}

inline std::string format_stabilizer(const StabilizerGroup& s) {
  std::string out;
  for (const auto& g : s.to_strings()) out += g + "\n";
  return out;
}

namespace detail {

/// "n", basis rows, then optional "q:" with 1-based pairs on the same or
/// following lines. Stops before a "dlu:" line.
inline QuadraticFormState read_qform(Reader& r) {
  const Line& header = expect_tokens(r.next(), 1, "qubit count 'n'");
  const std::size_t n = parse_count(header, header.tokens[0], "qubit count");
  BitMatrix basis(0, n);
  std::vector<std::size_t> basis_lines;
  while (!r.done() && !is_keyword(r.peek(), "q:") && !is_keyword(r.peek(), "dlu:")) {
    const Line& l = expect_tokens(r.next(), 1, "one basis row of 0/1 characters");
    basis.append_row(parse_bits(l, l.tokens[0], n));
    basis_lines.push_back(l.number);
  }
  if (rank(basis) != basis.rows()) {
    throw ParseError(basis_lines.empty() ? header.number : basis_lines.back(), 1, "subspace basis rows are dependent");
  }
  QuadraticFormState qf(n, basis);
  if (!r.done() && is_keyword(r.peek(), "q:")) {
    bool first = true;
    while (!r.done() && !is_keyword(r.peek(), "dlu:") && (first || !is_keyword(r.peek(), "q:"))) {
      const Line& l = r.next();
      const std::size_t start = first ? 1 : 0;
      first = false;
      if ((l.tokens.size() - start) % 2 != 0) {
        throw ParseError(l.number, l.tokens.back().col, "quadratic terms come in pairs 'i j'");
      }
      for (std::size_t t = start; t < l.tokens.size(); t += 2) {
        const std::size_t i = parse_count(l, l.tokens[t], "qubit index");
        const std::size_t j = parse_count(l, l.tokens[t + 1], "qubit index");
        if (i == 0 || i > n) throw ParseError(l.number, l.tokens[t].col, "qubit index out of range");
        if (j == 0 || j > n) throw ParseError(l.number, l.tokens[t + 1].col, "qubit index out of range");
        if (i == j) throw ParseError(l.number, l.tokens[t + 1].col, "quadratic term needs two distinct qubits");
        qf.set_pair(i - 1, j - 1);
      }
    }
  }
  return qf;
}

inline std::string format_eighths(double angle) {
  const double units = angle * 8 / std::numbers::pi;
  const double rounded = std::round(units);
  if (std::abs(units - rounded) < 1e-9) return std::to_string(static_cast<long long>(rounded));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", units);
  return buf;
}

}  // namespace detail

inline QuadraticFormState parse_qform(const std::string& text) {
  detail::Reader r(text);
  QuadraticFormState qf = detail::read_qform(r);
  detail::expect_end(r);
  return qf;
}

inline std::string format_qform(const QuadraticFormState& qf) {
  std::string out = std::to_string(qf.num_qubits()) + "\n";
  for (const auto& row : qf.subspace().row_vectors()) out += row.to_string() + "\n";
  const auto pairs = qf.pairs();
  if (!pairs.empty()) {
    out += "q:";
    for (auto [i, j] : pairs) out += " " + std::to_string(i + 1) + " " + std::to_string(j + 1);
    out += "\n";
  }
  return out;
}

/// Quadratic-form state plus "dlu:" with n angles in units of pi/8 (integers
/// or decimals).
inline CounterexampleSeed parse_seed(const std::string& text, std::string provenance = "seed file") {
  detail::Reader r(text);
  QuadraticFormState qf = detail::read_qform(r);
  if (r.done()) throw ParseError(r.last_line() + 1, 1, "missing 'dlu:' line");
  const detail::Line& l = r.next();
  if (!detail::is_keyword(l, "dlu:")) throw ParseError(l.number, l.tokens[0].col, "expected 'dlu:'");
  if (l.tokens.size() != qf.num_qubits() + 1) {
    throw ParseError(l.number, l.tokens.size() > qf.num_qubits() + 1 ? l.tokens[qf.num_qubits() + 1].col
                                                                     : l.text.size() + 1,
                     "expected " + std::to_string(qf.num_qubits()) + " DLU angles");
  }
  DiagonalLocalUnitary u;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    u.thetas.push_back(detail::parse_real(l, l.tokens[i], "angle in units of pi/8") * std::numbers::pi / 8);
  }
  detail::expect_end(r);
  return CounterexampleSeed{std::move(qf), std::move(u), std::move(provenance)};
}

inline std::string format_seed(const CounterexampleSeed& seed) {
  std::string out = format_qform(seed.form) + "dlu:";
  for (double t : seed.dlu.thetas) out += " " + detail::format_eighths(t);
  return out + "\n";
}

/// "C:" and "D:" matrix blocks, then "Xe:" and "Ze:" vectors; optional
/// leading "name:".
inline CssCode parse_css_code(const std::string& text) {
  detail::Reader r(text);
  CssCode code;
  code.name = "code";
  if (!r.done() && detail::is_keyword(r.peek(), "name:")) {
    const detail::Line& l = detail::expect_tokens(r.next(), 2, "'name: <name>'");
    code.name = std::string(l.tokens[1].text);
  }
  auto block = [&](const char* key) {
    const detail::Line& l = detail::expect_tokens(r.next(), 1, key);
    if (!detail::is_keyword(l, key)) throw ParseError(l.number, l.tokens[0].col, std::string("expected '") + key + "'");
    return detail::read_matrix_block(r);
  };
  code.c = block("C:");
  code.d = block("D:");
  code.m = code.d.cols();
  if (code.c.cols() != code.m) throw ParseError(r.last_line(), 1, "C and D have different lengths");
  auto vec = [&](const char* key) {
    const detail::Line& l = detail::expect_tokens(r.next(), 2, key);
    if (!detail::is_keyword(l, key)) throw ParseError(l.number, l.tokens[0].col, std::string("expected '") + key + "'");
    return detail::parse_bits(l, l.tokens[1], code.m);
  };
  code.xe = vec("Xe:");
  const std::size_t ze_line = r.done() ? 0 : r.peek().number;
  code.ze = vec("Ze:");
  detail::expect_end(r);
  try {
    validate(code);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ze_line, 1, e.what());
  }
  return code;
}

inline std::string format_css_code(const CssCode& code) {
  return "name: " + code.name + "\nC:\n" + format_matrix(code.c) + "D:\n" + format_matrix(code.d) +
         "Xe: " + code.xe.to_string() + "\nZe: " + code.ze.to_string() + "\n";
}

/// "vertices: v1 v2 ...", "edge <label>: <u> <v>" and optional
/// "rotation <v>: <label>.0 <label>.1 ..." lines.
inline EmbeddedGraph parse_graph(const std::string& text) {
  detail::Reader r(text);
  EmbeddedGraphBuilder b;
  std::map<std::string, std::size_t, std::less<>> vertices, edges;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  bool have_vertices = false;
  std::size_t last_line = 1;
  std::vector<bool> rotation_given;
  auto vertex = [&](const detail::Line& l, const detail::Token& t) {
    auto it = vertices.find(t.text);
    if (it == vertices.end()) throw ParseError(l.number, t.col, "unknown vertex '" + std::string(t.text) + "'");
    return it->second;
  };
  auto label_of = [](const detail::Line& l, const detail::Token& t) {
    if (t.text.size() < 2 || t.text.back() != ':') throw ParseError(l.number, t.col, "expected '<name>:'");
    return std::string(t.text.substr(0, t.text.size() - 1));
  };
  while (!r.done()) {
    const detail::Line& l = r.next();
    last_line = l.number;
    const std::string_view key = l.tokens[0].text;
    if (key == "vertices:") {
      if (have_vertices) throw ParseError(l.number, l.tokens[0].col, "duplicate 'vertices:' line");
      have_vertices = true;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        std::string name(l.tokens[i].text);
        if (vertices.count(name)) throw ParseError(l.number, l.tokens[i].col, "duplicate vertex '" + name + "'");
        vertices[name] = b.add_vertex(name);
      }
      rotation_given.assign(vertices.size(), false);
    } else if (key == "edge") {
      if (!have_vertices) throw ParseError(l.number, l.tokens[0].col, "'vertices:' must come first");
      detail::expect_tokens(l, 4, "'edge <label>: <u> <v>'");
      const std::string label = label_of(l, l.tokens[1]);
      if (edges.count(label)) throw ParseError(l.number, l.tokens[1].col, "duplicate edge '" + label + "'");
      const std::size_t u = vertex(l, l.tokens[2]), v = vertex(l, l.tokens[3]);
      edges[label] = b.add_edge(label, u, v);
      ends.emplace_back(u, v);
    } else if (key == "rotation") {
      if (l.tokens.size() < 2) throw ParseError(l.number, l.text.size() + 1, "expected 'rotation <v>: ...'");
      const std::string vname = label_of(l, l.tokens[1]);
      auto it = vertices.find(vname);
      if (it == vertices.end()) throw ParseError(l.number, l.tokens[1].col, "unknown vertex '" + vname + "'");
      if (rotation_given[it->second]) throw ParseError(l.number, l.tokens[1].col, "duplicate rotation for " + vname);
      rotation_given[it->second] = true;
      std::vector<std::size_t> darts;
      for (std::size_t i = 2; i < l.tokens.size(); ++i) {
        const std::string_view h = l.tokens[i].text;
        const auto dot = h.rfind('.');
        if (dot == std::string_view::npos || (h.substr(dot + 1) != "0" && h.substr(dot + 1) != "1")) {
          throw ParseError(l.number, l.tokens[i].col, "half-edge must be '<edge>.0' or '<edge>.1'");
        }
        auto e = edges.find(h.substr(0, dot));
        if (e == edges.end()) {
          throw ParseError(l.number, l.tokens[i].col, "unknown edge '" + std::string(h.substr(0, dot)) + "'");
        }
        const std::size_t side = h.substr(dot + 1) == "1" ? 1 : 0;
        const std::size_t owner = side == 0 ? ends[e->second].first : ends[e->second].second;
        if (owner != it->second) {
          throw ParseError(l.number, l.tokens[i].col, "half-edge " + std::string(h) + " is not at vertex " + vname);
        }
        darts.push_back(2 * e->second + side);
      }
      b.set_rotation(it->second, std::move(darts));
    } else {
      throw ParseError(l.number, l.tokens[0].col, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_vertices) throw ParseError(last_line, 1, "missing 'vertices:' line");
  try {
    return b.build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(last_line, 1, e.what());
  }
}

inline std::string format_graph(const EmbeddedGraph& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertex_labels()) out += " " + v;
  out += "\n";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out += "edge " + g.edge_labels()[e] + ": " + g.vertex_labels()[g.ends()[e].first] + " " +
           g.vertex_labels()[g.ends()[e].second] + "\n";
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    out += "rotation " + g.vertex_labels()[v] + ":";
    for (std::size_t d : g.rotation(v)) out += " " + g.edge_labels()[d / 2] + "." + std::to_string(d % 2);
    out += "\n";
  }
  return out;
}

}  // namespace stablulc

#endif  // STABLULC_TEXT_FORMAT_HPP_
