#pragma once

// Line-oriented text formats for symmetric graphs, signed graphs, and toric
// arrangements. `#` starts a comment; blank lines are ignored.

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "signedchroma/graph.hpp"
#include "signedchroma/toric.hpp"

namespace signedchroma {

struct ParsedGraph {
  FrozenGraph gamma;
  bool was_signed = false;
};

namespace detail {

struct Line {
  int number;
  std::vector<std::string> words;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] inline void fail(const Line& line, const std::string& message) {
  throw ParseError("line " + std::to_string(line.number) + ": " + message);
}

inline long long to_integer(const Line& line, std::string_view word) {
  long long value = 0;
  const char* begin = word.data();
  if (!word.empty() && word.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || begin == word.data() + word.size()) {
    fail(line, "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

inline int to_index(const Line& line, std::string_view word, int lo, int hi) {
  const long long value = to_integer(line, word);
  if (value < lo || value > hi) {
    fail(line, "index " + std::string(word) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return static_cast<int>(value);
}

inline void expect_arity(const Line& line, std::size_t count) {
  if (line.words.size() != count) fail(line, "expected " + std::to_string(count - 1) + " argument(s) to '" + line.words[0] + "'");
}

inline int parse_header(const Line& line) {
  expect_arity(line, 2);
  return to_index(line, line.words[1], 0, 64);
}

inline IndexSet parse_frozen(const Line& line, int n) {
  IndexSet out;
  std::string joined;
  for (std::size_t i = 1; i < line.words.size(); ++i) joined += line.words[i];
  std::istringstream items(joined);
  for (std::string item; std::getline(items, item, ',');) {
    if (item.empty()) continue;
    if (!out.insert(to_index(line, item, 1, n)).second) fail(line, "frozen index " + item + " repeated");
  }
  return out;
}

inline Rational parse_rational(const Line& line, std::string_view word) {
  const auto slash = word.find('/');
  if (slash == std::string_view::npos) return Rational(to_integer(line, word));
  const long long den = to_integer(line, word.substr(slash + 1));
  if (den <= 0) fail(line, "denominator must be positive");
  return Rational(to_integer(line, word.substr(0, slash)), den);
}

inline ParsedGraph parse_symmetric_body(const std::vector<Line>& lines, int n) {
  std::vector<Edge> edges;
  std::optional<IndexSet> frozen;
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& head = line.words[0];
    if (head == "edge") {
      expect_arity(line, 3);
      const int i = to_index(line, line.words[1], -n, n);
      const int j = to_index(line, line.words[2], -n, n);
      if (i == j) fail(line, "loop edge {" + std::to_string(i) + "," + std::to_string(i) + "} is not allowed");
      edges.emplace_back(i, j);
    } else if (head == "frozen") {
      if (frozen) fail(line, "duplicate frozen line");
      frozen = parse_frozen(line, n);
    } else {
      fail(line, "unknown directive '" + head + "'");
    }
  }
  return {FrozenGraph(SymmetricGraph(n, edges), frozen.value_or(IndexSet{})), false};
}

inline ParsedGraph parse_signed_body(const std::vector<Line>& lines, int m) {
  SignedGraph s{m, {}, {}, {}, {}};
  std::optional<IndexSet> frozen;
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& head = line.words[0];
    if (head == "link") {
      expect_arity(line, 4);
      const std::string& sign = line.words[1];
      if (sign != "+" && sign != "-") fail(line, "link sign must be + or -");
      const int i = to_index(line, line.words[2], 1, m);
      const int j = to_index(line, line.words[3], 1, m);
      if (i == j) fail(line, sign == "+" ? "positive loops are not allowed" : "write negative loops as 'loop - i'");
      auto& links = sign == "+" ? s.positive_links : s.negative_links;
      if (!links.insert({std::min(i, j), std::max(i, j)}).second) fail(line, "duplicate link");
    } else if (head == "loop") {
      expect_arity(line, 3);
      if (line.words[1] == "+") fail(line, "positive loops are not allowed");
      if (line.words[1] != "-") fail(line, "loop sign must be -");
      if (!s.negative_loops.insert(to_index(line, line.words[2], 1, m)).second) fail(line, "duplicate loop");
    } else if (head == "half") {
      expect_arity(line, 2);
      if (!s.half_edges.insert(to_index(line, line.words[1], 1, m)).second) fail(line, "duplicate half edge");
    } else if (head == "frozen") {
      if (frozen) fail(line, "duplicate frozen line");
      frozen = parse_frozen(line, m);
    } else {
      fail(line, "unknown directive '" + head + "'");
    }
  }
  return {FrozenGraph(signed_to_symmetric(s), frozen.value_or(IndexSet{})), true};
}

}  // namespace detail

/// Reads either grammar; signed inputs are converted to symmetric form.
inline ParsedGraph parse_graph_file(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input: expected 'symmetric <n>' or 'signed <m>'");
  const auto& header = lines.front();
  if (header.words[0] == "symmetric") return detail::parse_symmetric_body(lines, detail::parse_header(header));
  if (header.words[0] == "signed") return detail::parse_signed_body(lines, detail::parse_header(header));
  detail::fail(header, "expected header 'symmetric <n>' or 'signed <m>'");
}

/// `torus n` followed by `hyperplane c1 .. cn = p/q` lines.
inline ToricArrangement parse_arrangement_file(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input: expected 'torus <n>'");
  if (lines.front().words[0] != "torus") detail::fail(lines.front(), "expected header 'torus <n>'");
  const int n = detail::parse_header(lines.front());
  ToricArrangement out(n);
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const auto& line = lines[idx];
    if (line.words[0] != "hyperplane") detail::fail(line, "unknown directive '" + line.words[0] + "'");
    detail::expect_arity(line, static_cast<std::size_t>(n) + 3);
    if (line.words[static_cast<std::size_t>(n) + 1] != "=") detail::fail(line, "expected '=' after the coefficients");
    std::vector<long long> coefficients;
    for (int c = 1; c <= n; ++c) coefficients.push_back(detail::to_integer(line, line.words[static_cast<std::size_t>(c)]));
    if (std::all_of(coefficients.begin(), coefficients.end(), [](long long c) { return c == 0; })) {
      detail::fail(line, "hyperplane normal must be nonzero");
    }
    out.add(make_toric_hyperplane(std::move(coefficients), detail::parse_rational(line, line.words.back())));
  }
  return out;
}

/// A graph file or an arrangement file, told apart by the header.
using ToricInput = std::variant<ParsedGraph, ToricArrangement>;

inline ToricInput parse_toric_input(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (!lines.empty() && lines.front().words[0] == "torus") return parse_arrangement_file(text);
  return parse_graph_file(text);
}

inline std::string format_symmetric(const FrozenGraph& gamma) {
  std::string out = "symmetric " + std::to_string(gamma.graph.pairs()) + "\n";
  for (const Edge& e : gamma.graph.orbits()) out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  if (!gamma.frozen.empty()) {
    out += "frozen ";
    bool first = true;
    for (int i : gamma.frozen) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
    out += "\n";
  }
  return out;
}

inline std::string format_signed(const FrozenGraph& gamma) {
  const SignedGraph s = symmetric_to_signed(gamma.graph);
  std::string out = "signed " + std::to_string(s.m) + "\n";
  for (const auto& [i, j] : s.positive_links) out += "link + " + std::to_string(i) + " " + std::to_string(j) + "\n";
  for (const auto& [i, j] : s.negative_links) out += "link - " + std::to_string(i) + " " + std::to_string(j) + "\n";
  for (int i : s.negative_loops) out += "loop - " + std::to_string(i) + "\n";
  for (int i : s.half_edges) out += "half " + std::to_string(i) + "\n";
  if (!gamma.frozen.empty()) {
    out += "frozen ";
    bool first = true;
    for (int i : gamma.frozen) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
    out += "\n";
  }
  return out;
}

inline std::string format_hyperplane(const ToricHyperplane& h) {
  std::string out = "hyperplane";
  for (long long c : h.normal) out += " " + std::to_string(c);
  return out + " = " + h.offset.str();
}

}  // namespace signedchroma
