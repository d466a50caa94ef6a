#pragma once

// Edge-coloring text format:
//
//   n r          header: vertex count, color count
//   u v c        one line per colored edge, 0-indexed vertices, c in 1..r
//
// Blank lines and '#' comments are ignored; edges not listed are uncolored.
// An edge listed twice is an error, so a parsed file is always edge-disjoint.

#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngclique/multicolor.hpp"

namespace ngc {

class ColoringParseError : public std::runtime_error {
public:
  ColoringParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  long long value;
  std::size_t column;  // 1-based
};

// Integer tokens of one line, comment stripped.
inline std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    const char c = line[k];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-')
      throw ColoringParseError(line_no, start + 1, std::string("unexpected character '") + c + "'");
    ++k;
    while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) ++k;
    if (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#')
      throw ColoringParseError(line_no, k + 1, std::string("unexpected character '") + line[k] + "'");
    const std::string text(line.substr(start, k - start));
    if (text == "-") throw ColoringParseError(line_no, start + 1, "dangling '-'");
    if (text.size() > 9) throw ColoringParseError(line_no, start + 1, "number too large");
    out.push_back({std::stoll(text), start + 1});
  }
  return out;
}

}  // namespace detail

inline GraphFamily parse_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<GraphFamily> fam;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::tokenize_line(line, line_no);
    if (tokens.empty()) continue;
    if (!fam) {
      if (tokens.size() != 2) throw ColoringParseError(line_no, tokens.front().column, "header must be 'n r'");
      const auto [n, ncol] = tokens[0];
      const auto [r, rcol] = tokens[1];
      if (n < 0 || n > kMaxVertices) throw ColoringParseError(line_no, ncol, "n must lie in [0, 62]");
      if (r < 1 || r > 64) throw ColoringParseError(line_no, rcol, "r must lie in [1, 64]");
      fam.emplace(static_cast<int>(n), static_cast<int>(r));
      continue;
    }
    if (tokens.size() != 3)
      throw ColoringParseError(line_no, tokens.size() > 3 ? tokens[3].column : tokens.front().column,
                               "edge line must be 'u v c'");
    const auto [u, ucol] = tokens[0];
    const auto [v, vcol] = tokens[1];
    const auto [c, ccol] = tokens[2];
    if (u < 0 || u >= fam->order()) throw ColoringParseError(line_no, ucol, "vertex out of range");
    if (v < 0 || v >= fam->order()) throw ColoringParseError(line_no, vcol, "vertex out of range");
    if (u == v) throw ColoringParseError(line_no, vcol, "loop edge");
    if (c < 1 || c > fam->colors()) throw ColoringParseError(line_no, ccol, "color must lie in 1..r");
    if (fam->color_of(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ColoringParseError(line_no, ucol, "edge " + std::to_string(u) + "-" + std::to_string(v) + " colored twice");
    fam->color_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(c - 1));
  }
  if (!fam) throw ColoringParseError(line_no + 1, 1, "missing 'n r' header");
  return std::move(*fam);
}

inline GraphFamily parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coloring(in);
}

/// Canonical text: header, then colored edges in edge-slot order.
inline std::string emit_coloring(const GraphFamily& fam) {
  std::ostringstream out;
  out << fam.order() << ' ' << fam.colors() << '\n';
  for (auto [u, v] : edge_slots(fam.order()))
    if (auto c = fam.color_of(u, v)) out << u << ' ' << v << ' ' << *c + 1 << '\n';
  return out.str();
}

/// Compact witness form: one digit-or-letter per edge slot, '.' for uncolored.
inline std::string coloring_blob(const GraphFamily& fam) {
  static constexpr std::string_view digits = "123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  for (int c : fam.slot_colors()) out.push_back(c == 0 ? '.' : digits.at(static_cast<std::size_t>(c - 1)));
  return out;
}

inline GraphFamily parse_coloring_blob(int n, int r, std::string_view blob) {
  static constexpr std::string_view digits = "123456789abcdefghijklmnopqrstuvwxyz";
  std::vector<int> colors;
  for (char ch : blob) {
    if (ch == '.') {
      colors.push_back(0);
      continue;
    }
    const auto pos = digits.find(ch);
    if (pos == std::string_view::npos || static_cast<int>(pos) >= r) throw std::invalid_argument("bad coloring blob");
    colors.push_back(static_cast<int>(pos) + 1);
  }
  return GraphFamily::from_slot_colors(n, r, colors);
}

}  // namespace ngc
