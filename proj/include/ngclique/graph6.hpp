#pragma once

// graph6 reader/writer, short form only (n <= 62).
//
// Layout: byte 0 is n + 63; the upper triangle follows column by column,
// x(0,1) x(0,2) x(1,2) x(0,3) ..., packed six bits per byte (high bit first),
// zero-padded, each group stored as value + 63.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ngclique/graph.hpp"

namespace ngc {

class Graph6Error : public std::runtime_error {
public:
  enum class Kind {
    malformed_header,   // empty input or first byte outside '?'..'~'
    too_many_vertices,  // long-form header ('~'), i.e. n > 62
    invalid_byte,       // body byte outside '?'..'~'
    truncated,          // fewer body bytes than n requires
    trailing_bytes,     // more body bytes than n requires
    nonzero_padding,    // padding bits of the last byte are set
  };

  Graph6Error(Kind kind, std::size_t offset, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind), offset_(offset) {}

  Kind kind() const { return kind_; }
  /// Byte offset of the offending byte in the input.
  std::size_t offset() const { return offset_; }

private:
  Kind kind_;
  std::size_t offset_;
};

namespace detail {

inline std::string describe_byte(std::string_view text, std::size_t offset) {
  const auto c = static_cast<unsigned char>(text[offset]);
  std::string out = "byte " + std::to_string(offset) + " (0x";
  const char* hex = "0123456789abcdef";
  out += hex[c >> 4];
  out += hex[c & 0xF];
  if (c >= 0x20 && c < 0x7F) {
    out += " '";
    out += static_cast<char>(c);
    out += '\'';
  }
  out += ')';
  return out;
}

constexpr std::size_t graph6_body_length(int n) {
  return (static_cast<std::size_t>(pair_count(n)) + 5) / 6;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
  using Kind = Graph6Error::Kind;
  if (text.empty()) throw Graph6Error(Kind::malformed_header, 0, "graph6: empty input");
  const auto head = static_cast<unsigned char>(text[0]);
  if (head == 126)
    throw Graph6Error(Kind::too_many_vertices, 0,
                      "graph6: long-form header at byte 0 ('~'); only n <= 62 is supported");
  if (head < 63 || head > 126)
    throw Graph6Error(Kind::malformed_header, 0,
                      "graph6: bad header " + detail::describe_byte(text, 0));
  const int n = head - 63;

  const std::size_t body = detail::graph6_body_length(n);
  for (std::size_t k = 1; k < text.size() && k <= body; ++k) {
    const auto c = static_cast<unsigned char>(text[k]);
    if (c < 63 || c > 126)
      throw Graph6Error(Kind::invalid_byte, k, "graph6: invalid " + detail::describe_byte(text, k));
  }
  if (text.size() < body + 1)
    throw Graph6Error(Kind::truncated, text.size(),
                      "graph6: expected " + std::to_string(body) + " body bytes for n=" +
                          std::to_string(n) + ", got " + std::to_string(text.size() - 1));
  if (text.size() > body + 1)
    throw Graph6Error(Kind::trailing_bytes, body + 1,
                      "graph6: trailing " + detail::describe_byte(text, body + 1));

  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = body;
    const int value = static_cast<unsigned char>(text[last]) - 63;
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (value & pad_mask)
      throw Graph6Error(Kind::nonzero_padding, last,
                        "graph6: nonzero padding bits in " + detail::describe_byte(text, last));
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1 + detail::graph6_body_length(n), static_cast<char>(63));
  out[0] = static_cast<char>(n + 63);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

}  // namespace ngc
