#pragma once

// graph6 codec (McKay's format): N(n) header, then the upper triangle of the
// adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
// packed six bits per byte, most significant bit first, each byte offset
// by 63.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "imax/errors.hpp"
#include "imax/graph.hpp"

namespace imax {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((static_cast<std::uint64_t>(n) >> shift) & 0x3F) + 63));
  }
}

inline unsigned sextet(std::string_view text, std::size_t pos) {
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError("byte value " + std::to_string(c) + " outside graph6 range 63..126", pos);
  return c - 63U;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::append_size(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// Parses one graph6 encoding. A leading ">>graph6<<" header and a trailing
// newline / carriage return are accepted. Bits in the final padding are
// ignored.
inline Graph parse_graph6(std::string_view text, std::size_t max_vertices = kDefaultVertexCap) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (text.empty()) throw ParseError("empty graph6 string", 0);
  if (text.front() == ':') throw ParseError("sparse6 input is not supported (graph6 only)", 0);
  if (text.front() == '&') throw ParseError("digraph6 input is not supported (graph6 only)", 0);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = detail::sextet(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
    if (text.size() < 8) throw ParseError("truncated 8-byte size header", text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | detail::sextet(text, i);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("truncated 4-byte size header", text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::sextet(text, i);
    if (n <= 62) throw ParseError("non-minimal size header", 0);
    pos = 4;
  }
  if (n > max_vertices)
    throw ParseError("order " + std::to_string(n) + " exceeds vertex cap " +
                         std::to_string(max_vertices),
                     0);

  const std::size_t bits = static_cast<std::size_t>(n * (n - (n ? 1 : 0)) / 2);
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body)
    throw ParseError("truncated bit vector: expected " + std::to_string(body) + " data bytes",
                     text.size());
  if (text.size() > pos + body) throw ParseError("trailing bytes after graph", pos + body);

  Graph g(static_cast<std::size_t>(n));
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      unsigned byte = detail::sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

// Line-oriented graph6 reader. Blank lines and lines starting with ">>"
// (other than a ">>graph6<<" prefix directly followed by a graph) are
// skipped. Parse errors carry the 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, std::size_t max_vertices = kDefaultVertexCap)
      : in_(&in), max_vertices_(max_vertices) {}

  // Next graph, or nullopt at end of input. `text` (optional) receives the
  // graph6 line as read.
  std::optional<Graph> next(std::string* text = nullptr) {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view view(line);
      if (view.starts_with(kGraph6Header)) view.remove_prefix(kGraph6Header.size());
      if (view.empty() || view.starts_with(">>")) continue;
      try {
        Graph g = parse_graph6(view, max_vertices_);
        if (text) *text = std::string(view);
        return g;
      } catch (const ParseError& e) {
        throw ParseError(strip_offset(e.what()), e.byte_offset(), line_);
      }
    }
    return std::nullopt;
  }

  std::size_t line() const { return line_; }

 private:
  static std::string strip_offset(const std::string& what) {
    auto at = what.rfind(" at byte ");
    return at == std::string::npos ? what : what.substr(0, at);
  }

  std::istream* in_;
  std::size_t max_vertices_;
  std::size_t line_ = 0;
};

}  // namespace imax
