#pragma once

// graph6 encoding (McKay). Only orders 0..64 are representable by `graph`,
// so the 8-byte size form (n >= 258048) is rejected on input.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace evenpath {

inline std::string to_graph6(const graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw parse_error("empty graph6 string", 0);

  auto sextet = [&](std::size_t pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw parse_error("byte outside graph6 range 63..126", pos);
    return c - 63;
  };
  for (std::size_t i = 0; i < text.size(); ++i) sextet(i);

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() < 4) throw parse_error("truncated size field", text.size());
    if (static_cast<unsigned char>(text[1]) == 126) throw parse_error("graph order too large (8-byte form)", 1);
    n = (static_cast<long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
    if (n <= 62) throw parse_error("non-canonical size field", 0);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n > max_vertices) throw parse_error("graph order " + std::to_string(n) + " exceeds 64", 0);

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < expected) throw parse_error("graph6 string too short", text.size());
  if (text.size() > expected) throw parse_error("trailing bytes after graph6 data", expected);

  graph g(static_cast<int>(n));
  long bit = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      if ((sextet(at) >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (sextet(last) & ((1 << pad) - 1)) throw parse_error("nonzero padding bits", last);
  }
  return g;
}

/// Newline-delimited graph6 stream; blank lines are skipped. Parse errors
/// report the byte offset within the whole stream.
inline std::vector<graph> read_graph6_stream(std::istream& in) {
  std::vector<graph> out;
  std::string line;
  std::size_t consumed = 0;
  while (std::getline(in, line)) {
    std::string_view view = line;
    std::size_t skipped = 0;
    if (view.starts_with(">>graph6<<")) {
      view.remove_prefix(10);
      skipped = 10;
    }
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (!view.empty()) {
      try {
        out.push_back(from_graph6(view));
      } catch (const parse_error& e) {
        throw parse_error("line " + std::to_string(out.size() + 1) + ": " + e.what(),
                          consumed + skipped + e.offset());
      }
    }
    consumed += line.size() + 1;
  }
  return out;
}

}  // namespace evenpath
