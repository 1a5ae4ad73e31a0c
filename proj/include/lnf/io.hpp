#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lnf/errors.hpp"
#include "lnf/graph.hpp"

namespace lnf {

// graph6: standard ASCII encoding. Header is one byte for order <= 62,
// '~' + 3 bytes up to 258047, '~~' + 6 bytes beyond. Body packs the upper
// triangle column by column, six bits per byte, each byte offset by 63.

namespace detail {

inline void g6_append_number(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(char(63 + ((n >> sh) & 63)));
  }
}

inline int g6_char(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw parse_error("graph6 string truncated", s.size());
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    throw parse_error("invalid graph6 character", i);
  return c - 63;
}

inline int g6_read_fixed(std::string_view s, std::size_t& i) {
  int v = g6_char(s, i);
  ++i;
  return v;
}

inline long long g6_read_number(std::string_view s, std::size_t& i) {
  int c0 = g6_char(s, i);
  if (c0 != 63) {
    ++i;
    return c0;
  }
  if (i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 126) {
    i += 2;
    long long n = 0;
    for (int k = 0; k < 6; ++k) n = (n << 6) | g6_read_fixed(s, i);
    return n;
  }
  ++i;
  long long n = 0;
  for (int k = 0; k < 3; ++k) n = (n << 6) | g6_read_fixed(s, i);
  return n;
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
  std::string out;
  detail::g6_append_number(out, g.order());
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(char(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw parse_error("empty graph6 string", 0);
  std::size_t i = 0;
  long long n = detail::g6_read_number(s, i);
  if (n > kMaxOrder)
    throw parse_error("graph6 order " + std::to_string(n) + " exceeds cap", 0);
  const long long bits = n * (n - 1) / 2;
  const std::size_t body = std::size_t((bits + 5) / 6);
  if (s.size() - i < body) throw parse_error("graph6 string truncated", s.size());
  if (s.size() - i > body) throw parse_error("trailing characters after graph6 body", i + body);
  Graph::Builder b(static_cast<int>(n));
  long long bit = 0;
  int acc = 0, nbits = 0;
  std::size_t pos = i;
  for (int j = 1; j < n; ++j)
    for (int k = 0; k < j; ++k) {
      if (nbits == 0) {
        acc = detail::g6_char(s, pos);
        ++pos;
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) b.add_edge(k, j);
      --nbits;
      ++bit;
    }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw parse_error("nonzero padding bits in graph6 body", pos - 1);
  return b.build();
}

// Edge list: optional "n <order>" line, then one "u v" pair per line,
// 0-based. Blank lines and '#' comments are skipped. Without an order line
// the order is max(index)+1.
inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

inline Graph parse_edge_list(std::string_view s) {
  long long order = -1;
  std::vector<std::pair<long long, long long>> edges;
  long long max_seen = -1;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t eol = s.find('\n', pos);
    if (eol == std::string_view::npos) eol = s.size();
    std::string_view line = s.substr(pos, eol - pos);
    std::size_t line_start = pos;
    pos = eol + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    std::istringstream ls{std::string(line)};
    std::string tok;
    ls >> tok;
    if (tok == "n") {
      if (!(ls >> order) || order < 0)
        throw parse_error("bad order line in edge list", line_start);
      continue;
    }
    long long u, v;
    std::istringstream es{std::string(line)};
    if (!(es >> u >> v) || u < 0 || v < 0)
      throw parse_error("bad edge line in edge list", line_start);
    std::string rest;
    if (es >> rest) throw parse_error("trailing tokens on edge line", line_start);
    edges.emplace_back(u, v);
    max_seen = std::max({max_seen, u, v});
  }
  if (order < 0) order = max_seen + 1;
  if (order > kMaxOrder)
    throw parse_error("edge list order exceeds cap", 0);
  if (max_seen >= order)
    throw parse_error("edge endpoint exceeds declared order", 0);
  Graph::Builder b(static_cast<int>(order));
  for (auto [u, v] : edges) {
    if (u == v) throw parse_error("self-loop in edge list", 0);
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return b.build();
}

// DOT output: one node statement per vertex, then edges as sorted pairs.
inline std::string emit_dot(const Graph& g,
                            const std::vector<std::string>* labels = nullptr) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (labels && v < static_cast<int>(labels->size()) && !(*labels)[v].empty())
      out << " [label=\"" << (*labels)[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// Accepts graph6 or edge-list content; edge lists are recognized by a digit,
// 'n' or '#' start plus whitespace structure.
inline Graph parse_graph_auto(std::string_view s) {
  std::size_t first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw parse_error("empty input", 0);
  std::string_view t = s.substr(first);
  bool looks_edge_list = t[0] == '#' || (t[0] == 'n' && t.size() > 1 && std::isspace(static_cast<unsigned char>(t[1])));
  if (!looks_edge_list && std::isdigit(static_cast<unsigned char>(t[0]))) {
    std::size_t sp = t.find_first_of(" \t");
    looks_edge_list = sp != std::string_view::npos;
  }
  if (looks_edge_list) return parse_edge_list(s);
  // graph6: strip surrounding whitespace, single token
  std::size_t last = s.find_last_not_of(" \t\r\n");
  return parse_graph6(s.substr(first, last - first + 1));
}

}  // namespace lnf
