#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tnet/hypergraph.hpp"
#include "tnet/nets.hpp"

namespace tnet::io {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  require(res.ec == std::errc() && res.ptr == tok.data() + tok.size(), ErrorCode::ParseError,
          "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

inline double parse_real(std::string_view tok, std::size_t line_no) {
  double v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  require(res.ec == std::errc() && res.ptr == tok.data() + tok.size(), ErrorCode::ParseError,
          "line " + std::to_string(line_no) + ": expected a number, got '" + std::string(tok) + "'");
  return v;
}

// Strictly increasing indices below n, from tokens[1..].
inline std::vector<Index> parse_indices(const std::vector<std::string_view>& toks, std::size_t n,
                                        std::size_t line_no) {
  std::vector<Index> idx;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const auto v = parse_uint(toks[i], line_no);
    require(v < n, ErrorCode::ParseError,
            "line " + std::to_string(line_no) + ": index " + std::to_string(v) + " out of range");
    require(idx.empty() || v > idx.back(), ErrorCode::ParseError,
            "line " + std::to_string(line_no) + ": indices must be strictly increasing");
    idx.push_back(static_cast<Index>(v));
  }
  return idx;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    const auto toks = split_ws(strip_comment(line));
    if (!toks.empty()) f(toks, line_no);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

inline void append_indices(std::string& out, std::string_view tag, const std::vector<Index>& idx) {
  out += tag;
  for (Index v : idx) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
}

}  // namespace detail

struct HgFile {
  Hypergraph hyper;
  std::optional<std::vector<Index>> cycle;
};

inline HgFile parse_hg(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::vector<Index>> edges;
  std::optional<std::vector<Index>> cycle;
  detail::for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line_no) {
    const std::string at = "line " + std::to_string(line_no) + ": ";
    if (!n) {
      require(toks[0] == "n" && toks.size() == 2, ErrorCode::ParseError, at + "expected 'n <count>' header");
      n = detail::parse_uint(toks[1], line_no);
      require(*n <= max_vertices(), ErrorCode::TooLarge,
              std::to_string(*n) + " vertices exceeds the cap of " + std::to_string(max_vertices()));
      return;
    }
    if (toks[0] == "e") {
      require(!cycle, ErrorCode::ParseError, at + "edge after cycle line");
      edges.push_back(detail::parse_indices(toks, *n, line_no));
    } else if (toks[0] == "cycle") {
      require(!cycle, ErrorCode::ParseError, at + "duplicate cycle line");
      std::vector<Index> order;
      std::vector<bool> seen(*n, false);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto v = detail::parse_uint(toks[i], line_no);
        require(v < *n && !seen[v], ErrorCode::ParseError, at + "cycle must be a permutation of the vertices");
        seen[v] = true;
        order.push_back(static_cast<Index>(v));
      }
      require(order.size() == *n, ErrorCode::ParseError, at + "cycle must list every vertex once");
      cycle = std::move(order);
    } else {
      fail(ErrorCode::ParseError, at + "unknown record '" + std::string(toks[0]) + "'");
    }
  });
  require(n.has_value(), ErrorCode::ParseError, "missing 'n <count>' header");
  return {Hypergraph::from_lists(*n, edges), std::move(cycle)};
}

inline std::string serialize_hg(const Hypergraph& h, const std::vector<Index>* cycle = nullptr) {
  std::string out = "n " + std::to_string(h.n()) + "\n";
  for (const auto& e : h.edges()) detail::append_indices(out, "e", e.indices());
  if (cycle) detail::append_indices(out, "cycle", *cycle);
  return out;
}

struct NetFile {
  TSubsetFamily family;
  double eps = 0.0;
};

// Members are checked against vertex count n.
inline NetFile parse_net(std::string_view text, std::size_t n) {
  NetFile out;
  bool header = false;
  detail::for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line_no) {
    const std::string at = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      require(toks.size() == 4 && toks[0] == "t" && toks[2] == "eps", ErrorCode::ParseError,
              at + "expected 't <size> eps <value>' header");
      const auto t = detail::parse_uint(toks[1], line_no);
      require(t >= 1, ErrorCode::ParseError, at + "t must be at least 1");
      out.family = TSubsetFamily(t);
      out.eps = detail::parse_real(toks[3], line_no);
      header = true;
      return;
    }
    require(toks[0] == "s", ErrorCode::ParseError, at + "expected 's <idx> ...'");
    const auto idx = detail::parse_indices(toks, n, line_no);
    require(idx.size() == out.family.t, ErrorCode::ParseError,
            at + "member has " + std::to_string(idx.size()) + " indices, expected " + std::to_string(out.family.t));
    out.family.add(VertexSubset::from_indices(n, idx));
  });
  require(header, ErrorCode::ParseError, "missing 't <size> eps <value>' header");
  return out;
}

inline std::string serialize_net(const TSubsetFamily& s, double eps) {
  std::string out = "t " + std::to_string(s.t) + " eps " + format_real(eps) + "\n";
  for (const auto& m : s.members()) detail::append_indices(out, "s", m.indices());
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::BadInput, "cannot write " + path);
  out << content;
}

}  // namespace tnet::io
