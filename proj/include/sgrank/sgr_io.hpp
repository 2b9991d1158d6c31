#pragma once

// Reader and writer for the ".sgr" signed edge-list format:
//
//   # comment
//   n m
//   u v s        (m lines, 0 <= u < v < n, s is '+' or '-')

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "sgrank/signed_graph.hpp"

namespace sgrank {

class SgrParseError : public std::runtime_error {
 public:
  SgrParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

inline bool parse_int_token(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace detail

inline SignedGraph read_sgr(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<SignedEdge> edges;
  std::set<std::pair<long long, long long>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!have_header) {
      ls >> a >> b;
      if (!detail::parse_int_token(a, n) || !detail::parse_int_token(b, m) || (ls >> extra) || n < 0 || m < 0) {
        throw SgrParseError("malformed header, expected 'n m'", lineno);
      }
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw SgrParseError("unexpected content after last edge", lineno);
    ls >> a >> b >> c;
    long long u = 0;
    long long v = 0;
    if (!detail::parse_int_token(a, u) || !detail::parse_int_token(b, v) || c.size() != 1 || (ls >> extra)) {
      throw SgrParseError("malformed edge, expected 'u v s'", lineno);
    }
    if (c[0] != '+' && c[0] != '-') throw SgrParseError("invalid sign '" + c + "'", lineno);
    if (u == v) throw SgrParseError("self-loop", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) throw SgrParseError("vertex out of range", lineno);
    if (u > v) throw SgrParseError("edge endpoints must satisfy u < v", lineno);
    if (!seen.insert({u, v}).second) throw SgrParseError("duplicate edge", lineno);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), c[0] == '+' ? Sign::Positive : Sign::Negative});
  }
  if (!have_header) throw SgrParseError("missing header", lineno + 1);
  if (static_cast<long long>(edges.size()) != m) {
    throw SgrParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), lineno + 1);
  }
  return SignedGraph(static_cast<int>(n), std::move(edges));
}

inline SignedGraph parse_sgr(const std::string& text) {
  std::istringstream in(text);
  return read_sgr(in);
}

inline SignedGraph load_sgr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sgr(in);
}

inline void write_sgr(std::ostream& out, const SignedGraph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
}

inline std::string to_sgr(const SignedGraph& g) {
  std::ostringstream os;
  write_sgr(os, g);
  return os.str();
}

}  // namespace sgrank
