#pragma once

// graph6 reader (underlying graphs only; signs are not representable).

#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgrank/signed_graph.hpp"

namespace sgrank {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t record)
      : std::runtime_error("graph6 record " + std::to_string(record) + ": " + what), record_(record) {}
  std::size_t record() const noexcept { return record_; }

 private:
  std::size_t record_;
};

/// Decodes one graph6 string into an all-positive SignedGraph.
inline SignedGraph parse_graph6(std::string_view s, std::size_t record = 1) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw Graph6Error("truncated record", record);
    const int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw Graph6Error("byte out of range", record);
    return c - 63;
  };
  long long n = 0;
  if (s.empty()) throw Graph6Error("empty record", record);
  if (s[0] != '~') {
    n = next();
  } else {
    ++pos;
    if (pos < s.size() && s[pos] == '~') throw Graph6Error("graphs with more than 258047 vertices unsupported", record);
    n = (static_cast<long long>(next()) << 12) | (static_cast<long long>(next()) << 6) | next();
  }
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != bytes) throw Graph6Error("wrong record length", record);
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  int chunk = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = next();
      if (chunk & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  return SignedGraph::unsigned_graph(static_cast<int>(n), edges);
}

inline std::vector<SignedGraph> load_graph6(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file " + path);
  std::vector<SignedGraph> out;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_graph6(line, ++record));
  }
  return out;
}

}  // namespace sgrank
