#pragma once

// Exact rank and determinant over the rationals by fraction-free (Bareiss)
// elimination. Elimination first runs on checked 64-bit integers and restarts
// on arbitrary-precision integers if any intermediate overflows, so the result
// is exact for every order.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgrank/signed_graph.hpp"

namespace sgrank {

using BigInt = boost::multiprecision::cpp_int;

struct RankReport {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::size_t order = 0;

  friend bool operator==(const RankReport&, const RankReport&) = default;
};

namespace detail {

struct CheckedInt64 {
  using value_type = std::int64_t;
  // (a*b - c*d) / prev; false on overflow.
  static bool step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t prev,
                   std::int64_t& out) noexcept {
    std::int64_t ab = 0;
    std::int64_t cd = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &diff))
      return false;
    out = diff / prev;
    return true;
  }
};

struct Unbounded {
  using value_type = BigInt;
  static bool step(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, const BigInt& prev,
                   BigInt& out) {
    out = (a * b - c * d) / prev;
    return true;
  }
};

template <class T>
struct Elimination {
  std::size_t rank = 0;
  bool odd_swaps = false;
  T last_pivot{1};
};

/// Fraction-free row echelon of the n x n row-major matrix `a`, pivoting on the
/// first nonzero entry of each column. Returns nullopt if Ops reports overflow.
template <class Ops, class T = typename Ops::value_type>
std::optional<Elimination<T>> fraction_free_eliminate(T* a, std::size_t n) {
  Elimination<T> res;
  T prev{1};
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      for (std::size_t j = c; j < n; ++j) std::swap(a[p * n + j], a[r * n + j]);
      res.odd_swaps = !res.odd_swaps;
    }
    const T pivot = a[r * n + c];
    for (std::size_t i = r + 1; i < n; ++i) {
      const T lead = a[i * n + c];
      for (std::size_t j = c + 1; j < n; ++j) {
        T out;
        if (!Ops::step(pivot, a[i * n + j], lead, a[r * n + j], prev, out)) return std::nullopt;
        a[i * n + j] = std::move(out);
      }
      a[i * n + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

inline Elimination<BigInt> eliminate_exact(std::span<const std::int64_t> entries, std::size_t n) {
  if (n <= 16) {
    std::array<std::int64_t, 256> buf{};
    std::copy(entries.begin(), entries.end(), buf.begin());
    if (auto e = fraction_free_eliminate<CheckedInt64>(buf.data(), n)) {
      return {e->rank, e->odd_swaps, BigInt(e->last_pivot)};
    }
  } else {
    std::vector<std::int64_t> buf(entries.begin(), entries.end());
    if (auto e = fraction_free_eliminate<CheckedInt64>(buf.data(), n)) {
      return {e->rank, e->odd_swaps, BigInt(e->last_pivot)};
    }
  }
  std::vector<BigInt> big(entries.begin(), entries.end());
  return *fraction_free_eliminate<Unbounded>(big.data(), n);
}

}  // namespace detail

inline RankReport rank(const IntMatrix& m) {
  const auto e = detail::eliminate_exact(m.entries(), m.order());
  return {e.rank, m.order() - e.rank, m.order()};
}

inline BigInt determinant(const IntMatrix& m) {
  if (m.order() == 0) return 1;
  const auto e = detail::eliminate_exact(m.entries(), m.order());
  if (e.rank < m.order()) return 0;
  return e.odd_swaps ? BigInt(-e.last_pivot) : e.last_pivot;
}

/// Rank of A(G, sigma). Small orders avoid heap allocation.
inline std::size_t graph_rank(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n <= 16) {
    std::array<std::int64_t, 256> buf{};
    for (const auto& e : g.edges()) {
      buf[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = to_int(e.sign);
      buf[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = to_int(e.sign);
    }
    if (auto e = detail::fraction_free_eliminate<detail::CheckedInt64>(buf.data(), n)) return e->rank;
  }
  return rank(build_adjacency(g)).rank;
}

inline RankReport rank(const SignedGraph& g) {
  const auto r = graph_rank(g);
  const auto n = static_cast<std::size_t>(g.order());
  return {r, n - r, n};
}

// ---------------------------------------------------------------------------
// Independent oracle: Gaussian elimination over several prime fields.
// rank mod p <= rank over Q, with equality unless p divides a specific nonzero
// minor, so the maximum over a few random 30-bit primes is exact in practice.

namespace detail {

inline bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p) {
  const std::size_t n = m.order();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    std::int64_t v = m.entries()[i] % static_cast<std::int64_t>(p);
    a[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[r * n + j]);
    const std::uint64_t inv = pow_mod(a[r * n + c], p - 2, p);
    for (std::size_t j = 0; j < n; ++j) a[r * n + j] = a[r * n + j] * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i * n + c] == 0) continue;
      const std::uint64_t f = a[i * n + c];
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (a[i * n + j] + (p - f) * a[r * n + j]) % p;
    }
    ++r;
  }
  return r;
}

inline const std::vector<std::uint64_t>& oracle_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::mt19937_64 rng(0x5eed0f0a11ULL);
    std::uniform_int_distribution<std::uint64_t> dist(1ULL << 29, (1ULL << 30) - 1);
    std::vector<std::uint64_t> out;
    while (out.size() < 4) {
      std::uint64_t c = dist(rng) | 1ULL;
      if (is_prime_u64(c)) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

}  // namespace detail

/// Rank by modular elimination, maximum over four random 30-bit primes.
inline std::size_t rank_oracle(const IntMatrix& m) {
  std::size_t best = 0;
  for (auto p : detail::oracle_primes()) best = std::max(best, detail::rank_mod_prime(m, p));
  return best;
}

}  // namespace sgrank
