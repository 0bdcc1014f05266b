#pragma once

// Closed-form extremal values for the number of maximal independent sets.

#include <cstddef>
#include <cstdint>

#include "imax/bigint.hpp"
#include "imax/errors.hpp"

namespace imax {

// Perrin numbers: P(0)=3, P(1)=0, P(2)=2, P(n)=P(n-2)+P(n-3).
inline BigInt perrin(std::uint64_t n) {
  BigInt a = 3, b = 0, c = 2;  // P(i), P(i+1), P(i+2)
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt d = a + b;  // P(i+3)
    a = std::move(b);
    b = std::move(c);
    c = std::move(d);
  }
  return a;
}

// Minimum number of maximal independent sets of a twin-free tree of order
// n (f(1)=1, f(2)=f(3)=2, then one case per residue mod 5).
inline BigInt f_min_tree(std::uint64_t n) {
  if (n == 0) throw PreconditionError("f_min_tree requires n >= 1");
  if (n == 1) return 1;
  if (n <= 3) return 2;
  switch (n % 5) {
    case 0: return 4 * pow_big(3, n / 5 - 1);
    case 1: return 5 * pow_big(3, (n - 6) / 5);
    case 2: return 2 * pow_big(3, (n - 2) / 5);
    case 3: return 8 * pow_big(3, (n - 8) / 5);
    default: return pow_big(3, (n + 1) / 5);
  }
}

// Maximum over trees of order n (attained by spiders and batons).
inline BigInt wilf_max_tree(std::uint64_t n) {
  if (n == 0) throw PreconditionError("wilf_max_tree requires n >= 1");
  if (n == 1) return 1;
  if (n % 2 == 0) return pow_big(2, n / 2 - 1) + 1;
  return pow_big(2, (n - 1) / 2);
}

// Maximum over all graphs of order n >= 2.
inline BigInt moon_moser_max(std::uint64_t n) {
  if (n < 2) throw PreconditionError("moon_moser_max requires n >= 2");
  switch (n % 3) {
    case 0: return pow_big(3, n / 3);
    case 1: return 4 * pow_big(3, (n - 4) / 3);
    default: return 2 * pow_big(3, (n - 2) / 3);
  }
}

// Maximum over connected graphs of order n. The three-case formula holds
// from n = 6 on; below that the maximum is n, attained by K_n.
inline BigInt connected_max(std::uint64_t n) {
  if (n == 0) throw PreconditionError("connected_max requires n >= 1");
  if (n <= 5) return n;
  switch (n % 3) {
    case 0: return 2 * pow_big(3, n / 3 - 1) + pow_big(2, n / 3 - 1);
    case 1: return pow_big(3, (n - 1) / 3) + pow_big(2, (n - 4) / 3);
    default: return 4 * pow_big(3, (n - 5) / 3) + 3 * pow_big(2, (n - 8) / 3);
  }
}

// Minimum over connected twin-free bipartite graphs of order n >= 2.
inline BigInt bipartite_min(std::uint64_t n) {
  if (n < 2) throw PreconditionError("bipartite_min requires n >= 2");
  return BigInt((n + 1) / 2 + 1);
}

// Smallest k >= 2 with n <= 2^{k-1} + k - 2: the minimum number of maximal
// independent sets over connected twin-free graphs of order n >= 2.
inline std::uint64_t min_imax_connected_graph(std::uint64_t n) {
  if (n < 2) throw PreconditionError("min_imax_connected_graph requires n >= 2");
  std::uint64_t k = 2;
  while (pow_big(2, k - 1) + k - 2 < n) ++k;
  return k;
}

struct BoundTable {
  std::uint64_t n = 0;
  BigInt f;
  BigInt wilf_max;
  BigInt moon_moser;
  BigInt connected_max;
  BigInt bipartite_min;
};

inline BoundTable bound_table(std::uint64_t n) {
  if (n < 2) throw PreconditionError("bound_table requires n >= 2");
  return {n, f_min_tree(n), wilf_max_tree(n), moon_moser_max(n), connected_max(n), bipartite_min(n)};
}

}  // namespace imax
