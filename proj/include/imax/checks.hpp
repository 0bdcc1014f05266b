#pragma once

// Standalone property checks: the supermultiplicativity estimates for f and
// the vertex-to-membership map of maximal independent sets.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "imax/bigint.hpp"
#include "imax/bounds.hpp"
#include "imax/graph.hpp"
#include "imax/mis.hpp"

namespace imax {

struct FInequalityReport {
  std::size_t max = 0;
  // Pairs (n, m), 2 <= n, m <= max, with f(n) f(m) < f(n+m).
  std::vector<std::pair<std::size_t, std::size_t>> product_failures;
  // Pairs (n, m), 5 <= n, m <= max, with f(n-1) f(m-1) < f(n+m-1).
  std::vector<std::pair<std::size_t, std::size_t>> shifted_failures;

  // The only admissible failure is (3, 3) in the first inequality.
  bool holds() const {
    return shifted_failures.empty() && product_failures.size() == 1 &&
           product_failures.front() == std::pair<std::size_t, std::size_t>{3, 3};
  }
};

inline FInequalityReport f_inequalities(std::size_t max) {
  FInequalityReport rep;
  rep.max = max;
  std::vector<BigInt> f(2 * max + 1);
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f_min_tree(i);
  for (std::size_t n = 2; n <= max; ++n)
    for (std::size_t m = 2; m <= max; ++m) {
      if (f[n] * f[m] < f[n + m]) rep.product_failures.emplace_back(n, m);
      if (n >= 5 && m >= 5 && f[n - 1] * f[m - 1] < f[n + m - 1]) rep.shifted_failures.emplace_back(n, m);
    }
  return rep;
}

// Maps every vertex to the set of indices of the maximal independent sets
// containing it. On a twin-free graph the map is injective; no vertex ever
// gets the empty set.
struct MembershipMapReport {
  bool injective = false;
  bool nonempty = false;
};

inline MembershipMapReport membership_map_check(const Graph& g) {
  MisReport all = count_mis(g, {.witness_limit = static_cast<std::size_t>(-1)});
  const std::size_t sets = all.witnesses.size();
  std::vector<VertexSet> rows(g.order(), VertexSet(sets));
  for (std::size_t i = 0; i < sets; ++i) all.witnesses[i].for_each([&](std::size_t v) { rows[v].set(i); });
  MembershipMapReport rep;
  rep.nonempty = std::all_of(rows.begin(), rows.end(), [](const VertexSet& r) { return r.any(); });
  std::sort(rows.begin(), rows.end());
  rep.injective = std::adjacent_find(rows.begin(), rows.end()) == rows.end();
  return rep;
}

}  // namespace imax
