#pragma once

// Deterministic generators for the extremal families. Vertex numbering is
// fixed (hub or clique first, then attachments in order) so the graph6
// output is byte-stable.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "imax/bounds.hpp"
#include "imax/errors.hpp"
#include "imax/graph.hpp"
#include "imax/matrix.hpp"

namespace imax {

// 512 rounded up to the word count clique_subset_graph(10) needs (n = 521).
inline constexpr std::size_t kConstructionCap = 576;

namespace detail {

inline void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapError(std::string(what) + ": order " + std::to_string(n) + " exceeds vertex cap " +
                   std::to_string(cap));
}

inline std::size_t clique_subset_order(std::size_t k, bool with_empty) {
  if (k < 2) throw PreconditionError("clique subset construction needs k >= 2");
  if (k > 40) throw CapError("clique subset construction: k too large");
  return (std::size_t{1} << (k - 1)) + k - (with_empty ? 1 : 2);
}

inline Graph clique_with_subsets(std::size_t k, bool with_empty, std::size_t cap) {
  const std::size_t n = clique_subset_order(k, with_empty);
  check_cap(n, cap, "clique_subset_graph");
  const std::size_t c = k - 1;
  Graph g(n);
  for (std::size_t u = 0; u < c; ++u)
    for (std::size_t v = u + 1; v < c; ++v) g.add_edge(u, v);
  std::size_t next = c;
  for (std::uint64_t s = with_empty ? 0 : 1; s < (std::uint64_t{1} << c); ++s, ++next)
    for (std::size_t u = 0; u < c; ++u)
      if ((s >> u) & 1U) g.add_edge(u, next);
  return g;
}

}  // namespace detail

// Clique K_{k-1} on vertices 0..k-2 plus one vertex per non-empty subset S
// of the clique (in increasing bitmask order) adjacent exactly to S.
// Connected, twin-free, order 2^{k-1}+k-2, exactly k maximal independent
// sets.
inline Graph clique_subset_graph(std::size_t k, std::size_t max_vertices = kConstructionCap) {
  return detail::clique_with_subsets(k, false, max_vertices);
}

// As clique_subset_graph but including S = ∅ (an isolated vertex);
// order 2^{k-1}+k-1.
inline Graph clique_subset_graph_with_empty(std::size_t k, std::size_t max_vertices = kConstructionCap) {
  return detail::clique_with_subsets(k, true, max_vertices);
}

// K_{⌊n/2⌋,⌈n/2⌉} minus a matching of size ⌈n/2⌉-1. Classes: 0..⌊n/2⌋-1
// and ⌊n/2⌋..n-1; the removed edges pair vertex i with ⌊n/2⌋+i.
inline Graph bipartite_minus_matching(std::size_t n, std::size_t max_vertices = kConstructionCap) {
  if (n < 2) throw PreconditionError("bipartite_minus_matching needs n >= 2");
  detail::check_cap(n, max_vertices, "bipartite_minus_matching");
  const std::size_t a = n / 2, b = n - a;
  Graph g = complete_bipartite(a, b);
  for (std::size_t i = 0; i + 1 < b; ++i) g.remove_edge(i, a + i);
  return g;
}

// Odd n: hub 0 with (n-1)/2 legs of length two. Even n: hub 0, pendant
// vertex 1, then (n-2)/2 legs. At least two legs are required.
inline Graph spider(std::size_t n, std::size_t max_vertices = kConstructionCap) {
  detail::check_cap(n, max_vertices, "spider");
  const std::size_t first_leg = (n % 2 == 0) ? 2 : 1;
  if (n < first_leg + 4)
    throw PreconditionError("spider of order " + std::to_string(n) + " is infeasible (needs two legs)");
  Graph g(n);
  if (n % 2 == 0) g.add_edge(0, 1);
  for (std::size_t v = first_leg; v < n; v += 2) {
    g.add_edge(0, v);
    g.add_edge(v, v + 1);
  }
  return g;
}

// Double star with both centres' pendant edges subdivided once and the
// central edge subdivided zero (length 1) or two (length 3) times. The
// centres are the ends of the central path 0..length; legs are split
// ⌈legs/2⌉ on vertex 0 and ⌊legs/2⌋ on the far end.
inline Graph baton(std::size_t n, std::size_t length, std::size_t max_vertices = kConstructionCap) {
  if (length != 1 && length != 3) throw PreconditionError("baton length must be 1 or 3");
  detail::check_cap(n, max_vertices, "baton");
  const std::size_t spine = length + 1;
  if (n % 2 != 0 || n < spine + 4)
    throw PreconditionError("baton of order " + std::to_string(n) + " and length " +
                            std::to_string(length) + " is infeasible");
  const std::size_t legs = (n - spine) / 2;
  const std::size_t left = (legs + 1) / 2;
  Graph g(n);
  for (std::size_t i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
  std::size_t v = spine;
  for (std::size_t leg = 0; leg < legs; ++leg, v += 2) {
    g.add_edge(leg < left ? 0 : spine - 1, v);
    g.add_edge(v, v + 1);
  }
  return g;
}

// n ≡ r (mod 3): r copies of K4 and ⌊n/3⌋-r copies of K3, the first vertex
// of each clique joined to the first vertex of clique 0 (a K4 when r > 0).
inline Graph furedi_griggs_graph(std::size_t n, std::size_t max_vertices = kConstructionCap) {
  if (n < 6) throw PreconditionError("furedi_griggs_graph needs n >= 6");
  detail::check_cap(n, max_vertices, "furedi_griggs_graph");
  const std::size_t k4 = n % 3;
  const std::size_t cliques = n / 3;
  Graph g(n);
  std::size_t start = 0;
  for (std::size_t c = 0; c < cliques; ++c) {
    const std::size_t size = c < k4 ? 4 : 3;
    for (std::size_t u = start; u < start + size; ++u)
      for (std::size_t v = u + 1; v < start + size; ++v) g.add_edge(u, v);
    if (c > 0) g.add_edge(0, start);
    start += size;
  }
  return g;
}

// Twin-free tree of order n >= 4 with exactly f_min_tree(n) maximal
// independent sets. Hub 0 carries a pendant leaf (vertex 1), a spine path,
// and ⌊(n-4)/5⌋ (n ≡ 0,1,4 mod 5) or ⌊(n-7)/5⌋ (n ≡ 2,3) legs. Each leg is
// a path of four from the hub with an extra leaf on its second vertex. For
// n ≡ 2,3 the hub also carries a path of two.
inline Graph extremal_tree_mod5(std::size_t n, std::size_t max_vertices = kConstructionCap) {
  if (n < 4) throw PreconditionError("extremal_tree_mod5 needs n >= 4");
  detail::check_cap(n, max_vertices, "extremal_tree_mod5");
  Graph g(n);
  g.add_edge(0, 1);
  std::size_t next = 2;
  std::size_t spine = 0;
  std::size_t legs = 0;
  switch (n % 5) {
    case 4: spine = 2; legs = (n - 4) / 5; break;
    case 0: spine = 3; legs = (n - 4) / 5; break;
    case 1: spine = 4; legs = (n - 4) / 5; break;
    case 2: spine = 3; legs = (n - 7) / 5; break;
    default: spine = 4; legs = (n - 7) / 5; break;
  }
  if (n % 5 == 2 || n % 5 == 3) {
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    next = 4;
  }
  std::size_t prev = 0;
  for (std::size_t i = 0; i < spine; ++i, ++next) {
    g.add_edge(prev, next);
    prev = next;
  }
  for (std::size_t l = 0; l < legs; ++l, next += 5) {
    g.add_edge(0, next);
    g.add_edge(next, next + 1);
    g.add_edge(next + 1, next + 2);
    g.add_edge(next + 2, next + 3);
    g.add_edge(next + 1, next + 4);
  }
  return g;
}

// The three twin-free trees of order 8 with 8 maximal independent sets:
// a hub with a pendant leaf and two legs of length three; a hub with a
// pendant leaf, a leg of length four and a leg of length two; two P4s
// joined between their second vertices.
inline std::vector<Graph> extremal_trees_n8() {
  using E = std::pair<std::size_t, std::size_t>;
  const std::vector<std::vector<E>> edge_lists = {
      {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}},
      {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 6}, {6, 7}},
      {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {1, 5}},
  };
  std::vector<Graph> out;
  for (const auto& edges : edge_lists) out.push_back(Graph::from_edges(8, edges));
  return out;
}

// Lower-triangular k x k matrices (ones on and below the diagonal) with any
// subset of the entries (3i, 3i+2), 0 <= i < ⌊k/3⌋ (0-based), set to one:
// 2^{⌊k/3⌋} matrices in total, ordered by the subset's bitmask.
inline std::vector<BinaryMatrix> lower_triangular_matrices(std::size_t k) {
  if (k < 3) throw PreconditionError("lower_triangular_matrices needs k >= 3");
  if (k > kGroundCap) throw CapError("matrix dimension is capped at 16");
  const std::size_t extras = k / 3;
  std::vector<BinaryMatrix> out;
  for (std::uint32_t choice = 0; choice < (std::uint32_t{1} << extras); ++choice) {
    std::vector<SetMask> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = full_mask(i + 1);
    for (std::size_t e = 0; e < extras; ++e)
      if ((choice >> e) & 1U) rows[3 * e] |= SetMask{1} << (3 * e + 2);
    out.push_back(BinaryMatrix::from_rows(k, std::move(rows)));
  }
  return out;
}

}  // namespace imax
