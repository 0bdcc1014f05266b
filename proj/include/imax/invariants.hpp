#pragma once

// Exact chromatic number, clique number, vertex cover number and induced
// matching number by exhaustive search. Exponential; capped at 32 vertices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "imax/errors.hpp"
#include "imax/graph.hpp"

namespace imax {

inline constexpr std::size_t kBruteForceCap = 32;

struct GraphInvariants {
  std::size_t chromatic = 0;
  std::size_t clique = 0;
  std::size_t vertex_cover = 0;
  std::size_t induced_matching = 0;
};

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).word(0);
  return adj;
}

inline int lowest(Mask m) { return std::countr_zero(m); }

// Largest clique inside `cand`, given `size` vertices already chosen.
inline void max_clique(const std::vector<Mask>& adj, Mask cand, std::size_t size, std::size_t& best) {
  if (!cand) {
    best = std::max(best, size);
    return;
  }
  while (cand) {
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    int v = lowest(cand);
    cand &= cand - 1;
    max_clique(adj, cand & adj[v], size + 1, best);
  }
}

inline bool colourable(const std::vector<Mask>& adj, const std::vector<int>& order, std::size_t pos,
                       std::vector<int>& colour, int k, int used) {
  if (pos == order.size()) return true;
  int v = order[pos];
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    Mask nb = adj[v];
    while (nb && ok) {
      int w = lowest(nb);
      nb &= nb - 1;
      if (colour[w] == c) ok = false;
    }
    if (!ok) continue;
    colour[v] = c;
    if (colourable(adj, order, pos + 1, colour, k, std::max(used, c + 1))) return true;
    colour[v] = -1;
  }
  return false;
}

// Maximum induced matching inside `avail`.
inline std::size_t max_induced_matching(const std::vector<Mask>& adj, Mask avail) {
  // Drop vertices with no available neighbour; they can never be matched.
  Mask live = 0;
  for (Mask m = avail; m; m &= m - 1) {
    int v = lowest(m);
    if (adj[v] & avail) live |= Mask{1} << v;
  }
  if (!live) return 0;
  int v = lowest(live);
  Mask closed_v = adj[v] | (Mask{1} << v);
  std::size_t best = max_induced_matching(adj, live & ~(Mask{1} << v));
  for (Mask nb = adj[v] & live; nb; nb &= nb - 1) {
    int w = lowest(nb);
    Mask removed = closed_v | adj[w] | (Mask{1} << w);
    best = std::max(best, 1 + max_induced_matching(adj, live & ~removed));
  }
  return best;
}

}  // namespace detail

inline std::size_t clique_number(const Graph& g) {
  if (g.order() > kBruteForceCap) throw CapError("clique_number is capped at 32 vertices");
  auto adj = detail::adjacency_masks(g);
  std::size_t best = 0;
  detail::max_clique(adj, g.all_vertices().word_count() ? g.all_vertices().word(0) : 0, 0, best);
  return best;
}

inline std::size_t independence_number(const Graph& g) {
  if (g.order() > kBruteForceCap) throw CapError("independence_number is capped at 32 vertices");
  return clique_number(complement(g));
}

inline std::size_t chromatic_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kBruteForceCap) throw CapError("chromatic_number is capped at 32 vertices");
  if (n == 0) return 0;
  auto adj = detail::adjacency_masks(g);
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  for (std::size_t k = std::max<std::size_t>(1, clique_number(g));; ++k) {
    std::vector<int> colour(n, -1);
    if (detail::colourable(adj, order, 0, colour, static_cast<int>(k), 0)) return k;
  }
}

inline std::size_t induced_matching_number(const Graph& g) {
  if (g.order() > kBruteForceCap) throw CapError("induced_matching_number is capped at 32 vertices");
  if (g.order() == 0) return 0;
  return detail::max_induced_matching(detail::adjacency_masks(g), g.all_vertices().word(0));
}

inline GraphInvariants invariants(const Graph& g) {
  if (g.order() > kBruteForceCap)
    throw CapError("exact invariants are capped at 32 vertices (got " + std::to_string(g.order()) + ")");
  GraphInvariants inv;
  inv.clique = clique_number(g);
  inv.chromatic = chromatic_number(g);
  inv.vertex_cover = g.order() - independence_number(g);
  inv.induced_matching = induced_matching_number(g);
  return inv;
}

}  // namespace imax
