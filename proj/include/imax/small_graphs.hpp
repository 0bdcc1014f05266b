#pragma once

// All graphs of order n <= 8 up to isomorphism. Built by adding one vertex
// at a time with every possible neighbourhood and deduplicating by
// canonical form. A connected graph always has a vertex whose removal
// leaves it connected, so connected graphs only need connected parents.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "imax/canonical.hpp"
#include "imax/errors.hpp"
#include "imax/graph.hpp"
#include "imax/graph6.hpp"

namespace imax {

inline constexpr std::size_t kSmallGraphCap = 8;

namespace detail {

// Canonical graph6 strings of every graph (or connected graph) of order n.
inline std::vector<std::string> small_graph_keys(std::size_t n, bool connected_only) {
  if (n == 0) return connected_only ? std::vector<std::string>{} : std::vector<std::string>{to_graph6(Graph(0))};
  std::vector<std::string> level{to_graph6(Graph(1))};
  for (std::size_t order = 2; order <= n; ++order) {
    std::set<std::string> seen;
    const std::uint32_t first = connected_only ? 1 : 0;
    for (const std::string& key : level) {
      Graph parent = parse_graph6(key);
      for (std::uint32_t s = first; s < (std::uint32_t{1} << (order - 1)); ++s) {
        Graph child(order);
        for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
        for (std::size_t u = 0; u + 1 < order; ++u)
          if ((s >> u) & 1U) child.add_edge(u, order - 1);
        seen.insert(canonical_form(child));
      }
    }
    level.assign(seen.begin(), seen.end());
  }
  return level;
}

}  // namespace detail

// One representative per isomorphism class, labelled canonically and
// ordered by canonical graph6 string.
inline std::vector<Graph> small_graphs(std::size_t n, bool connected_only, std::size_t cap = kSmallGraphCap) {
  if (n > cap)
    throw CapError("small_graphs is built in only for n <= 8; ingest a graph6 stream for n = " +
                   std::to_string(n));
  std::vector<Graph> out;
  for (const std::string& key : detail::small_graph_keys(n, connected_only)) out.push_back(parse_graph6(key));
  return out;
}

}  // namespace imax
