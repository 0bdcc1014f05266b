#pragma once

// Maximal independent set enumeration. Runs Bron-Kerbosch with Tomita
// pivoting on the complement graph, expressed directly on independent sets:
// the candidate set P shrinks by closed neighbourhoods instead of growing by
// complement neighbourhoods.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

#include "imax/bigint.hpp"
#include "imax/graph.hpp"

namespace imax {

struct MisOptions {
  // Maximum number of witness sets to retain (0 = count only).
  std::size_t witness_limit = 0;
  // Abort after this many search nodes; 0 = unlimited.
  std::uint64_t node_budget = 0;
};

struct MisReport {
  // Exact number of maximal independent sets. Meaningful only when
  // budget_exceeded is false.
  BigInt count = 0;
  // Up to witness_limit sets, sorted ascending by bitmask value.
  std::vector<VertexSet> witnesses;
  bool witness_limit_hit = false;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
};

namespace detail {

struct BudgetExceeded {};

template <class Set>
class MisSearch {
 public:
  // `nodes` is shared across searches so one budget spans a whole call.
  MisSearch(std::vector<Set> closed, std::uint64_t budget, std::uint64_t& nodes)
      : closed_(std::move(closed)), budget_(budget), nodes_(nodes) {}

  // Calls on_leaf(R) for every maximal independent set R ⊇ r drawn from p,
  // not extendable by any vertex of x.
  template <class Leaf>
  void run(Set& r, Set p, Set x, Leaf&& on_leaf) {
    if (++nodes_ > budget_ && budget_) throw BudgetExceeded{};
    if (!p.any()) {
      if (!x.any()) on_leaf(r);
      return;
    }
    // Pivot minimising |P ∩ N[u]| over u ∈ P ∪ X; only P ∩ N[u] branches.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t pivot = 0;
    (p | x).for_each([&](std::size_t u) {
      if (best == 0) return;
      std::size_t c = intersection_count(p, closed_[u]);
      if (c < best) {
        best = c;
        pivot = u;
      }
    });
    if (best == 0) return;
    Set branch = p & closed_[pivot];
    branch.for_each([&](std::size_t v) {
      r.set(v);
      run(r, p - closed_[v], x - closed_[v], on_leaf);
      r.reset(v);
      p.reset(v);
      x.set(v);
    });
  }

 private:
  std::vector<Set> closed_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
};

template <class Set>
Set make_set(const VertexSet& s) {
  if constexpr (std::is_same_v<Set, VertexSet>) return s;
  else return Set::from(s);
}

template <class Set>
VertexSet to_vertex_set(const Set& s, std::size_t n) {
  if constexpr (std::is_same_v<Set, VertexSet>) return s;
  else return s.to_vertex_set(n);
}

// Enumerates the maximal independent sets of the subgraph induced by
// `within`, returning how many there are; the first `limit` go to `out`.
template <class Set>
std::uint64_t enumerate_within(const Graph& g, const VertexSet& within, std::size_t limit,
                               std::vector<VertexSet>* out, std::uint64_t budget,
                               std::uint64_t& nodes) {
  const std::size_t n = g.order();
  std::vector<Set> closed;
  closed.reserve(n);
  for (std::size_t v = 0; v < n; ++v) closed.push_back(make_set<Set>(g.closed_neighbors(v)));
  MisSearch<Set> search(std::move(closed), budget, nodes);
  Set r = make_set<Set>(g.empty_set());
  std::uint64_t found = 0;
  search.run(r, make_set<Set>(within), make_set<Set>(g.empty_set()), [&](const Set& leaf) {
    ++found;
    if (out && out->size() < limit) out->push_back(to_vertex_set(leaf, n));
  });
  return found;
}

template <class F>
decltype(auto) dispatch_width(std::size_t n, F&& f) {
  const std::size_t words = words_for(n);
  if (words <= 1) return f.template operator()<WordSet<1>>();
  if (words <= 2) return f.template operator()<WordSet<2>>();
  if (words <= 4) return f.template operator()<WordSet<4>>();
  if (words <= 8) return f.template operator()<WordSet<8>>();
  if (words <= 16) return f.template operator()<WordSet<16>>();
  return f.template operator()<VertexSet>();
}

}  // namespace detail

// Counts (and optionally lists) the maximal independent sets of g. The count
// is the product of the per-component counts; witnesses come from a search
// over the whole graph. The graph on 0 vertices has one maximal independent
// set (the empty set).
inline MisReport count_mis(const Graph& g, const MisOptions& opts = {}) {
  MisReport rep;
  const std::size_t n = g.order();
  auto run = [&](const VertexSet& within, std::size_t limit, std::vector<VertexSet>* out) {
    return detail::dispatch_width(n, [&]<class Set>() {
      return detail::enumerate_within<Set>(g, within, limit, out, opts.node_budget, rep.nodes);
    });
  };
  try {
    rep.count = 1;
    for (const VertexSet& comp : components(g)) rep.count *= run(comp, 0, nullptr);
    if (opts.witness_limit > 0) {
      if (n == 0) rep.witnesses.push_back(g.empty_set());
      else run(g.all_vertices(), opts.witness_limit, &rep.witnesses);
      std::sort(rep.witnesses.begin(), rep.witnesses.end());
      rep.witness_limit_hit = BigInt(rep.witnesses.size()) < rep.count;
    }
  } catch (const detail::BudgetExceeded&) {
    rep.budget_exceeded = true;
    rep.count = 0;
    rep.witnesses.clear();
  }
  return rep;
}

// Convenience: exact count, no budget.
inline BigInt imax_of(const Graph& g) { return count_mis(g).count; }

// Machine-word count for graphs whose count is known to fit (trees and
// census graphs at desk scale).
inline std::uint64_t imax_u64(const Graph& g) {
  return count_mis(g).count.convert_to<std::uint64_t>();
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

inline bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!s.test(v) && !g.neighbors(v).intersects(s)) return false;
  return true;
}

}  // namespace imax
