#pragma once

// Exhaustive censuses: minimum imax and extremal witnesses over twin-free
// trees, connected twin-free graphs (by class), and twin-free forests, plus
// the exhaustive bound checks built on them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imax/bigint.hpp"
#include "imax/bounds.hpp"
#include "imax/canonical.hpp"
#include "imax/constructions.hpp"
#include "imax/errors.hpp"
#include "imax/graph.hpp"
#include "imax/graph6.hpp"
#include "imax/mis.hpp"
#include "imax/parallel.hpp"
#include "imax/small_graphs.hpp"
#include "imax/trees.hpp"

namespace imax {

enum class Predicate { tree, forest, connected_bipartite, connected_trianglefree, connected_general };

inline std::string_view predicate_tag(Predicate p) {
  switch (p) {
    case Predicate::tree: return "tree";
    case Predicate::forest: return "forest";
    case Predicate::connected_bipartite: return "connected-bipartite";
    case Predicate::connected_trianglefree: return "connected-trianglefree";
    default: return "connected-general";
  }
}

inline constexpr std::size_t kWitnessRetentionCap = 14;
inline constexpr std::size_t kForestCap = 14;

struct CensusOptions {
  unsigned threads = 0;  // 0: resolve_threads()
  // Keep canonical witnesses; unset means keep them up to n = 14.
  std::optional<bool> keep_witnesses;
  std::size_t batch = 8192;
};

struct CensusRow {
  std::size_t n = 0;
  BigInt min_imax = 0;  // 0 when nothing qualified
  std::uint64_t extremal_count = 0;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  bool witnesses_retained = false;
  Predicate predicate = Predicate::tree;
};

namespace detail {

// Running (min, count, witnesses); merging is order-independent.
class Extremum {
 public:
  explicit Extremum(bool keep = false) : keep_(keep) {}

  void offer(const BigInt& v, const Graph& g) {
    if (seen_ && v > min_) return;
    if (!seen_ || v < min_) {
      seen_ = true;
      min_ = v;
      count_ = 0;
      witnesses_.clear();
    }
    ++count_;
    if (keep_) witnesses_.push_back(canonical_form(g));
  }

  void merge(const Extremum& o) {
    if (!o.seen_ || (seen_ && o.min_ > min_)) return;
    if (!seen_ || o.min_ < min_) {
      seen_ = true;
      min_ = o.min_;
      count_ = 0;
      witnesses_.clear();
    }
    count_ += o.count_;
    witnesses_.insert(witnesses_.end(), o.witnesses_.begin(), o.witnesses_.end());
  }

  CensusRow row(std::size_t n, Predicate p) const {
    CensusRow r;
    r.n = n;
    r.predicate = p;
    r.witnesses_retained = keep_;
    if (seen_) {
      r.min_imax = min_;
      r.extremal_count = count_;
      r.witnesses = witnesses_;
      std::sort(r.witnesses.begin(), r.witnesses.end());
    }
    return r;
  }

 private:
  bool keep_;
  bool seen_ = false;
  BigInt min_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::string> witnesses_;
};

inline Extremum merged(const std::vector<Extremum>& parts, bool keep) {
  Extremum out(keep);
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace detail

// Minimum imax over twin-free trees of order n and the trees attaining it.
inline CensusRow census_trees(std::size_t n, const CensusOptions& opts = {}, std::size_t cap = kFreeTreeCap) {
  if (n < 4) throw PreconditionError("census_trees needs n >= 4");
  const bool keep = opts.keep_witnesses.value_or(n <= kWitnessRetentionCap);
  const unsigned workers = resolve_threads(opts.threads);
  std::vector<detail::Extremum> acc(workers, detail::Extremum(keep));
  FreeTrees stream(n, cap);
  std::vector<LevelSequence> batch;
  auto flush = [&] {
    parallel_for(batch.size(), workers, [&](std::size_t i, unsigned w) {
      Graph t = levels_to_graph(batch[i]);
      if (is_twin_free(t)) acc[w].offer(count_mis(t).count, t);
    });
    batch.clear();
  };
  while (auto l = stream.next_levels()) {
    batch.push_back(std::move(*l));
    if (batch.size() >= opts.batch) flush();
  }
  flush();
  return detail::merged(acc, keep).row(n, Predicate::tree);
}

struct GraphCensus {
  std::size_t n = 0;
  std::uint64_t graphs_read = 0;
  std::uint64_t qualifying = 0;  // connected and twin-free
  CensusRow bipartite;
  CensusRow triangle_free;
  // Present only when the source lists every connected graph of order n.
  std::optional<CensusRow> general;

  // The general minimum must equal the smallest k with n <= 2^{k-1}+k-2.
  std::optional<bool> general_consistent() const {
    if (!general || n < 2) return std::nullopt;
    return general->min_imax == BigInt(min_imax_connected_graph(n));
  }
};

// `next` yields graphs (std::optional<Graph>, nullopt at the end), one per
// isomorphism class of order n. Set general_complete when the source is not
// restricted to a subclass, otherwise the general row is omitted.
template <class Next>
GraphCensus census_graphs(Next&& next, std::size_t n, const CensusOptions& opts = {},
                          bool general_complete = true) {
  const bool keep = opts.keep_witnesses.value_or(n <= kWitnessRetentionCap);
  const unsigned workers = resolve_threads(opts.threads);
  std::vector<detail::Extremum> bip(workers, detail::Extremum(keep)), tf = bip, gen = bip;
  std::vector<std::uint64_t> qualifying(workers, 0);
  GraphCensus out;
  out.n = n;
  std::vector<Graph> batch;
  auto flush = [&] {
    parallel_for(batch.size(), workers, [&](std::size_t i, unsigned w) {
      const Graph& g = batch[i];
      if (!is_connected(g) || !is_twin_free(g)) return;
      ++qualifying[w];
      BigInt c = count_mis(g).count;
      if (general_complete) gen[w].offer(c, g);
      if (is_triangle_free(g)) {
        tf[w].offer(c, g);
        if (two_coloring(g)) bip[w].offer(c, g);
      }
    });
    batch.clear();
  };
  while (std::optional<Graph> g = next()) {
    if (g->order() != n)
      throw PreconditionError("graph of order " + std::to_string(g->order()) + " in a census of order " +
                              std::to_string(n));
    ++out.graphs_read;
    batch.push_back(std::move(*g));
    if (batch.size() >= opts.batch) flush();
  }
  flush();
  for (auto q : qualifying) out.qualifying += q;
  out.bipartite = detail::merged(bip, keep).row(n, Predicate::connected_bipartite);
  out.triangle_free = detail::merged(tf, keep).row(n, Predicate::connected_trianglefree);
  if (general_complete) out.general = detail::merged(gen, keep).row(n, Predicate::connected_general);
  return out;
}

// Built-in source: every connected graph of order n <= 8.
inline GraphCensus census_graphs_builtin(std::size_t n, const CensusOptions& opts = {},
                                         std::size_t cap = kSmallGraphCap) {
  std::vector<Graph> graphs = small_graphs(n, true, cap);
  std::size_t i = 0;
  return census_graphs([&]() -> std::optional<Graph> {
    if (i == graphs.size()) return std::nullopt;
    return std::move(graphs[i++]);
  }, n, opts, true);
}

// graph6 source; order mismatches and parse errors report the line.
inline GraphCensus census_graphs_stream(std::istream& in, std::size_t n, const CensusOptions& opts = {},
                                        bool general_complete = false,
                                        std::size_t max_vertices = kDefaultVertexCap) {
  Graph6Reader reader(in, max_vertices);
  return census_graphs([&]() -> std::optional<Graph> {
    auto g = reader.next();
    if (g && g->order() != n)
      throw ParseError("graph of order " + std::to_string(g->order()) + ", expected " + std::to_string(n), 0,
                       reader.line());
    return g;
  }, n, opts, general_complete);
}

// Triangle-free observations: does the minimum equal ceil(n/2)+1, and how
// many extremal triangle-free graphs are not bipartite. Report only.
struct TriangleFreeProbe {
  std::size_t n = 0;
  bool min_matches = false;
  std::uint64_t extremal_non_bipartite = 0;
};

inline TriangleFreeProbe triangle_free_probe(const GraphCensus& c) {
  TriangleFreeProbe p;
  p.n = c.n;
  if (c.triangle_free.extremal_count == 0) return p;
  p.min_matches = c.triangle_free.min_imax == bipartite_min(c.n);
  const bool same_min =
      c.bipartite.extremal_count > 0 && c.bipartite.min_imax == c.triangle_free.min_imax;
  p.extremal_non_bipartite = c.triangle_free.extremal_count - (same_min ? c.bipartite.extremal_count : 0);
  return p;
}

// Connected twin-free graphs with k = imax >= 2 satisfy n <= 2^{k-1}+k-2,
// with equality only for clique_subset_graph(k).
struct Thm1Report {
  std::size_t n = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t equality_cases = 0;
  std::optional<std::string> counterexample;  // graph6
  std::string reason;
  bool pass() const { return !counterexample; }
};

template <class Next>
Thm1Report verify_thm1_source(Next&& next, std::size_t n) {
  Thm1Report rep;
  rep.n = n;
  std::optional<std::string> extremal_key;
  while (std::optional<Graph> g = next()) {
    if (!is_connected(*g) || !is_twin_free(*g)) continue;
    BigInt k = count_mis(*g).count;
    if (k < 2) continue;
    ++rep.graphs_checked;
    if (k > 60) continue;  // bound is astronomically larger than any census order
    const auto ku = k.convert_to<std::uint64_t>();
    const std::uint64_t bound = (std::uint64_t{1} << (ku - 1)) + ku - 2;
    if (n > bound) {
      rep.counterexample = to_graph6(*g);
      rep.reason = "imax " + std::to_string(ku) + " but n exceeds 2^{k-1}+k-2 = " + std::to_string(bound);
      return rep;
    }
    if (n == bound) {
      ++rep.equality_cases;
      if (!extremal_key) extremal_key = canonical_form(clique_subset_graph(ku));
      if (canonical_form(*g) != *extremal_key) {
        rep.counterexample = to_graph6(*g);
        rep.reason = "equality case not isomorphic to clique_subset_graph(" + std::to_string(ku) + ")";
        return rep;
      }
    }
  }
  return rep;
}

inline Thm1Report verify_thm1(std::size_t n, std::size_t cap = kSmallGraphCap) {
  std::vector<Graph> graphs = small_graphs(n, true, cap);
  std::size_t i = 0;
  return verify_thm1_source([&]() -> std::optional<Graph> {
    if (i == graphs.size()) return std::nullopt;
    return std::move(graphs[i++]);
  }, n);
}

// Twin-free forests of order n >= 2 have imax >= f(n-1).
struct ForestReport {
  std::size_t n = 0;
  std::uint64_t forests_checked = 0;
  BigInt min_imax = 0;
  std::uint64_t extremal_count = 0;  // forests attaining min_imax
  BigInt bound = 0;
  std::optional<std::string> counterexample;  // graph6
  bool pass() const { return !counterexample; }
};

inline ForestReport verify_forest_bound(std::size_t n, std::size_t cap = kForestCap) {
  if (n < 2) throw PreconditionError("verify_forest_bound needs n >= 2");
  if (n > cap) throw CapError("verify_forest_bound is capped at n = " + std::to_string(cap));
  struct Component {
    Graph g;
    BigInt imax;
  };
  // K1 first, then twin-free trees by (order, canonical form).
  std::vector<Component> parts{{Graph(1), 1}};
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<std::pair<std::string, Graph>> level;
    FreeTrees(m, std::max(cap, kFreeTreeCap)).for_each([&](const Graph& t) {
      if (is_twin_free(t)) level.emplace_back(canonical_form(t), t);
    });
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, t] : level) parts.push_back({t, count_mis(t).count});
  }

  ForestReport rep;
  rep.n = n;
  rep.bound = f_min_tree(n - 1);
  bool any = false;
  std::vector<std::size_t> chosen;
  // Components are chosen in non-decreasing index order; K1 at most once.
  auto rec = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
    if (rep.counterexample) return;
    if (remaining == 0) {
      Graph f(0);
      BigInt product = 1;
      for (std::size_t idx : chosen) {
        f = f.disjoint_union(parts[idx].g);
        product *= parts[idx].imax;
      }
      if (!is_twin_free(f)) return;
      ++rep.forests_checked;
      BigInt direct = count_mis(f).count;
      if (direct != product) throw Error("forest count mismatch between components and whole");
      if (!any || direct < rep.min_imax) {
        rep.min_imax = direct;
        rep.extremal_count = 0;
      }
      if (direct == rep.min_imax) ++rep.extremal_count;
      any = true;
      if (direct < rep.bound) rep.counterexample = to_graph6(f);
      return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
      const std::size_t sz = parts[i].g.order();
      if (sz > remaining) continue;
      chosen.push_back(i);
      self(self, i == 0 ? 1 : i, remaining - sz);
      chosen.pop_back();
    }
  };
  rec(rec, 0, n);
  return rep;
}

}  // namespace imax
