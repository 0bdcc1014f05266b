#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imax/errors.hpp"
#include "imax/vertex_set.hpp"

namespace imax {

inline constexpr std::size_t kDefaultVertexCap = 512;

// Undirected simple graph on vertices 0..n-1 stored as open neighbourhood
// bitsets. adj[u] contains v iff adj[v] contains u; no loops.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

  static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const { return n_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  void remove_edge(std::size_t u, std::size_t v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
  }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u].test(v); }

  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  VertexSet closed_neighbors(std::size_t v) const {
    VertexSet s = adj_[v];
    s.set(v);
    return s;
  }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.count();
    return twice / 2;
  }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  // Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(const VertexSet& keep) const {
    std::vector<std::size_t> verts = keep.members();
    std::vector<std::size_t> index(n_, VertexSet::npos);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    Graph h(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      adj_[verts[i]].for_each([&](std::size_t w) {
        if (index[w] != VertexSet::npos) h.adj_[i].set(index[w]);
      });
    return h;
  }

  // Graph with vertex v renamed to perm[v]; perm must be a permutation.
  Graph relabel(std::span<const std::size_t> perm) const {
    Graph h(n_);
    for (std::size_t u = 0; u < n_; ++u)
      adj_[u].for_each([&](std::size_t v) { h.adj_[perm[u]].set(perm[v]); });
    return h;
  }

  // Disjoint union; vertices of `other` follow this graph's vertices.
  Graph disjoint_union(const Graph& other) const {
    Graph h(n_ + other.n_);
    for (auto [u, v] : edges()) h.add_edge(u, v);
    for (auto [u, v] : other.edges()) h.add_edge(n_ + u, n_ + v);
    return h;
  }

  // Checks the structural invariants; used by tests and after parsing.
  bool valid() const {
    if (adj_.size() != n_) return false;
    for (std::size_t u = 0; u < n_; ++u) {
      if (adj_[u].capacity() != n_ || adj_[u].test(u)) return false;
      bool ok = true;
      adj_[u].for_each([&](std::size_t v) { ok = ok && adj_[v].test(u); });
      if (!ok) return false;
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
};

// Vertex sets of the connected components, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen = g.empty_set();
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    VertexSet comp = g.empty_set();
    VertexSet frontier = g.empty_set();
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next = g.empty_set();
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
      frontier = next - comp;
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

struct Predicates {
  bool connected = false;
  bool bipartite = false;
  std::optional<Bipartition> classes;  // set iff bipartite
  bool triangle_free = false;
  bool forest = false;
  bool tree = false;
};

inline bool is_connected(const Graph& g) {
  return g.order() > 0 && components(g).size() == 1;
}

// Two-colouring with the smallest vertex of every component in `first`.
inline std::optional<Bipartition> two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      bool clash = false;
      g.neighbors(v).for_each([&](std::size_t w) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  Bipartition b{g.empty_set(), g.empty_set()};
  for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? b.first : b.second).set(v);
  return b;
}

inline bool is_triangle_free(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    bool hit = false;
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v && g.neighbors(u).intersects(g.neighbors(v))) hit = true;
    });
    if (hit) return false;
  }
  return true;
}

inline Predicates predicates(const Graph& g) {
  Predicates p;
  const std::size_t comps = components(g).size();
  p.connected = g.order() > 0 && comps == 1;
  p.classes = two_coloring(g);
  p.bipartite = p.classes.has_value();
  p.triangle_free = is_triangle_free(g);
  p.forest = g.edge_count() + comps == g.order();
  p.tree = p.forest && p.connected;
  return p;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

// Swaps edges and non-edges between the two classes; classes must be a
// bipartition of g (disjoint, covering, each independent).
inline Graph bipartite_complement(const Graph& g, const Bipartition& classes) {
  const auto& [a, b] = classes;
  if (a.capacity() != g.order() || b.capacity() != g.order())
    throw PreconditionError("bipartition capacity does not match graph order");
  if (a.intersects(b) || (a | b) != g.all_vertices())
    throw PreconditionError("classes do not partition the vertex set");
  bool independent = true;
  a.for_each([&](std::size_t v) { independent = independent && !g.neighbors(v).intersects(a); });
  b.for_each([&](std::size_t v) { independent = independent && !g.neighbors(v).intersects(b); });
  if (!independent) throw PreconditionError("edge inside a bipartition class");
  Graph h(g.order());
  a.for_each([&](std::size_t u) {
    b.for_each([&](std::size_t v) {
      if (!g.has_edge(u, v)) h.add_edge(u, v);
    });
  });
  return h;
}

// Partition of the vertices into classes of equal open neighbourhood.
// Classes are ordered by their smallest member.
struct TwinPartition {
  std::vector<VertexSet> classes;

  bool all_singletons() const {
    return std::all_of(classes.begin(), classes.end(),
                       [](const VertexSet& c) { return c.count() == 1; });
  }
};

inline TwinPartition twins(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.neighbors(a) < g.neighbors(b);
  });
  TwinPartition tp;
  for (std::size_t i = 0; i < n;) {
    VertexSet cls = g.empty_set();
    std::size_t j = i;
    while (j < n && g.neighbors(order[j]) == g.neighbors(order[i])) cls.set(order[j++]);
    tp.classes.push_back(std::move(cls));
    i = j;
  }
  std::sort(tp.classes.begin(), tp.classes.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  return tp;
}

inline bool is_twin_free(const Graph& g) {
  return twins(g).all_singletons();
}

// Keeps the lowest-index vertex of every twin class and repeats on the
// induced subgraph until no twins remain.
inline Graph twin_free_core(const Graph& g) {
  Graph cur = g;
  while (true) {
    TwinPartition tp = twins(cur);
    if (tp.all_singletons()) return cur;
    VertexSet keep = cur.empty_set();
    for (const auto& c : tp.classes) keep.set(c.first());
    cur = cur.induced(keep);
  }
}

// Common small graphs.
inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// K_{a,b} with the a-side on vertices 0..a-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph star_graph(std::size_t leaves) {
  return complete_bipartite(1, leaves);
}

}  // namespace imax
