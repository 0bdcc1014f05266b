#pragma once

// Leaf decomposition of a tree used by Wilf's product-sum recursion:
// x a leaf, y its neighbour, U_i the components of T - {x, y} (rooted at the
// neighbours u_i of y), W_{i,j} the components of U_i - u_i (rooted at the
// neighbours w_{i,j} of u_i).

#include <cstddef>
#include <utility>
#include <vector>

#include "imax/bigint.hpp"
#include "imax/errors.hpp"
#include "imax/graph.hpp"
#include "imax/mis.hpp"

namespace imax {

struct WilfSubtree {
  std::size_t root = 0;
  VertexSet vertices;
};

struct WilfBranch {
  std::size_t root = 0;  // u_i
  VertexSet vertices;    // U_i
  std::vector<WilfSubtree> subtrees;  // W_{i,j}
};

struct WilfDecomposition {
  std::size_t leaf = 0;      // x
  std::size_t neighbor = 0;  // y
  std::vector<WilfBranch> branches;
};

namespace detail {

// Component of `within` containing `root`.
inline VertexSet component_of(const Graph& g, const VertexSet& within, std::size_t root) {
  VertexSet comp = g.empty_set();
  VertexSet frontier = g.empty_set();
  frontier.set(root);
  while (frontier.any()) {
    comp |= frontier;
    VertexSet next = g.empty_set();
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
    frontier = (next & within) - comp;
  }
  return comp;
}

}  // namespace detail

inline WilfDecomposition wilf_decompose(const Graph& t, std::size_t x) {
  if (!predicates(t).tree) throw PreconditionError("wilf_decompose: graph is not a tree");
  if (x >= t.order() || t.degree(x) != 1)
    throw PreconditionError("wilf_decompose: vertex " + std::to_string(x) + " is not a leaf");
  WilfDecomposition d;
  d.leaf = x;
  d.neighbor = t.neighbors(x).first();
  VertexSet rest = t.all_vertices();
  rest.reset(x);
  rest.reset(d.neighbor);
  VertexSet us = t.neighbors(d.neighbor);
  us.reset(x);
  us.for_each([&](std::size_t u) {
    WilfBranch b;
    b.root = u;
    b.vertices = detail::component_of(t, rest, u);
    VertexSet inner = b.vertices;
    inner.reset(u);
    t.neighbors(u).for_each([&](std::size_t w) {
      if (inner.test(w)) b.subtrees.push_back({w, detail::component_of(t, inner, w)});
    });
    d.branches.push_back(std::move(b));
  });
  return d;
}

struct WilfCheck {
  BigInt direct;       // count_mis(T)
  BigInt product_sum;  // ∏ imax(U_i) + ∏∏ imax(W_{i,j})
  bool holds() const { return direct == product_sum; }
};

inline WilfCheck wilf_formula_check(const Graph& t, std::size_t x) {
  WilfDecomposition d = wilf_decompose(t, x);
  BigInt branches = 1;
  BigInt subtrees = 1;
  for (const auto& b : d.branches) {
    branches *= count_mis(t.induced(b.vertices)).count;
    for (const auto& w : b.subtrees) subtrees *= count_mis(t.induced(w.vertices)).count;
  }
  return {count_mis(t).count, branches + subtrees};
}

}  // namespace imax
