#pragma once

// Random instances for property tests: uniform labelled trees (Pruefer
// sequences), G(n, p) graphs, and random relabelings.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "imax/graph.hpp"

namespace imax {

template <class Rng>
Graph random_tree(std::size_t n, Rng& rng) {
  Graph t(n);
  if (n < 2) return t;
  if (n == 2) {
    t.add_edge(0, 1);
    return t;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> code(n - 2);
  std::vector<std::size_t> degree(n, 1);
  for (auto& c : code) {
    c = pick(rng);
    ++degree[c];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (std::size_t c : code) {
    std::size_t leaf = leaves.top();
    leaves.pop();
    t.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  std::size_t u = leaves.top();
  leaves.pop();
  t.add_edge(u, leaves.top());
  return t;
}

template <class Rng>
Graph random_graph(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

template <class Rng>
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace imax
