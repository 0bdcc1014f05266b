#pragma once

// Canonical labelling for small graphs: colour refinement plus an
// individualization search tree; the canonical form is the smallest graph6
// string over all leaves. Exponential in the worst case (highly symmetric
// graphs without twin pairs), fine for the orders used by the census.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "imax/errors.hpp"
#include "imax/graph.hpp"
#include "imax/graph6.hpp"

namespace imax {

inline constexpr std::size_t kCanonicalCap = 64;

namespace detail {

class Canonizer {
 public:
  using Mask = std::uint64_t;

  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order()) {
    for (std::size_t v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).word(0);
  }

  std::string run() {
    if (n_ == 0) return to_graph6(Graph(0));
    std::vector<Mask> cells{n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1};
    refine(cells);
    search(cells);
    return best_;
  }

 private:
  void refine(std::vector<Mask>& cells) const {
    std::vector<std::pair<std::vector<std::uint8_t>, int>> sig;
    while (true) {
      std::vector<Mask> next;
      next.reserve(n_);
      for (Mask cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        sig.clear();
        for (Mask m = cell; m; m &= m - 1) {
          int v = std::countr_zero(m);
          std::vector<std::uint8_t> counts(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c)
            counts[c] = static_cast<std::uint8_t>(std::popcount(adj_[v] & cells[c]));
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        Mask part = 0;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i > 0 && sig[i].first != sig[i - 1].first) {
            next.push_back(part);
            part = 0;
          }
          part |= Mask{1} << sig[i].second;
        }
        next.push_back(part);
      }
      bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  void search(const std::vector<Mask>& cells) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    for (Mask m = cells[target]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      // Swapping v with an already-tried twin w is an automorphism fixing
      // the partition, so v's subtree repeats w's.
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](int w) {
        Mask bv = Mask{1} << v, bw = Mask{1} << w;
        return (adj_[v] & ~bw) == (adj_[w] & ~bv);
      });
      if (redundant) continue;
      tried.push_back(v);
      std::vector<Mask> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(Mask{1} << v);
      child.push_back(cells[target] & ~(Mask{1} << v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      refine(child);
      search(child);
    }
  }

  void leaf(const std::vector<Mask>& cells) {
    std::vector<std::size_t> label(n_);
    for (std::size_t i = 0; i < cells.size(); ++i)
      label[static_cast<std::size_t>(std::countr_zero(cells[i]))] = i;
    Graph h(n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (Mask m = adj_[u]; m; m &= m - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(m));
        if (u < v) h.add_edge(label[u], label[v]);
      }
    std::string key = to_graph6(h);
    if (best_.empty() || key < best_) best_ = std::move(key);
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::string best_;
};

}  // namespace detail

// Canonical graph6 string: isomorphic graphs map to the same string.
inline std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalCap)
    throw CapError("canonical_form is capped at 64 vertices (got " + std::to_string(g.order()) + ")");
  return detail::Canonizer(g).run();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace imax
