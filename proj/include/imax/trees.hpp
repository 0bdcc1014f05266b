#pragma once

// Non-isomorphic free trees via level sequences (Wright, Richmond, Odlyzko
// and McKay): rooted trees are stepped with the Beyer-Hedetniemi successor
// and only sequences that are canonical for a centred free tree are kept.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "imax/errors.hpp"
#include "imax/graph.hpp"

namespace imax {

inline constexpr std::size_t kFreeTreeCap = 22;

using LevelSequence = std::vector<std::size_t>;

// Vertex i hangs below the nearest earlier vertex one level up.
inline Graph levels_to_graph(const LevelSequence& levels) {
  Graph g(levels.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) g.add_edge(i, stack.back());
    stack.push_back(i);
  }
  return g;
}

namespace detail {

// Successor of a rooted level sequence, changing position p onwards; p
// defaults to the last entry above level 1. Empty optional when exhausted.
inline std::optional<LevelSequence> next_rooted(const LevelSequence& pred, std::optional<std::size_t> from = {}) {
  std::size_t p;
  if (from) {
    p = *from;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  LevelSequence out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

struct SplitTree {
  LevelSequence left;  // first subtree of the root, re-rooted at level 0
  LevelSequence rest;  // the tree with that subtree removed
};

inline SplitTree split_tree(const LevelSequence& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  SplitTree s;
  for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
  s.rest.push_back(0);
  for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
  return s;
}

// Returns the candidate if it encodes a free tree canonically, otherwise
// jumps ahead to the next candidate that might.
inline std::optional<LevelSequence> next_free(const LevelSequence& candidate) {
  SplitTree s = split_tree(candidate);
  const std::size_t left_height = *std::max_element(s.left.begin(), s.left.end());
  const std::size_t rest_height = *std::max_element(s.rest.begin(), s.rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (s.left.size() > s.rest.size()) valid = false;
    else if (s.left.size() == s.rest.size() && s.left > s.rest) valid = false;
  }
  if (valid) return candidate;
  const std::size_t p = s.left.size();
  auto next = next_rooted(candidate, p);
  if (next && candidate[p] > 2) {
    SplitTree ns = split_tree(*next);
    const std::size_t h = *std::max_element(ns.left.begin(), ns.left.end());
    // Overwrite the tail with the path 1, 2, ..., h+1.
    for (std::size_t i = 0; i <= h; ++i) (*next)[next->size() - (h + 1) + i] = i + 1;
  }
  return next;
}

}  // namespace detail

// Deterministic stream over the free trees of order n, one per
// isomorphism class.
class FreeTrees {
 public:
  explicit FreeTrees(std::size_t n, std::size_t cap = kFreeTreeCap) : n_(n) {
    if (n == 0) throw PreconditionError("free_trees needs n >= 1");
    if (n > cap)
      throw CapError("free_trees is capped at n = " + std::to_string(cap) + " (got " + std::to_string(n) + ")");
    if (n >= 2) {
      LevelSequence start;
      for (std::size_t i = 0; i <= n / 2; ++i) start.push_back(i);
      for (std::size_t i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
      layout_ = std::move(start);
    }
  }

  // Next level sequence, or nullopt at the end.
  std::optional<LevelSequence> next_levels() {
    if (n_ == 1) {
      if (single_done_) return std::nullopt;
      single_done_ = true;
      return LevelSequence{0};
    }
    if (!layout_) return std::nullopt;
    layout_ = detail::next_free(*layout_);
    if (!layout_) return std::nullopt;
    LevelSequence out = *layout_;
    layout_ = detail::next_rooted(*layout_);
    return out;
  }

  std::optional<Graph> next() {
    auto l = next_levels();
    if (!l) return std::nullopt;
    return levels_to_graph(*l);
  }

  template <class F>
  void for_each(F&& f) {
    while (auto g = next()) f(*g);
  }

 private:
  std::size_t n_;
  std::optional<LevelSequence> layout_;
  bool single_done_ = false;
};

// Materialised stream; prefer FreeTrees for n >= 20.
inline std::vector<Graph> free_trees(std::size_t n, std::size_t cap = kFreeTreeCap) {
  std::vector<Graph> out;
  FreeTrees(n, cap).for_each([&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace imax
