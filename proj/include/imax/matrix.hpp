#pragma once

// k x k 0/1 matrices as reduced biadjacency matrices of balanced bipartite
// graphs. Row i is a bitmask over columns (bit j = entry (i, j)).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "imax/errors.hpp"
#include "imax/graph.hpp"
#include "imax/setfamily.hpp"

namespace imax {

struct BinaryMatrix {
  std::size_t k = 0;
  std::vector<SetMask> rows;

  static BinaryMatrix from_rows(std::size_t k, std::vector<SetMask> rows) {
    if (k > kGroundCap) throw CapError("matrix dimension is capped at 16");
    if (rows.size() != k) throw PreconditionError("matrix must have k rows");
    for (SetMask r : rows)
      if (r & ~full_mask(k)) throw PreconditionError("row wider than k");
    return {k, std::move(rows)};
  }

  bool at(std::size_t i, std::size_t j) const { return (rows[i] >> j) & 1U; }

  std::vector<SetMask> columns() const {
    std::vector<SetMask> cols(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (at(i, j)) cols[j] |= SetMask{1} << i;
    return cols;
  }

  BinaryMatrix transposed() const { return {k, columns()}; }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
};

// Rows as strings of '0'/'1', column 0 first, one row per line.
inline std::string to_text(const BinaryMatrix& m) {
  std::string out;
  for (SetMask r : m.rows) {
    for (std::size_t j = 0; j < m.k; ++j) out.push_back(((r >> j) & 1U) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline BinaryMatrix parse_matrix(const std::string& text) {
  std::vector<SetMask> rows;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (rows.empty()) width = line.size();
    if (line.size() != width) throw ParseError("ragged matrix row", 0, line_no);
    SetMask r = 0;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] == '1') r |= SetMask{1} << j;
      else if (line[j] != '0') throw ParseError("matrix entries must be 0 or 1", j, line_no);
    }
    rows.push_back(r);
  }
  if (rows.size() != width) throw ParseError("matrix is not square", 0, line_no);
  return BinaryMatrix::from_rows(width, std::move(rows));
}

namespace detail {

inline bool all_distinct(std::vector<SetMask> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline bool pairwise_union_closed(const std::vector<SetMask>& v) {
  std::set<SetMask> present(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!present.count(v[i] | v[j])) return false;
  return true;
}

inline bool has_all_one_row_and_column(const BinaryMatrix& m) {
  const SetMask full = full_mask(m.k);
  SetMask meet = full;
  for (SetMask r : m.rows) meet &= r;
  return std::find(m.rows.begin(), m.rows.end(), full) != m.rows.end() && meet != 0;
}

}  // namespace detail

// All-one row and column, distinct rows, distinct columns, and the union of
// any two rows is a row.
inline bool matrix_conditions(const BinaryMatrix& m) {
  if (m.k == 0) return false;
  return detail::has_all_one_row_and_column(m) && detail::all_distinct(m.rows) &&
         detail::all_distinct(m.columns()) && detail::pairwise_union_closed(m.rows);
}

// Bipartite graph with row vertices 0..k-1 and column vertices k..2k-1;
// row i ~ column j iff entry (i, j) is 1.
inline Graph matrix_to_bipartite(const BinaryMatrix& m) {
  if (!matrix_conditions(m)) throw PreconditionError("matrix violates the bijection conditions");
  Graph g(2 * m.k);
  for (std::size_t i = 0; i < m.k; ++i)
    for (std::size_t j = 0; j < m.k; ++j)
      if (m.at(i, j)) g.add_edge(i, m.k + j);
  return g;
}

// Reduced biadjacency matrix of a connected balanced bipartite graph: rows
// are the class containing vertex 0, both classes in increasing order.
inline BinaryMatrix reduced_biadjacency(const Graph& g) {
  auto classes = two_coloring(g);
  if (!classes || !is_connected(g)) throw PreconditionError("graph is not connected bipartite");
  auto rows = classes->first.members();
  auto cols = classes->second.members();
  if (rows.size() != cols.size()) throw PreconditionError("bipartition is not balanced");
  BinaryMatrix m{rows.size(), std::vector<SetMask>(rows.size(), 0)};
  if (m.k > kGroundCap) throw CapError("matrix dimension is capped at 16");
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (g.has_edge(rows[i], cols[j])) m.rows[i] |= SetMask{1} << j;
  return m;
}

// Returns (rows union-closed, columns union-closed). Requires an all-one row
// and column and distinct rows and columns.
inline std::pair<bool, bool> rows_union_closed_iff_cols(const BinaryMatrix& m) {
  if (m.k == 0 || !detail::has_all_one_row_and_column(m) || !detail::all_distinct(m.rows) ||
      !detail::all_distinct(m.columns()))
    throw PreconditionError("needs an all-one row and column and distinct rows and columns");
  return {detail::pairwise_union_closed(m.rows), detail::pairwise_union_closed(m.columns())};
}

enum class MatrixEquivalence {
  // Independent row and column permutations.
  row_column,
  // Row/column permutations plus transposition: isomorphism of the
  // corresponding bipartite graphs.
  graph_isomorphism,
};

// Canonical key of m under row and column permutations (sorted rows of the
// column-permuted matrix, minimised over all column permutations).
inline std::vector<SetMask> matrix_canonical_key(const BinaryMatrix& m,
                                                 MatrixEquivalence eq = MatrixEquivalence::graph_isomorphism) {
  auto key_of = [](const BinaryMatrix& a) {
    std::vector<std::size_t> perm(a.k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<SetMask> best;
    do {
      std::vector<SetMask> rows;
      rows.reserve(a.k);
      for (SetMask r : a.rows) {
        SetMask img = 0;
        for (std::size_t j = 0; j < a.k; ++j)
          if ((r >> j) & 1U) img |= SetMask{1} << perm[j];
        rows.push_back(img);
      }
      std::sort(rows.begin(), rows.end());
      if (best.empty() || rows < best) best = std::move(rows);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  auto key = key_of(m);
  if (eq == MatrixEquivalence::graph_isomorphism) key = std::min(key, key_of(m.transposed()));
  return key;
}

inline constexpr std::size_t kMatrixCountCap = 6;

// All matrices satisfying matrix_conditions, one per equivalence class,
// ordered by canonical key. Rows are enumerated as increasing sets that
// contain the all-one row; a pair whose union is smaller than the last
// chosen row and absent prunes the branch.
inline std::vector<BinaryMatrix> valid_matrices(std::size_t k,
                                                MatrixEquivalence eq = MatrixEquivalence::graph_isomorphism) {
  if (k < 1 || k > kMatrixCountCap) throw CapError("valid_matrices supports 1 <= k <= 6");
  const SetMask full = full_mask(k);
  std::set<std::vector<SetMask>> keys;
  std::vector<SetMask> chosen;

  // Every pairwise union below the newest row must already be present;
  // larger unions can still be added later.
  auto closed_so_far = [&]() {
    for (std::size_t a = 0; a < chosen.size(); ++a)
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        SetMask u = chosen[a] | chosen[b];
        if (u < chosen.back() && !std::binary_search(chosen.begin(), chosen.end(), u)) return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, SetMask next) -> void {
    if (chosen.size() == k - 1) {
      std::vector<SetMask> rows = chosen;
      rows.push_back(full);
      BinaryMatrix m{k, rows};
      if (matrix_conditions(m)) keys.insert(matrix_canonical_key(m, eq));
      return;
    }
    for (SetMask r = next; r < full; ++r) {
      if (full - r < (k - 1 - chosen.size())) break;
      chosen.push_back(r);
      if (closed_so_far()) self(self, r + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);

  std::vector<BinaryMatrix> out;
  for (const auto& key : keys) out.push_back(BinaryMatrix{k, key});
  return out;
}

inline std::size_t count_valid_matrices(std::size_t k,
                                        MatrixEquivalence eq = MatrixEquivalence::graph_isomorphism) {
  return valid_matrices(k, eq).size();
}

}  // namespace imax
