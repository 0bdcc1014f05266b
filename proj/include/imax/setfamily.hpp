#pragma once

// Set families over a small ground set [n] = {0..n-1} stored as bitmasks,
// union-efficiency, and the exhaustive Milner-bound search.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "imax/errors.hpp"
#include "imax/vertex_set.hpp"

namespace imax {

inline constexpr std::size_t kGroundCap = 16;

using SetMask = std::uint32_t;

inline SetMask full_mask(std::size_t ground_n) {
  return ground_n >= 32 ? ~SetMask{0} : (SetMask{1} << ground_n) - 1;
}

class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t ground_n, std::vector<SetMask> members)
      : ground_n_(ground_n), members_(std::move(members)) {
    if (ground_n_ > kGroundCap) throw CapError("ground set is capped at 16 elements");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw PreconditionError("family members must be distinct");
    for (SetMask m : members_)
      if (m & ~full_mask(ground_n_)) throw PreconditionError("member outside the ground set");
  }

  std::size_t ground_n() const { return ground_n_; }
  const std::vector<SetMask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  SetMask full() const { return full_mask(ground_n_); }

  // Image under a permutation of the ground set.
  SetFamily permuted(const std::vector<std::size_t>& perm) const {
    std::vector<SetMask> out;
    out.reserve(members_.size());
    for (SetMask m : members_) {
      SetMask img = 0;
      for (std::size_t e = 0; e < ground_n_; ++e)
        if ((m >> e) & 1U) img |= SetMask{1} << perm[e];
      out.push_back(img);
    }
    return SetFamily(ground_n_, std::move(out));
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
  friend auto operator<=>(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t ground_n_ = 0;
  std::vector<SetMask> members_;  // sorted ascending
};

// Smallest image of f over all permutations of the ground set.
inline SetFamily canonical_family(const SetFamily& f) {
  std::vector<std::size_t> perm(f.ground_n());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  SetFamily best = f;
  do {
    SetFamily img = f.permuted(perm);
    if (img < best) best = std::move(img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace detail {

// True iff some set of pairwise non-covering members (indices in `allowed`
// above `from`) together with `acc` covers `full`.
inline bool find_bad_cover(const std::vector<SetMask>& sets, const std::vector<VertexSet>& compat,
                           const VertexSet& allowed, SetMask acc, SetMask full) {
  SetMask reach = acc;
  allowed.for_each([&](std::size_t i) { reach |= sets[i]; });
  if (reach != full) return false;
  for (std::size_t i = allowed.first(); i != VertexSet::npos; i = allowed.next(i)) {
    SetMask u = acc | sets[i];
    if (u == full) return true;
    VertexSet rest = allowed & compat[i];
    VertexSet later = rest;
    for (std::size_t j = rest.first(); j != VertexSet::npos && j <= i; j = rest.next(j)) later.reset(j);
    if (find_bad_cover(sets, compat, later, u, full)) return true;
  }
  return false;
}

}  // namespace detail

// A family is union-efficient iff every subfamily whose union is the ground
// set contains two (not necessarily distinct) members whose union already
// is. Equivalent check: no family of pairwise non-covering members covers.
// Such a family has no covering member, and any two of its members fail to
// cover, so a hit is exactly a bad subfamily.
inline bool is_union_efficient(const SetFamily& f) {
  const SetMask full = f.full();
  std::vector<SetMask> sets;
  for (SetMask m : f.members())
    if (m != full) sets.push_back(m);
  const std::size_t k = sets.size();
  std::vector<VertexSet> compat(k, VertexSet(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && (sets[i] | sets[j]) != full) compat[i].set(j);
  return !detail::find_bad_cover(sets, compat, VertexSet::full(k), 0, full);
}

// 2^{[n-1]} together with every subset of [n] of size >= n-1.
inline SetFamily milner_extremal_family(std::size_t n) {
  if (n < 1 || n > kGroundCap) throw PreconditionError("milner_extremal_family needs 1 <= n <= 16");
  std::vector<SetMask> out;
  const SetMask full = full_mask(n);
  for (SetMask m = 0; m <= full; ++m)
    if (!((m >> (n - 1)) & 1U) || static_cast<std::size_t>(std::popcount(m)) >= n - 1) out.push_back(m);
  return SetFamily(n, std::move(out));
}

struct MilnerResult {
  std::size_t n = 0;
  std::size_t max_size = 0;
  std::size_t extremal_labelled = 0;       // extremal families before dedup
  std::vector<SetFamily> extremal_classes;  // canonical representatives
  bool unique_and_matches_construction = false;
};

// Exhaustive search over all 2^{2^n} families on [n], n in {3, 4}.
inline MilnerResult milner_exhaustive(std::size_t n) {
  if (n != 3 && n != 4) throw PreconditionError("milner_exhaustive supports n = 3 or 4");
  const std::size_t universe = std::size_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << universe;
  MilnerResult res;
  res.n = n;
  std::vector<SetFamily> extremal;
  for (std::uint64_t code = 0; code < families; ++code) {
    auto size = static_cast<std::size_t>(std::popcount(code));
    if (size < res.max_size) continue;
    std::vector<SetMask> members;
    for (std::size_t s = 0; s < universe; ++s)
      if ((code >> s) & 1U) members.push_back(static_cast<SetMask>(s));
    SetFamily f(n, std::move(members));
    if (!is_union_efficient(f)) continue;
    if (size > res.max_size) {
      res.max_size = size;
      extremal.clear();
    }
    extremal.push_back(std::move(f));
  }
  res.extremal_labelled = extremal.size();
  for (const auto& f : extremal) res.extremal_classes.push_back(canonical_family(f));
  std::sort(res.extremal_classes.begin(), res.extremal_classes.end());
  res.extremal_classes.erase(std::unique(res.extremal_classes.begin(), res.extremal_classes.end()),
                             res.extremal_classes.end());
  res.unique_and_matches_construction =
      res.extremal_classes.size() == 1 &&
      res.extremal_classes.front() == canonical_family(milner_extremal_family(n));
  return res;
}

// One lower-case hex bitmask per line.
inline std::string to_text(const SetFamily& f) {
  std::string out;
  for (SetMask m : f.members()) out += VertexSet::from_word(32, m).to_hex() + "\n";
  return out;
}

}  // namespace imax
