#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "imax/bounds.hpp"
#include "imax/checks.hpp"
#include "imax/constructions.hpp"
#include "imax/graph6.hpp"
#include "imax/invariants.hpp"
#include "imax/mis.hpp"
#include "imax/random.hpp"
#include "imax/small_graphs.hpp"
#include "imax/trees.hpp"
#include "imax/wilf.hpp"
#include "oracles.hpp"

using namespace imax;

namespace {

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](std::size_t v) { m |= std::uint64_t{1} << v; });
  return m;
}

// Reference f(n) from its defining cases with plain integers.
std::uint64_t f_ref(std::uint64_t n) {
  auto p3 = [](std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= 3;
    return r;
  };
  if (n == 1) return 1;
  if (n <= 3) return 2;
  switch (n % 5) {
    case 0: return 4 * p3(n / 5 - 1);
    case 1: return 5 * p3((n - 6) / 5);
    case 2: return 2 * p3((n - 2) / 5);
    case 3: return 8 * p3((n - 8) / 5);
    default: return p3((n + 1) / 5);
  }
}

}  // namespace

TEST(CountMis, Examples) {
  EXPECT_EQ(imax_of(complete_graph(3)), 3);
  EXPECT_EQ(imax_of(path_graph(3)), 2);
  EXPECT_EQ(imax_of(cycle_graph(6)), 5);
  EXPECT_EQ(imax_of(path_graph(5)), 4);
  EXPECT_EQ(imax_of(Graph(0)), 1);
  EXPECT_EQ(imax_of(Graph(5)), 1);
}

TEST(CountMis, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(42);
  for (std::size_t n = 1; n <= 16; ++n)
    for (double p : {0.1, 0.3, 0.5, 0.8})
      for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(n, p, rng);
        ASSERT_EQ(count_mis(g).count, oracle::count_mis(g)) << to_graph6(g);
      }
}

TEST(CountMis, WitnessesAreExactlyTheMaximalIndependentSets) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(12, 0.3, rng);
    MisReport rep = count_mis(g, {.witness_limit = 100000});
    EXPECT_FALSE(rep.witness_limit_hit);
    std::vector<std::uint64_t> got;
    for (const auto& w : rep.witnesses) {
      EXPECT_TRUE(is_maximal_independent(g, w));
      got.push_back(mask_of(w));
    }
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    std::vector<std::uint64_t> expected = oracle::all_mis(g);
    EXPECT_EQ(got, expected);
  }
}

TEST(CountMis, WitnessLimitAndBudget) {
  Graph g = cycle_graph(20);
  MisReport limited = count_mis(g, {.witness_limit = 5});
  EXPECT_EQ(limited.witnesses.size(), 5u);
  EXPECT_TRUE(limited.witness_limit_hit);
  EXPECT_EQ(limited.count, perrin(20));

  Graph triangles(0);
  for (int i = 0; i < 20; ++i) triangles = triangles.disjoint_union(complete_graph(3));
  MisReport cut = count_mis(triangles, {.node_budget = 50});
  EXPECT_TRUE(cut.budget_exceeded);
  EXPECT_TRUE(cut.witnesses.empty());
  EXPECT_EQ(cut.count, 0);
}

TEST(CountMis, WideGraphsUseEveryKernel) {
  // Disjoint triangles: 3^(n/3) maximal independent sets, at widths 1..16
  // words and beyond.
  for (std::size_t t : {5, 21, 42, 85, 170, 200}) {
    Graph g(0);
    for (std::size_t i = 0; i < t; ++i) g = g.disjoint_union(complete_graph(3));
    EXPECT_EQ(count_mis(g).count, pow_big(3, t)) << "triangles=" << t;
  }
  // Connected graphs across the kernel widths: the complement of a perfect
  // matching has exactly its n/2 matched pairs as maximal independent sets.
  for (std::size_t n : {60u, 130u, 700u, 1100u}) {
    Graph g = complement(Graph(n));
    for (std::size_t i = 0; i < n; i += 2) g.remove_edge(i, i + 1);
    EXPECT_EQ(count_mis(g).count, n / 2) << n;
  }
  EXPECT_EQ(count_mis(complete_bipartite(300, 800)).count, 2);
}

TEST(CountMis, InvariantUnderRelabeling) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(14, 0.3, rng);
    BigInt base = count_mis(g).count;
    for (int k = 0; k < 10; ++k) {
      auto perm = random_permutation(14, rng);
      EXPECT_EQ(count_mis(g.relabel(perm)).count, base);
    }
  }
}

TEST(Perrin, ValuesAndCycles) {
  EXPECT_EQ(perrin(0), 3);
  EXPECT_EQ(perrin(1), 0);
  EXPECT_EQ(perrin(2), 2);
  EXPECT_EQ(perrin(4), 2);
  EXPECT_EQ(perrin(5), 5);
  for (std::size_t n = 3; n <= 30; ++n) EXPECT_EQ(count_mis(cycle_graph(n)).count, perrin(n)) << n;
}

TEST(Bounds, ClosedForms) {
  EXPECT_EQ(f_min_tree(4), 3);
  EXPECT_EQ(f_min_tree(8), 8);
  EXPECT_EQ(f_min_tree(11), 15);
  EXPECT_EQ(f_min_tree(3), 2);
  for (std::uint64_t n = 1; n <= 80; ++n) EXPECT_EQ(f_min_tree(n), f_ref(n)) << n;
  EXPECT_THROW(f_min_tree(0), PreconditionError);
  EXPECT_EQ(wilf_max_tree(11), 32);
  EXPECT_EQ(wilf_max_tree(10), 17);
  EXPECT_EQ(moon_moser_max(6), 9);
  EXPECT_EQ(moon_moser_max(7), 12);
  EXPECT_EQ(moon_moser_max(8), 18);
  EXPECT_THROW(moon_moser_max(1), PreconditionError);
  EXPECT_EQ(bipartite_min(7), 5);
  EXPECT_EQ(bipartite_min(8), 5);
  EXPECT_EQ(connected_max(6), 8);
  EXPECT_EQ(connected_max(15), 178);
  EXPECT_EQ(min_imax_connected_graph(10), 4u);
  EXPECT_EQ(min_imax_connected_graph(11), 5u);
  EXPECT_EQ(min_imax_connected_graph(2), 2u);
  EXPECT_EQ(min_imax_connected_graph(12), 5u);
  EXPECT_EQ(min_imax_connected_graph(5), 3u);
  EXPECT_EQ(min_imax_connected_graph(6), 4u);
}

TEST(Bounds, TableIsPositiveAndFNondecreasing) {
  BigInt prev = 0;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    BoundTable t = bound_table(n);
    EXPECT_GT(t.f, 0);
    EXPECT_GT(t.wilf_max, 0);
    EXPECT_GT(t.moon_moser, 0);
    EXPECT_GT(t.connected_max, 0);
    EXPECT_GT(t.bipartite_min, 0);
    if (n >= 4) { EXPECT_GE(t.f, prev); }
    prev = t.f;
  }
}

TEST(Bounds, CensusAgreement) {
  // Maximum imax over connected graphs and over trees, by exhaustion.
  for (std::size_t n = 2; n <= 8; ++n) {
    BigInt best = 0;
    for (const Graph& g : small_graphs(n, true)) best = std::max(best, count_mis(g).count);
    EXPECT_EQ(best, connected_max(n)) << n;
  }
  for (std::size_t n = 2; n <= 16; ++n) {
    BigInt best = 0;
    FreeTrees(n).for_each([&](const Graph& t) { best = std::max(best, count_mis(t).count); });
    EXPECT_EQ(best, wilf_max_tree(n)) << n;
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    BigInt best = 0;
    for (const Graph& g : small_graphs(n, false)) best = std::max(best, count_mis(g).count);
    EXPECT_EQ(best, moon_moser_max(n)) << n;
  }
}

TEST(Inequalities, SoleExceptionIsThreeThree) {
  FInequalityReport r = f_inequalities(200);
  EXPECT_TRUE(r.holds());
  ASSERT_EQ(r.product_failures.size(), 1u);
  EXPECT_EQ(r.product_failures.front(), (std::pair<std::size_t, std::size_t>{3, 3}));
  EXPECT_TRUE(r.shifted_failures.empty());
}

TEST(Wilf, Decompositions) {
  WilfDecomposition star = wilf_decompose(star_graph(3), 1);
  EXPECT_EQ(star.neighbor, 0u);
  ASSERT_EQ(star.branches.size(), 2u);
  for (const auto& b : star.branches) {
    EXPECT_EQ(b.vertices.count(), 1u);
    EXPECT_TRUE(b.subtrees.empty());
  }
  WilfDecomposition p5 = wilf_decompose(path_graph(5), 0);
  ASSERT_EQ(p5.branches.size(), 1u);
  EXPECT_EQ(p5.branches[0].root, 2u);
  EXPECT_EQ(p5.branches[0].vertices.count(), 3u);
  ASSERT_EQ(p5.branches[0].subtrees.size(), 1u);
  EXPECT_EQ(p5.branches[0].subtrees[0].vertices.count(), 2u);

  WilfCheck c = wilf_formula_check(star_graph(3), 1);
  EXPECT_EQ(c.direct, 2);
  EXPECT_EQ(c.product_sum, 2);
  WilfCheck p = wilf_formula_check(path_graph(5), 0);
  EXPECT_EQ(p.direct, 4);
  EXPECT_EQ(p.product_sum, 4);

  // n = 9 mod-5 tree, top leaf: the legs and the spine are the branches.
  Graph t = extremal_tree_mod5(9);
  WilfDecomposition d = wilf_decompose(t, 1);
  EXPECT_EQ(d.neighbor, 0u);
  std::size_t covered = 0;
  for (const auto& b : d.branches) covered += b.vertices.count();
  EXPECT_EQ(covered, 7u);
  EXPECT_EQ(d.branches.size(), 2u);
  EXPECT_TRUE(wilf_formula_check(t, 1).holds());
}

TEST(Wilf, RejectsBadInput) {
  EXPECT_THROW(wilf_decompose(cycle_graph(4), 0), PreconditionError);
  EXPECT_THROW(wilf_decompose(path_graph(4), 1), PreconditionError);
}

TEST(Wilf, ProductSumOnRandomTrees) {
  std::mt19937_64 rng(4242);
  for (std::size_t n = 4; n <= 18; ++n)
    for (int trial = 0; trial < 1000; ++trial) {
      Graph t = random_tree(n, rng);
      for (std::size_t x = 0; x < n; ++x)
        if (t.degree(x) == 1) {
          ASSERT_TRUE(wilf_formula_check(t, x).holds()) << to_graph6(t) << " leaf " << x;
        }
    }
}

TEST(Invariants, Examples) {
  GraphInvariants k4 = invariants(complete_graph(4));
  EXPECT_EQ(k4.chromatic, 4u);
  EXPECT_EQ(k4.clique, 4u);
  EXPECT_EQ(k4.vertex_cover, 3u);
  EXPECT_EQ(k4.induced_matching, 1u);
  GraphInvariants c5 = invariants(cycle_graph(5));
  EXPECT_EQ(c5.chromatic, 3u);
  EXPECT_EQ(c5.clique, 2u);
  EXPECT_EQ(c5.vertex_cover, 3u);
  EXPECT_EQ(c5.induced_matching, 1u);
  GraphInvariants k33 = invariants(complete_bipartite(3, 3));
  EXPECT_EQ(k33.chromatic, 2u);
  EXPECT_EQ(k33.clique, 2u);
  EXPECT_EQ(k33.vertex_cover, 3u);
  EXPECT_EQ(k33.induced_matching, 1u);
  EXPECT_THROW(invariants(Graph(33)), CapError);
}

TEST(Invariants, MatchBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(7, 0.45, rng);
    GraphInvariants inv = invariants(g);
    EXPECT_EQ(inv.chromatic, oracle::chromatic(g)) << to_graph6(g);
    EXPECT_EQ(inv.clique, oracle::clique(g)) << to_graph6(g);
    EXPECT_EQ(inv.vertex_cover, oracle::vertex_cover(g)) << to_graph6(g);
    EXPECT_EQ(inv.induced_matching, oracle::induced_matching(g)) << to_graph6(g);
    EXPECT_LE(inv.induced_matching, g.order() / 2);
  }
}

TEST(Invariants, ImaxBoundsOverSmallGraphs) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const Graph& g : small_graphs(n, false)) {
      GraphInvariants inv = invariants(g);
      BigInt c = count_mis(g).count;
      ASSERT_GE(c, inv.chromatic) << to_graph6(g);
      ASSERT_GE(inv.chromatic, inv.clique) << to_graph6(g);
      ASSERT_LE(c, pow_big(2, inv.vertex_cover)) << to_graph6(g);
      ASSERT_GE(c, pow_big(2, inv.induced_matching)) << to_graph6(g);
    }
}

TEST(MembershipMap, InjectiveOnTwinFreeGraphs) {
  std::mt19937_64 rng(31);
  int twin_free_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Graph g = random_graph(10, 0.35, rng);
    MembershipMapReport r = membership_map_check(g);
    EXPECT_TRUE(r.nonempty);
    EXPECT_EQ(r.injective, is_twin_free(g)) << to_graph6(g);
    twin_free_seen += is_twin_free(g);
  }
  EXPECT_GT(twin_free_seen, 100);
}
