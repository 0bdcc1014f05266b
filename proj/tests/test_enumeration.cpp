#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "imax/bounds.hpp"
#include "imax/canonical.hpp"
#include "imax/census.hpp"
#include "imax/constructions.hpp"
#include "imax/graph6.hpp"
#include "imax/random.hpp"
#include "imax/small_graphs.hpp"
#include "imax/trees.hpp"
#include "oracles.hpp"

using namespace imax;

namespace {

CensusOptions serial(bool keep = true) { return {.threads = 1, .keep_witnesses = keep}; }

std::string stream_of(const std::vector<Graph>& graphs) {
  std::string out = ">>graph6<<";
  for (const Graph& g : graphs) out += to_graph6(g) + "\n";
  return out;
}

}  // namespace

TEST(FreeTrees, CountsMatchKnownSequence) {
  const std::vector<std::size_t> counts{1,    1,    1,     1,     2,     3,      6,      11,     23,     47,    106, 235,
                                        551, 1301, 3159, 7741, 19320, 48629, 123867};
  for (std::size_t n = 1; n < counts.size(); ++n) {
    std::size_t seen = 0;
    FreeTrees(n).for_each([&](const Graph&) { ++seen; });
    EXPECT_EQ(seen, counts[n]) << n;
  }
}

TEST(FreeTrees, AgreeWithLeafAugmentationOracle) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<std::string> ours;
    for (const Graph& t : free_trees(n)) {
      EXPECT_EQ(t.order(), n);
      EXPECT_TRUE(n == 1 || (is_connected(t) && t.edge_count() + 1 == n));
      ours.insert(oracle::ahu(t));
    }
    std::set<std::string> reference;
    for (const Graph& t : oracle::naive_free_trees(n)) reference.insert(oracle::ahu(t));
    EXPECT_EQ(ours, reference) << n;
    EXPECT_EQ(ours.size(), free_trees(n).size()) << n;
  }
}

TEST(FreeTrees, CapAndPreconditions) {
  EXPECT_THROW(FreeTrees(0), PreconditionError);
  EXPECT_THROW(FreeTrees(23), CapError);
  EXPECT_NO_THROW(FreeTrees(23, 30));
  FreeTrees one(1);
  EXPECT_TRUE(one.next().has_value());
  EXPECT_FALSE(one.next().has_value());
}

TEST(FreeTrees, LevelSequencesAreValid) {
  FreeTrees gen(9);
  while (auto levels = gen.next_levels()) {
    ASSERT_EQ(levels->size(), 9u);
    EXPECT_EQ(levels->front(), 0u);
    for (std::size_t i = 1; i < levels->size(); ++i) {
      EXPECT_GE((*levels)[i], 1u);
      EXPECT_LE((*levels)[i], (*levels)[i - 1] + 1);
    }
  }
}

TEST(SmallGraphs, CountsMatchBruteForceClasses) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(small_graphs(n, false).size(), oracle::count_graph_classes(n, false)) << n;
    EXPECT_EQ(small_graphs(n, true).size(), oracle::count_graph_classes(n, true)) << n;
  }
}

TEST(SmallGraphs, CountsMatchKnownSequences) {
  const std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 0; n <= 8; ++n) {
    EXPECT_EQ(small_graphs(n, false).size(), all[n]) << n;
    EXPECT_EQ(small_graphs(n, true).size(), connected[n]) << n;
  }
}

TEST(SmallGraphs, PairwiseNonIsomorphicUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> keys;
    for (const Graph& g : small_graphs(n, false)) keys.insert(oracle::brute_canonical(g));
    EXPECT_EQ(keys.size(), small_graphs(n, false).size());
  }
}

TEST(SmallGraphs, CapError) {
  EXPECT_THROW(small_graphs(9, true), CapError);
  try {
    small_graphs(9, true);
  } catch (const CapError& e) {
    EXPECT_NE(std::string(e.what()).find("graph6"), std::string::npos);
  }
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 5u, 9u, 14u, 20u, 33u}) {
    for (double p : {0.2, 0.5}) {
      Graph g = random_graph(n, p, rng);
      const std::string key = canonical_form(g);
      for (int r = 0; r < 20; ++r) {
        auto perm = random_permutation(n, rng);
        EXPECT_EQ(canonical_form(g.relabel(perm)), key);
      }
      EXPECT_EQ(parse_graph6(key).edge_count(), g.edge_count());
    }
  }
  Graph t = extremal_tree_mod5(40);
  for (int r = 0; r < 20; ++r) EXPECT_EQ(canonical_form(t.relabel(random_permutation(40, rng))), canonical_form(t));
}

TEST(CanonicalForm, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    Graph a = random_graph(n, 0.5, rng), b = random_graph(n, 0.5, rng);
    EXPECT_EQ(isomorphic(a, b), oracle::brute_canonical(a) == oracle::brute_canonical(b));
  }
  for (const Graph& c : {cycle_graph(6), path_graph(6), complete_bipartite(3, 3)})
    EXPECT_EQ(canonical_form(c), canonical_form(c.relabel(std::vector<std::size_t>{5, 3, 1, 0, 2, 4})));
  EXPECT_FALSE(isomorphic(cycle_graph(6), complete_graph(3).disjoint_union(complete_graph(3))));
}

TEST(TreeCensus, MinimaAndExtremalCounts) {
  const std::vector<std::uint64_t> counts{1, 1, 2, 1, 3, 1, 3, 3, 3, 11, 2, 12};
  for (std::size_t n = 4; n <= 15; ++n) {
    CensusRow row = census_trees(n, serial());
    EXPECT_EQ(row.min_imax, f_min_tree(n)) << n;
    EXPECT_EQ(row.extremal_count, counts[n - 4]) << n;
    EXPECT_EQ(row.witnesses.size(), row.extremal_count);
    EXPECT_TRUE(std::is_sorted(row.witnesses.begin(), row.witnesses.end()));
    EXPECT_EQ(row.predicate, Predicate::tree);
  }
  EXPECT_THROW(census_trees(3), PreconditionError);
}

TEST(TreeCensus, WitnessesAreTwinFreeExtremalTrees) {
  CensusRow row = census_trees(12, serial());
  ASSERT_TRUE(row.witnesses_retained);
  bool construction_found = false;
  const std::string built = canonical_form(extremal_tree_mod5(12));
  for (const std::string& w : row.witnesses) {
    Graph t = parse_graph6(w);
    EXPECT_TRUE(is_twin_free(t));
    EXPECT_EQ(count_mis(t).count, 18);
    EXPECT_EQ(canonical_form(t), w);
    construction_found |= (w == built);
  }
  EXPECT_TRUE(construction_found);
}

TEST(TreeCensus, ThreadCountDoesNotChangeResult) {
  CensusRow one = census_trees(13, {.threads = 1, .keep_witnesses = true, .batch = 7});
  CensusRow four = census_trees(13, {.threads = 4, .keep_witnesses = true, .batch = 100});
  EXPECT_EQ(one.min_imax, four.min_imax);
  EXPECT_EQ(one.extremal_count, four.extremal_count);
  EXPECT_EQ(one.witnesses, four.witnesses);
  CensusRow dropped = census_trees(13, {.threads = 2, .keep_witnesses = false});
  EXPECT_FALSE(dropped.witnesses_retained);
  EXPECT_TRUE(dropped.witnesses.empty());
  EXPECT_EQ(dropped.extremal_count, one.extremal_count);
}

TEST(GraphCensus, BuiltInRows) {
  const std::vector<int> minima{3, 4, 4, 5, 5};
  const std::vector<std::uint64_t> bipartite{1, 1, 2, 4, 4};
  const std::vector<std::uint64_t> triangle_free{1, 1, 2, 5, 4};
  for (std::size_t n = 4; n <= 8; ++n) {
    GraphCensus c = census_graphs_builtin(n, serial());
    EXPECT_EQ(c.bipartite.min_imax, minima[n - 4]) << n;
    EXPECT_EQ(c.bipartite.min_imax, bipartite_min(n));
    EXPECT_EQ(c.bipartite.extremal_count, bipartite[n - 4]) << n;
    EXPECT_EQ(c.triangle_free.min_imax, minima[n - 4]) << n;
    EXPECT_EQ(c.triangle_free.extremal_count, triangle_free[n - 4]) << n;
    ASSERT_TRUE(c.general.has_value());
    EXPECT_EQ(c.general_consistent(), std::optional<bool>(true)) << n;
  }
}

TEST(GraphCensus, SmallOrders) {
  GraphCensus c3 = census_graphs_builtin(3, serial());
  EXPECT_EQ(c3.bipartite.extremal_count, 0u);
  EXPECT_EQ(c3.bipartite.min_imax, 0);
  EXPECT_EQ(c3.triangle_free.extremal_count, 0u);
  ASSERT_TRUE(c3.general);
  EXPECT_EQ(c3.general->min_imax, 3);  // only K3 is connected and twin-free
}

TEST(GraphCensus, QualifyingGraphsCountedAgainstBruteForce) {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::uint64_t expected = 0;
    for (const Graph& g : small_graphs(n, true)) expected += oracle::twin_free(g) ? 1 : 0;
    EXPECT_EQ(census_graphs_builtin(n, serial()).qualifying, expected) << n;
  }
}

TEST(GraphCensus, StreamMatchesBuiltIn) {
  for (std::size_t n = 5; n <= 7; ++n) {
    std::istringstream in(stream_of(small_graphs(n, true)));
    GraphCensus s = census_graphs_stream(in, n, serial(), true);
    GraphCensus b = census_graphs_builtin(n, serial());
    EXPECT_EQ(s.graphs_read, b.graphs_read);
    EXPECT_EQ(s.bipartite.witnesses, b.bipartite.witnesses);
    EXPECT_EQ(s.triangle_free.witnesses, b.triangle_free.witnesses);
    ASSERT_TRUE(s.general);
    EXPECT_EQ(s.general->extremal_count, b.general->extremal_count);
  }
}

TEST(GraphCensus, StreamWithoutGeneralRow) {
  std::vector<Graph> tf;
  for (const Graph& g : small_graphs(7, true))
    if (is_triangle_free(g)) tf.push_back(g.relabel(std::vector<std::size_t>{6, 5, 4, 3, 2, 1, 0}));
  std::istringstream in(stream_of(tf));
  GraphCensus s = census_graphs_stream(in, 7, serial());
  EXPECT_FALSE(s.general.has_value());
  EXPECT_FALSE(s.general_consistent().has_value());
  EXPECT_EQ(s.triangle_free.extremal_count, 5u);
  TriangleFreeProbe p = triangle_free_probe(s);
  EXPECT_TRUE(p.min_matches);
  EXPECT_EQ(p.extremal_non_bipartite, 1u);
}

TEST(GraphCensus, StreamErrorsReportLine) {
  std::istringstream wrong_order("D?{\nDQw\nEQzW\n");
  try {
    census_graphs_stream(wrong_order, 5, serial());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream bad("DQw\nD!!\n");
  try {
    census_graphs_stream(bad, 5, serial());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::vector<Graph> graphs{path_graph(4)};
  std::size_t i = 0;
  auto next = [&]() -> std::optional<Graph> { return i < graphs.size() ? std::optional<Graph>(graphs[i++]) : std::nullopt; };
  EXPECT_THROW(census_graphs(next, 5), PreconditionError);
}

TEST(ConnectedBound, HoldsUpToSeven) {
  for (std::size_t n = 2; n <= 7; ++n) {
    Thm1Report r = verify_thm1(n);
    EXPECT_TRUE(r.pass()) << n << " " << r.reason;
    EXPECT_GT(r.graphs_checked, 0u);
  }
  EXPECT_EQ(verify_thm1(2).equality_cases, 1u);  // K2
  EXPECT_EQ(verify_thm1(5).equality_cases, 1u);  // clique_subset_graph(3)
  EXPECT_EQ(verify_thm1(4).equality_cases, 0u);
}

TEST(ConnectedBound, SourceSkipsTwinsAndRecognisesEqualityCase) {
  std::mt19937_64 rng(2);
  Graph extremal = clique_subset_graph(4);
  std::vector<Graph> graphs{extremal.relabel(random_permutation(10, rng)), star_graph(9)};
  std::size_t i = 0;
  Thm1Report r = verify_thm1_source([&]() -> std::optional<Graph> {
    return i < graphs.size() ? std::optional<Graph>(graphs[i++]) : std::nullopt;
  }, 10);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.graphs_checked, 1u);
  EXPECT_EQ(r.equality_cases, 1u);
}

TEST(ForestBound, HoldsUpToTen) {
  for (std::size_t n = 2; n <= 10; ++n) {
    ForestReport r = verify_forest_bound(n);
    EXPECT_TRUE(r.pass()) << n;
    EXPECT_GE(r.min_imax, r.bound);
    EXPECT_GT(r.forests_checked, 0u);
    EXPECT_GT(r.extremal_count, 0u);
  }
  EXPECT_THROW(verify_forest_bound(1), PreconditionError);
  EXPECT_THROW(verify_forest_bound(15), CapError);
}

TEST(ForestBound, SmallCasesByBruteForce) {
  // Twin-free forests of order n from all graphs n <= 7.
  for (std::size_t n = 2; n <= 7; ++n) {
    std::uint64_t forests = 0;
    std::uint64_t best = ~std::uint64_t{0};
    for (const Graph& g : small_graphs(n, false)) {
      std::size_t comps = components(g).size();
      if (g.edge_count() + comps != n || !oracle::twin_free(g)) continue;
      ++forests;
      best = std::min<std::uint64_t>(best, oracle::count_mis(g));
    }
    ForestReport r = verify_forest_bound(n);
    EXPECT_EQ(r.forests_checked, forests) << n;
    EXPECT_EQ(r.min_imax, best) << n;
  }
}
