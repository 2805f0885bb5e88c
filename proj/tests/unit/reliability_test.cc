#include "opinion_miner/reliability.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"
#include "oracles/hits_oracle.h"
#include "test_support.h"

namespace opinion_miner {
namespace {

Triple triple(const std::string &doc, const std::string &feature,
              const std::string &opinion) {
  Triple t;
  t.doc_id = doc;
  t.feature = {feature};
  t.opinion = opinion;
  return t;
}

// Pair p0 occurs twice in d0 and once in d1; p1 once in each.
std::vector<Triple> two_by_two() {
  return {triple("d0", "p0", "o"), triple("d0", "p0", "o"),
          triple("d1", "p0", "o"), triple("d0", "p1", "o"),
          triple("d1", "p1", "o")};
}

TEST(BuildGraph, CountsExtractionsAsWeights) {
  std::vector<Triple> t = {triple("d2", "Zoom", "Sharp"),
                           triple("d1", "zoom", "sharp"),
                           triple("d1", "zoom", "sharp"),
                           triple("d1", "lens", "fast")};
  BipartiteGraph g = build_graph(t, "camera");
  EXPECT_EQ(g.category, "camera");
  ASSERT_EQ(g.pairs.size(), 2u);
  EXPECT_EQ(g.pairs[0].feature, "lens");
  EXPECT_EQ(g.pairs[1].opinion, "sharp");
  EXPECT_EQ(g.documents, (std::vector<std::string>{"d1", "d2"}));
  ASSERT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.edges[1].pair, 1);
  EXPECT_EQ(g.edges[1].document, 0);
  EXPECT_EQ(g.edges[1].weight, 2);
  EXPECT_THROW(build_graph({}, "camera"), InvalidArgument);
}

TEST(Hits, SingleEdgeConvergesImmediately) {
  std::vector<Triple> t = {triple("d", "zoom", "sharp")};
  HitsResult r = run_hits(build_graph(t, "c"));
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_EQ(r.hubs, std::vector<double>{1.0});
  EXPECT_EQ(r.authorities, std::vector<double>{1.0});
}

TEST(Hits, TwoByTwoHubRatioIsGoldenSectionConjugate) {
  HitsResult r = run_hits(build_graph(two_by_two(), "c"));
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.iterations, 200);
  EXPECT_EQ(r.hubs[0], 1.0);
  EXPECT_NEAR(r.hubs[1] / r.hubs[0], (std::sqrt(5.0) - 1.0) / 2.0, 1e-6);
}

TEST(Hits, MatchesPrincipalEigenvectorOnRandomGraphs) {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 100; ++trial) {
    const int pairs = 1 + static_cast<int>(rng() % 10);
    const int docs = 1 + static_cast<int>(rng() % 10);
    auto triples = oracle::random_connected_triples(rng, pairs, docs);
    BipartiteGraph g = build_graph(triples, "c");
    ASSERT_EQ(static_cast<int>(g.pairs.size()), pairs);
    HitsResult r = run_hits(g);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(r.iterations, 200) << "ratio " << oracle::eigen_ratio(g);
    const Eigen::VectorXd direction = oracle::principal_hub_direction(g);
    EXPECT_GE(oracle::cosine(r.hubs, direction), 1.0 - 1e-6) << "trial " << trial;
    EXPECT_GE(oracle::cosine(r.hubs, oracle::power_iteration_hubs(g)),
              1.0 - 1e-6);
    double top = 0;
    for (double h : r.hubs) {
      EXPECT_GE(h, 0.0);
      top = std::max(top, h);
    }
    EXPECT_EQ(top, 1.0);
  }
}

TEST(Hits, DominatingPairNeverScoresLower) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int docs = 2 + static_cast<int>(rng() % 6);
    auto triples = oracle::random_connected_triples(rng, 4, docs);
    // "strong" occurs at least as often as "weak" in every document.
    for (int d = 0; d < docs; ++d) {
      const int weak = static_cast<int>(rng() % 3);
      const int strong = weak + static_cast<int>(rng() % 2);
      for (int k = 0; k < weak; ++k) {
        triples.push_back(triple("d" + std::to_string(d), "weak", "x"));
      }
      for (int k = 0; k < strong; ++k) {
        triples.push_back(triple("d" + std::to_string(d), "strong", "x"));
      }
    }
    triples.push_back(triple("d0", "strong", "x"));
    BipartiteGraph g = build_graph(triples, "c");
    int strong = -1, weak = -1;
    for (size_t i = 0; i < g.pairs.size(); ++i) {
      if (g.pairs[i].feature == "strong") strong = static_cast<int>(i);
      if (g.pairs[i].feature == "weak") weak = static_cast<int>(i);
    }
    if (weak < 0) continue;
    HitsOptions options;
    options.observer = [&](int iteration, std::span<const double> hubs,
                           std::span<const double>) {
      EXPECT_GE(hubs[strong], hubs[weak]) << "iteration " << iteration;
    };
    run_hits(g, options);
  }
}

TEST(Hits, WeightScalingLeavesScoresUnchanged) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto triples = oracle::random_connected_triples(rng, 5, 4);
    auto tripled = triples;
    for (int k = 0; k < 2; ++k) tripled.insert(tripled.end(), triples.begin(),
                                               triples.end());
    HitsOptions options;
    options.eps = 1e-12;
    HitsResult a = run_hits(build_graph(triples, "c"), options);
    HitsResult b = run_hits(build_graph(tripled, "c"), options);
    ASSERT_EQ(a.hubs.size(), b.hubs.size());
    for (size_t i = 0; i < a.hubs.size(); ++i) {
      EXPECT_NEAR(a.hubs[i], b.hubs[i], 1e-9);
    }
  }
}

TEST(Hits, StopsAtMaxIterWithoutConverging) {
  HitsOptions options;
  options.eps = 1e-300;
  options.max_iter = 3;
  HitsResult r = run_hits(build_graph(two_by_two(), "c"), options);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 3);
  options.max_iter = 0;
  EXPECT_THROW(run_hits(build_graph(two_by_two(), "c"), options),
               InvalidArgument);
  options.max_iter = 10;
  options.eps = 0;
  EXPECT_THROW(run_hits(build_graph(two_by_two(), "c"), options),
               InvalidArgument);
}

TEST(Reliability, MinMaxExample) {
  std::vector<double> hubs = {10, 4, 1};
  auto r = reliability_scores(hubs);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], 1.0);
  EXPECT_NEAR(r[1], 1.0 / 3.0, 1e-15);
  EXPECT_EQ(r[2], 0.0);
}

TEST(Reliability, DegenerateInputsAreAllOne) {
  EXPECT_EQ(reliability_scores(std::vector<double>{0.4, 0.4, 0.4}),
            (std::vector<double>{1.0, 1.0, 1.0}));
  EXPECT_EQ(reliability_scores(std::vector<double>{0.7}),
            std::vector<double>{1.0});
  EXPECT_TRUE(reliability_scores(std::vector<double>{}).empty());
}

TEST(Reliability, InvariantUnderPositiveScaling) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> h(2 + rng() % 10);
    for (double &x : h) x = unit(rng);
    const double c = 0.01 + 100 * unit(rng);
    std::vector<double> scaled = h;
    for (double &x : scaled) x *= c;
    auto a = reliability_scores(h);
    auto b = reliability_scores(scaled);
    for (size_t i = 0; i < h.size(); ++i) {
      EXPECT_NEAR(a[i], b[i], 1e-12);
      EXPECT_GE(a[i], 0.0);
      EXPECT_LE(a[i], 1.0);
    }
    EXPECT_EQ(*std::max_element(a.begin(), a.end()), 1.0);
    EXPECT_EQ(*std::min_element(a.begin(), a.end()), 0.0);
  }
}

TEST(Filter, ThresholdSemantics) {
  std::vector<PairScore> p = {{"c", "a", "x", 1, 1, 1.0},
                              {"c", "b", "x", 1, 0.5, 0.05},
                              {"c", "d", "x", 1, 0.1, 0.0}};
  FilterResult at_zero = filter_noisy(p, 0.0);
  EXPECT_EQ(at_zero.kept.size(), 3u);
  FilterResult r = filter_noisy(p, 0.05);
  ASSERT_EQ(r.kept.size(), 2u);
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0].feature, "d");
  EXPECT_EQ(filter_noisy(p, 1.0).kept.size(), 1u);
  EXPECT_THROW(filter_noisy(p, -0.1), InvalidArgument);
  EXPECT_THROW(filter_noisy(p, 1.1), InvalidArgument);
  EXPECT_THROW(filter_noisy(p, std::nan("")), InvalidArgument);
}

TEST(ScoreCategory, NoiseFixtureDropsSingleDocumentPairs) {
  auto triples = parse_triples(
      read_file(testing::fixture("noise/triples.tsv")), "noise");
  ScoreTable table = score_category(triples, "camera");
  EXPECT_TRUE(table.converged);
  FilterResult r = filter_noisy(table.pairs, 0.05);
  std::set<std::string> removed;
  for (const PairScore &p : r.removed) removed.insert(p.feature);
  EXPECT_EQ(removed, (std::set<std::string>{"box", "manual"}));
  for (const PairScore &p : r.kept) EXPECT_GE(p.reliability, 0.05) << p.feature;
  EXPECT_EQ(r.kept.size(), 4u);
  // Sorted by reliability, best first.
  for (size_t i = 1; i < table.pairs.size(); ++i) {
    EXPECT_GE(table.pairs[i - 1].reliability, table.pairs[i].reliability);
  }
  EXPECT_EQ(table.pairs.front().reliability, 1.0);
  EXPECT_EQ(table.documents.size(), 7u);
}

TEST(ScoreExport, PairScoresRoundTrip) {
  auto triples = parse_triples(
      read_file(testing::fixture("noise/triples.tsv")), "noise");
  ScoreTable table = score_category(triples, "camera");
  const std::string text = format_pair_scores(table.pairs);
  EXPECT_EQ(format_pair_scores(parse_pair_scores(text, "p")), text);
  EXPECT_THROW(parse_pair_scores("a\tb\n", "p"), ParseError);
}

}  // namespace
}  // namespace opinion_miner
