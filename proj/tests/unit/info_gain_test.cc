#include <random>

#include <gtest/gtest.h>

#include "opinion_miner/error.h"
#include "opinion_miner/features.h"
#include "oracles/entropy_oracle.h"

namespace opinion_miner {
namespace {

FeatureVector random_vector(std::mt19937_64 &rng) {
  static const double kTfIdf[] = {0.0, 0.05, 0.1, 0.25, 0.4, 0.7};
  FeatureVector v;
  v.tf_idf = kTfIdf[rng() % 6];
  v.position = static_cast<int>(rng() % 3) - 1;
  v.pos_class = static_cast<PosClass>(rng() % kPosClassCount);
  v.seed = static_cast<Seed>(rng() % kSeedCount);
  v.negation = rng() % 2;
  v.modifier = rng() % 2;
  v.class_label = rng() % 2 ? Label::kSubjective : Label::kObjective;
  return v;
}

// Attribute values as doubles, so one oracle call covers every attribute.
double raw_value(const FeatureVector &v, Attribute a) {
  switch (a) {
    case Attribute::kTfIdf: return v.tf_idf;
    case Attribute::kPosition: return v.position;
    case Attribute::kPos: return static_cast<double>(v.pos_class);
    case Attribute::kSeed: return static_cast<double>(v.seed);
    case Attribute::kNegation: return v.negation;
    case Attribute::kModifier: return v.modifier;
  }
  return 0;
}

double oracle_gain(const Dataset &ds, Attribute a) {
  std::vector<std::pair<double, int>> rows;
  for (const FeatureVector &v : ds.vectors) {
    rows.emplace_back(raw_value(v, a), *v.class_label == Label::kSubjective);
  }
  return oracle::mutual_information_bits(rows);
}

std::vector<int> classes_of(const Dataset &ds) {
  std::vector<int> out;
  for (const FeatureVector &v : ds.vectors) {
    out.push_back(*v.class_label == Label::kSubjective);
  }
  return out;
}

// With at most ten instances every distinct tf_idf value gets its own bin,
// so grouping by raw value is the same partition.
TEST(InformationGain, MatchesMutualInformationOnSmallTables) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    Dataset ds;
    const int n = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) ds.vectors.push_back(random_vector(rng));
    const double h = oracle::class_entropy_bits(classes_of(ds));
    for (Attribute a : kAllAttributes) {
      const double ig = information_gain(ds, a);
      EXPECT_NEAR(ig, oracle_gain(ds, a), 1e-9) << attribute_name(a);
      EXPECT_GE(ig, 0.0);
      EXPECT_LE(ig, h + 1e-12);
    }
  }
}

TEST(InformationGain, PerfectPredictorGainsClassEntropy) {
  Dataset ds;
  for (int i = 0; i < 8; ++i) {
    FeatureVector v;
    v.modifier = i < 3;
    v.class_label = i < 3 ? Label::kSubjective : Label::kObjective;
    ds.vectors.push_back(v);
  }
  const double h = oracle::class_entropy_bits(classes_of(ds));
  EXPECT_NEAR(information_gain(ds, Attribute::kModifier), h, 1e-12);
  // A constant attribute carries nothing.
  EXPECT_EQ(information_gain(ds, Attribute::kNegation), 0.0);
}

TEST(InformationGain, IndependentAttributeGainsNothing) {
  Dataset ds;
  // Every (negation, class) combination appears twice.
  for (int i = 0; i < 8; ++i) {
    FeatureVector v;
    v.negation = i % 2;
    v.class_label = (i / 2) % 2 ? Label::kSubjective : Label::kObjective;
    ds.vectors.push_back(v);
  }
  EXPECT_NEAR(information_gain(ds, Attribute::kNegation), 0.0, 1e-12);
  EXPECT_NEAR(oracle_gain(ds, Attribute::kNegation), 0.0, 1e-12);
}

TEST(InformationGain, Preconditions) {
  Dataset one;
  one.vectors.push_back(FeatureVector{});
  one.vectors[0].class_label = Label::kSubjective;
  EXPECT_THROW(information_gain(one, Attribute::kPos), InvalidArgument);
  Dataset unlabeled;
  unlabeled.vectors.resize(3);
  EXPECT_THROW(information_gain(unlabeled, Attribute::kPos), InvalidArgument);
}

TEST(InformationGain, RankingIsSortedAndComplete) {
  std::mt19937_64 rng(9);
  Dataset ds;
  for (int i = 0; i < 200; ++i) ds.vectors.push_back(random_vector(rng));
  auto ranked = rank_attributes(ds);
  ASSERT_EQ(ranked.size(), kAllAttributes.size());
  for (size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].second, ranked[i].second);
  }
}

TEST(EqualFrequencyBins, TiesShareABin) {
  std::vector<double> v = {0.3, 0.1, 0.1, 0.1, 0.2, 0.5};
  auto bins = equal_frequency_bins(v, 3);
  EXPECT_EQ(bins[1], bins[2]);
  EXPECT_EQ(bins[2], bins[3]);
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[i] < v[j]) EXPECT_LE(bins[i], bins[j]);
      if (v[i] == v[j]) EXPECT_EQ(bins[i], bins[j]);
    }
  }
}

TEST(EqualFrequencyBins, DistinctValuesSplitEvenly) {
  std::vector<double> v;
  for (int i = 0; i < 20; ++i) v.push_back(i * 0.01);
  auto bins = equal_frequency_bins(v, 10);
  std::map<int, int> per_bin;
  for (int b : bins) ++per_bin[b];
  EXPECT_EQ(per_bin.size(), 10u);
  for (const auto &[b, n] : per_bin) EXPECT_EQ(n, 2) << b;
  EXPECT_THROW(equal_frequency_bins(v, 0), InvalidArgument);
}

TEST(Entropy, KnownValues) {
  EXPECT_DOUBLE_EQ(entropy_bits(std::vector<int>{1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(entropy_bits(std::vector<int>{4, 0}), 0.0);
  EXPECT_DOUBLE_EQ(entropy_bits(std::vector<int>{0, 0}), 0.0);
  EXPECT_NEAR(entropy_bits(std::vector<int>{1, 3}), 0.8112781244591328, 1e-15);
}

}  // namespace
}  // namespace opinion_miner
