#ifndef OPINION_MINER_NAIVE_BAYES_H_
#define OPINION_MINER_NAIVE_BAYES_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opinion_miner/features.h"

namespace opinion_miner {

// Index of a class in the model's per-class arrays: S = 0, O = 1.
inline constexpr int class_index(Label label) {
  return label == Label::kSubjective ? 0 : 1;
}

inline constexpr std::array<Attribute, 5> kCategoricalAttributes = {
    Attribute::kPosition, Attribute::kPos, Attribute::kSeed,
    Attribute::kNegation, Attribute::kModifier};

// Number of values an attribute can take (categorical attributes only).
int domain_size(Attribute attribute);
// 0-based index of the vector's value within the attribute's domain.
int domain_index(const FeatureVector &v, Attribute attribute);
std::string domain_symbol(Attribute attribute, int index);

struct GaussianParams {
  double mean = 0.0;
  double variance = 1.0;
};

struct CategoricalTable {
  Attribute attribute = Attribute::kPos;
  std::array<std::vector<int>, 2> counts;            // [class][value]
  std::array<std::vector<double>, 2> probabilities;  // add-one smoothed
};

struct NBModel {
  std::array<int, 2> support{};
  std::array<double, 2> priors{};  // (count + 1) / (n + 2)
  std::array<GaussianParams, 2> tf_idf;
  std::array<CategoricalTable, 5> tables;  // kCategoricalAttributes order
  double variance_floor = 1e-9;
  Label tie_label = Label::kObjective;

  const CategoricalTable &table(Attribute attribute) const;
};

struct TrainOptions {
  double variance_floor = 1e-9;
  // Class returned when the posteriors are within 1e-12 of each other.
  Label tie_label = Label::kObjective;
};

// Throws InvalidArgument on unlabeled vectors or when a class is missing.
NBModel train(const Dataset &dataset, const TrainOptions &options = {});

struct TokenPrediction {
  Label label = Label::kObjective;
  double p_subjective = 0.0;  // P(O | fv) = 1 - p_subjective
};

// Posterior in log space: prior x Gaussian(tf_idf) x categorical
// likelihoods, normalized over {S, O}. Log densities are floored at
// log(1e-300).
TokenPrediction predict_token(const NBModel &model, const FeatureVector &fv);

// Anything that labels single tokens can drive sentence classification.
class TokenClassifier {
 public:
  virtual ~TokenClassifier() = default;
  virtual TokenPrediction predict(const FeatureVector &fv) const = 0;
};

class NaiveBayesClassifier : public TokenClassifier {
 public:
  explicit NaiveBayesClassifier(NBModel model) : model_(std::move(model)) {}
  TokenPrediction predict(const FeatureVector &fv) const override {
    return predict_token(model_, fv);
  }
  const NBModel &model() const { return model_; }

 private:
  NBModel model_;
};

struct SentenceVerdict {
  Label label = Label::kObjective;
  // Noisy-OR of token posteriors; informational, never overrides `label`.
  double subjective_probability = 0.0;
  std::vector<TokenPrediction> tokens;
};

// A sentence is subjective iff any of its tokens is predicted subjective.
// Throws InvalidArgument on an empty token list.
SentenceVerdict aggregate_sentence(std::vector<TokenPrediction> tokens);
SentenceVerdict classify_sentence(const TokenClassifier &classifier,
                                  std::span<const FeatureVector> tokens);
SentenceVerdict classify_sentence(const NBModel &model,
                                  std::span<const FeatureVector> tokens);

// Versioned plain-text model file; doubles are written so they read back
// bit-identical.
std::string format_model(const NBModel &model);
NBModel parse_model(std::string_view content, const std::string &source);

// Shuffled k-fold partition of [0, n). Deterministic for a given seed.
std::vector<std::vector<size_t>> kfold_indices(size_t n, int k,
                                               std::uint64_t seed);

// Shuffled split; the second dataset holds round(test_fraction * n) rows.
std::pair<Dataset, Dataset> train_test_split(const Dataset &dataset,
                                             double test_fraction,
                                             std::uint64_t seed);

}  // namespace opinion_miner

#endif  // OPINION_MINER_NAIVE_BAYES_H_
