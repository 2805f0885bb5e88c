#include "opinion_miner/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

namespace {

constexpr double kDensityFloor = 1e-300;
constexpr double kTieTolerance = 1e-12;

double log_gaussian(double x, const GaussianParams &g) {
  double d = x - g.mean;
  double log_density = -0.5 * std::log(2.0 * std::numbers::pi * g.variance) -
                       d * d / (2.0 * g.variance);
  return std::max(log_density, std::log(kDensityFloor));
}

int table_slot(Attribute attribute) {
  for (size_t i = 0; i < kCategoricalAttributes.size(); ++i) {
    if (kCategoricalAttributes[i] == attribute) return static_cast<int>(i);
  }
  throw InvalidArgument("not a categorical attribute: " +
                        std::string(attribute_name(attribute)));
}

}  // namespace

int domain_size(Attribute attribute) {
  switch (attribute) {
    case Attribute::kPosition: return 3;
    case Attribute::kPos: return kPosClassCount;
    case Attribute::kSeed: return kSeedCount;
    case Attribute::kNegation: return 2;
    case Attribute::kModifier: return 2;
    case Attribute::kTfIdf: break;
  }
  throw InvalidArgument("tf_idf has no finite domain");
}

int domain_index(const FeatureVector &v, Attribute attribute) {
  switch (attribute) {
    case Attribute::kPosition: return v.position + 1;
    case Attribute::kPos: return static_cast<int>(v.pos_class);
    case Attribute::kSeed: return static_cast<int>(v.seed);
    case Attribute::kNegation: return v.negation ? 1 : 0;
    case Attribute::kModifier: return v.modifier ? 1 : 0;
    case Attribute::kTfIdf: break;
  }
  throw InvalidArgument("tf_idf has no finite domain");
}

std::string domain_symbol(Attribute attribute, int index) {
  switch (attribute) {
    case Attribute::kPosition: return std::to_string(index - 1);
    case Attribute::kPos:
      return std::string(1, pos_class_symbol(static_cast<PosClass>(index)));
    case Attribute::kSeed:
      return std::string(seed_symbol(static_cast<Seed>(index)));
    case Attribute::kNegation:
    case Attribute::kModifier: return std::to_string(index);
    case Attribute::kTfIdf: break;
  }
  throw InvalidArgument("tf_idf has no finite domain");
}

const CategoricalTable &NBModel::table(Attribute attribute) const {
  return tables[table_slot(attribute)];
}

NBModel train(const Dataset &dataset, const TrainOptions &options) {
  if (!(options.variance_floor > 0.0)) {
    throw InvalidArgument("variance floor must be positive");
  }
  NBModel model;
  model.variance_floor = options.variance_floor;
  model.tie_label = options.tie_label;
  for (size_t t = 0; t < kCategoricalAttributes.size(); ++t) {
    CategoricalTable &table = model.tables[t];
    table.attribute = kCategoricalAttributes[t];
    for (int c = 0; c < 2; ++c) {
      table.counts[c].assign(domain_size(table.attribute), 0);
    }
  }

  std::array<double, 2> sum{};
  for (const FeatureVector &v : dataset.vectors) {
    if (!v.class_label) {
      throw InvalidArgument("training data contains an unlabeled vector");
    }
    int c = class_index(*v.class_label);
    ++model.support[c];
    sum[c] += v.tf_idf;
    for (CategoricalTable &table : model.tables) {
      ++table.counts[c][domain_index(v, table.attribute)];
    }
  }
  for (int c = 0; c < 2; ++c) {
    if (model.support[c] == 0) {
      throw InvalidArgument(std::string("training data has no instance of "
                                        "class ") +
                            (c == 0 ? "S" : "O"));
    }
  }

  const int n = model.support[0] + model.support[1];
  std::array<double, 2> squared{};
  for (int c = 0; c < 2; ++c) {
    model.tf_idf[c].mean = sum[c] / model.support[c];
  }
  for (const FeatureVector &v : dataset.vectors) {
    int c = class_index(*v.class_label);
    double d = v.tf_idf - model.tf_idf[c].mean;
    squared[c] += d * d;
  }
  for (int c = 0; c < 2; ++c) {
    model.priors[c] = (model.support[c] + 1.0) / (n + 2.0);
    model.tf_idf[c].variance =
        std::max(squared[c] / model.support[c], options.variance_floor);
    for (CategoricalTable &table : model.tables) {
      const int k = domain_size(table.attribute);
      table.probabilities[c].resize(k);
      for (int v = 0; v < k; ++v) {
        table.probabilities[c][v] =
            (table.counts[c][v] + 1.0) / (model.support[c] + k);
      }
    }
  }
  return model;
}

TokenPrediction predict_token(const NBModel &model, const FeatureVector &fv) {
  std::array<double, 2> log_score{};
  for (int c = 0; c < 2; ++c) {
    log_score[c] = std::log(model.priors[c]) + log_gaussian(fv.tf_idf,
                                                            model.tf_idf[c]);
    for (const CategoricalTable &table : model.tables) {
      log_score[c] +=
          std::log(table.probabilities[c][domain_index(fv, table.attribute)]);
    }
  }
  const double top = std::max(log_score[0], log_score[1]);
  const double s = std::exp(log_score[0] - top);
  const double o = std::exp(log_score[1] - top);
  TokenPrediction p;
  p.p_subjective = s / (s + o);
  const double p_objective = o / (s + o);
  if (std::fabs(p.p_subjective - p_objective) < kTieTolerance) {
    p.label = model.tie_label;
  } else {
    p.label = p.p_subjective > p_objective ? Label::kSubjective
                                           : Label::kObjective;
  }
  return p;
}

SentenceVerdict aggregate_sentence(std::vector<TokenPrediction> tokens) {
  if (tokens.empty()) {
    throw InvalidArgument("cannot classify a sentence without tokens");
  }
  SentenceVerdict verdict;
  double all_objective = 1.0;
  for (const TokenPrediction &t : tokens) {
    if (t.label == Label::kSubjective) verdict.label = Label::kSubjective;
    all_objective *= 1.0 - t.p_subjective;
  }
  verdict.subjective_probability = 1.0 - all_objective;
  verdict.tokens = std::move(tokens);
  return verdict;
}

SentenceVerdict classify_sentence(const TokenClassifier &classifier,
                                  std::span<const FeatureVector> tokens) {
  std::vector<TokenPrediction> predictions;
  predictions.reserve(tokens.size());
  for (const FeatureVector &fv : tokens) {
    predictions.push_back(classifier.predict(fv));
  }
  return aggregate_sentence(std::move(predictions));
}

SentenceVerdict classify_sentence(const NBModel &model,
                                  std::span<const FeatureVector> tokens) {
  std::vector<TokenPrediction> predictions;
  predictions.reserve(tokens.size());
  for (const FeatureVector &fv : tokens) {
    predictions.push_back(predict_token(model, fv));
  }
  return aggregate_sentence(std::move(predictions));
}

// Model file -----------------------------------------------------------------

namespace {

constexpr std::string_view kModelMagic = "opinion_miner_nb_model";
constexpr int kModelVersion = 1;
constexpr std::array<std::string_view, 2> kClassNames = {"S", "O"};

int parse_class(std::string_view s, const std::string &source, int line) {
  if (s == "S") return 0;
  if (s == "O") return 1;
  throw ParseError(source, line, "bad class '" + std::string(s) + "'");
}

}  // namespace

std::string format_model(const NBModel &model) {
  std::ostringstream out;
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "variance_floor " << format_double(model.variance_floor) << '\n';
  out << "tie_label " << label_symbol(model.tie_label) << '\n';
  for (int c = 0; c < 2; ++c) {
    out << "support " << kClassNames[c] << ' ' << model.support[c] << '\n';
  }
  for (int c = 0; c < 2; ++c) {
    out << "prior " << kClassNames[c] << ' ' << format_double(model.priors[c])
        << '\n';
  }
  for (int c = 0; c < 2; ++c) {
    out << "gaussian tf_idf " << kClassNames[c] << ' '
        << format_double(model.tf_idf[c].mean) << ' '
        << format_double(model.tf_idf[c].variance) << '\n';
  }
  for (const CategoricalTable &table : model.tables) {
    for (int c = 0; c < 2; ++c) {
      for (int v = 0; v < domain_size(table.attribute); ++v) {
        out << "table " << attribute_name(table.attribute) << ' '
            << kClassNames[c] << ' ' << domain_symbol(table.attribute, v)
            << ' ' << table.counts[c][v] << ' '
            << format_double(table.probabilities[c][v]) << '\n';
      }
    }
  }
  return out.str();
}

NBModel parse_model(std::string_view content, const std::string &source) {
  NBModel model;
  for (size_t t = 0; t < kCategoricalAttributes.size(); ++t) {
    model.tables[t].attribute = kCategoricalAttributes[t];
    for (int c = 0; c < 2; ++c) {
      model.tables[t].counts[c].assign(domain_size(kCategoricalAttributes[t]),
                                       -1);
      model.tables[t].probabilities[c].assign(
          domain_size(kCategoricalAttributes[t]), -1.0);
    }
  }
  std::array<bool, 2> have_support{}, have_prior{}, have_gauss{};
  bool have_header = false;
  int line_no = 0;
  try {
    for (std::string_view line : split(content, '\n')) {
      ++line_no;
      if (trim(line).empty() || trim(line).front() == '#') continue;
      auto f = split_whitespace(line);
      if (!have_header) {
        if (f.size() != 2 || f[0] != kModelMagic) {
          throw ParseError(source, line_no, "not a model file");
        }
        if (parse_int(f[1]) != kModelVersion) {
          throw ParseError(source, line_no, "unsupported model version " +
                                                std::string(f[1]));
        }
        have_header = true;
        continue;
      }
      if (f[0] == "variance_floor" && f.size() == 2) {
        model.variance_floor = parse_double(f[1]);
      } else if (f[0] == "tie_label" && f.size() == 2) {
        model.tie_label = parse_class(f[1], source, line_no) == 0
                              ? Label::kSubjective
                              : Label::kObjective;
      } else if (f[0] == "support" && f.size() == 3) {
        int c = parse_class(f[1], source, line_no);
        model.support[c] = static_cast<int>(parse_int(f[2]));
        have_support[c] = true;
      } else if (f[0] == "prior" && f.size() == 3) {
        int c = parse_class(f[1], source, line_no);
        model.priors[c] = parse_double(f[2]);
        have_prior[c] = true;
      } else if (f[0] == "gaussian" && f.size() == 5 && f[1] == "tf_idf") {
        int c = parse_class(f[2], source, line_no);
        model.tf_idf[c] = {parse_double(f[3]), parse_double(f[4])};
        have_gauss[c] = true;
      } else if (f[0] == "table" && f.size() == 6) {
        auto slot = std::find_if(
            model.tables.begin(), model.tables.end(),
            [&](const CategoricalTable &t) {
              return attribute_name(t.attribute) == f[1];
            });
        if (slot == model.tables.end()) {
          throw ParseError(source, line_no, "unknown attribute");
        }
        int c = parse_class(f[2], source, line_no);
        int v = -1;
        for (int i = 0; i < domain_size(slot->attribute); ++i) {
          if (domain_symbol(slot->attribute, i) == f[3]) v = i;
        }
        if (v < 0) throw ParseError(source, line_no, "value out of domain");
        slot->counts[c][v] = static_cast<int>(parse_int(f[4]));
        slot->probabilities[c][v] = parse_double(f[5]);
      } else {
        throw ParseError(source, line_no, "unrecognized model line");
      }
    }
  } catch (const InvalidArgument &e) {
    throw ParseError(source, line_no, e.what());
  }
  if (!have_header) throw ParseError(source, 0, "empty model file");
  for (int c = 0; c < 2; ++c) {
    if (!have_support[c] || !have_prior[c] || !have_gauss[c]) {
      throw ParseError(source, 0, "incomplete model");
    }
    if (!(model.tf_idf[c].variance > 0.0)) {
      throw ParseError(source, 0, "non-positive variance");
    }
    for (const CategoricalTable &t : model.tables) {
      double row = 0.0;
      for (double p : t.probabilities[c]) {
        if (p < 0.0) throw ParseError(source, 0, "incomplete table");
        row += p;
      }
      if (std::fabs(row - 1.0) > 1e-9) {
        throw ParseError(source, 0, "table row does not sum to 1");
      }
    }
  }
  if (std::fabs(model.priors[0] + model.priors[1] - 1.0) > 1e-9) {
    throw ParseError(source, 0, "priors do not sum to 1");
  }
  return model;
}

std::vector<std::vector<size_t>> kfold_indices(size_t n, int k,
                                               std::uint64_t seed) {
  if (k < 2 || static_cast<size_t>(k) > n) {
    throw InvalidArgument("k-fold needs 2 <= k <= n");
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<std::vector<size_t>> folds(k);
  for (int f = 0; f < k; ++f) {
    size_t begin = f * n / k;
    size_t end = (f + 1) * n / k;
    folds[f].assign(order.begin() + begin, order.begin() + end);
    std::sort(folds[f].begin(), folds[f].end());
  }
  return folds;
}

std::pair<Dataset, Dataset> train_test_split(const Dataset &dataset,
                                             double test_fraction,
                                             std::uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0)) {
    throw InvalidArgument("test fraction must lie in [0, 1]");
  }
  const size_t n = dataset.vectors.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  const size_t test_n = static_cast<size_t>(std::llround(test_fraction * n));
  std::vector<bool> in_test(n, false);
  for (size_t i = 0; i < test_n; ++i) in_test[order[i]] = true;
  std::pair<Dataset, Dataset> out;
  for (size_t i = 0; i < n; ++i) {
    (in_test[i] ? out.second : out.first).vectors.push_back(dataset.vectors[i]);
  }
  return out;
}

}  // namespace opinion_miner
