#ifndef OPINION_MINER_FEATURES_H_
#define OPINION_MINER_FEATURES_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opinion_miner/corpus.h"
#include "opinion_miner/lexicons.h"

namespace opinion_miner {

// Coarse part of speech: adjective, adverb, noun, verb, anything else.
enum class PosClass { kAdjective, kAdverb, kNoun, kVerb, kOther };
inline constexpr int kPosClassCount = 5;

// Seed-lexicon membership. kNone is a value of its own, not "negative".
enum class Seed { kNegative = 0, kPositive = 1, kNone = 2 };
inline constexpr int kSeedCount = 3;

char pos_class_symbol(PosClass pos);  // A D N V E
std::optional<PosClass> parse_pos_class(std::string_view symbol);
PosClass pos_class_of(std::string_view penn_tag);

std::string_view seed_symbol(Seed seed);  // "1" "0" "none"
std::optional<Seed> parse_seed(std::string_view symbol);

// The six attributes of one unigram occurrence, plus its class when known.
struct FeatureVector {
  double tf_idf = 0.0;
  int position = 0;  // -1 first word, +1 last word, 0 otherwise
  PosClass pos_class = PosClass::kOther;
  Seed seed = Seed::kNone;
  bool negation = false;
  bool modifier = false;
  std::optional<Label> class_label;

  bool operator==(const FeatureVector &) const = default;
};

// Term counts of one document.
struct TermCounts {
  int word_count = 0;
  std::map<std::string, int, std::less<>> counts;

  static TermCounts of(const ReviewDocument &doc);
};

// Document frequencies over a corpus. Built once, read-only afterwards.
class CorpusStats {
 public:
  CorpusStats() = default;
  explicit CorpusStats(const Corpus &corpus);
  // For hand-built fixtures: C and the N_f table directly.
  CorpusStats(int document_count,
              std::map<std::string, int, std::less<>> document_frequency);

  int document_count() const { return document_count_; }
  int document_frequency(std::string_view unigram) const;
  // Cached term counts for corpus documents (nullptr for unknown doc_ids).
  const TermCounts *terms(std::string_view doc_id) const;

 private:
  int document_count_ = 0;
  std::map<std::string, int, std::less<>> document_frequency_;
  std::map<std::string, TermCounts, std::less<>> terms_;
};

// (f / s) * -log2(N_f / C) for a unigram occurring in the document.
// Throws InvalidArgument when f == 0, s == 0, or N_f is not in [1, C].
double compute_tf_idf(std::string_view unigram, const TermCounts &doc,
                      const CorpusStats &stats);
double compute_tf_idf(std::string_view unigram, const ReviewDocument &doc,
                      const CorpusStats &stats);

// Position counts word tokens only; punctuation tokens are ignored.
FeatureVector build_feature_vector(const Token &token,
                                   const Sentence &sentence,
                                   const ReviewDocument &doc,
                                   const CorpusStats &stats,
                                   const Lexicons &lexicons);

// True for tokens that never become feature vectors: stop words and
// tokens without letters or digits.
bool is_filtered_token(const Token &token, const Lexicons &lexicons);

// Feature vectors of one sentence, keyed by token index.
struct SentenceFeatures {
  std::string doc_id;
  int sentence_index = 0;
  std::vector<int> token_indices;
  std::vector<FeatureVector> vectors;
};

std::vector<SentenceFeatures> featurize_document(const ReviewDocument &doc,
                                                 const CorpusStats &stats,
                                                 const Lexicons &lexicons);

struct Dataset {
  std::vector<FeatureVector> vectors;

  bool labeled() const;  // every vector carries a class
  int support(Label label) const;
};

enum class DatasetMode {
  kLabeled,  // every document must carry a label
  kAny,      // labels copied where present
};

Dataset build_dataset(const Corpus &corpus, const Lexicons &lexicons,
                      DatasetMode mode);

// Comma-separated export: header "tf_idf,position,pos,seed,negation,
// modifier,class" then one row per vector; unlabeled rows have class "?".
std::string format_dataset_csv(const Dataset &dataset);
Dataset parse_dataset_csv(std::string_view content, const std::string &source);

enum class Attribute { kTfIdf, kPosition, kPos, kSeed, kNegation, kModifier };
inline constexpr std::array<Attribute, 6> kAllAttributes = {
    Attribute::kTfIdf,    Attribute::kPosition, Attribute::kPos,
    Attribute::kSeed,     Attribute::kNegation, Attribute::kModifier};
std::string_view attribute_name(Attribute attribute);

// Equal-frequency discretization: bin index per value, ties share a bin.
std::vector<int> equal_frequency_bins(std::span<const double> values,
                                      int bins);

// Shannon entropy in bits of a count histogram.
double entropy_bits(std::span<const int> counts);

// H(class) - H(class | attribute) in bits. tf_idf is discretized into
// `tf_idf_bins` equal-frequency bins first. Requires a labeled dataset with
// at least two vectors.
double information_gain(const Dataset &dataset, Attribute attribute,
                        int tf_idf_bins = 10);

// All six attributes, highest gain first (ties by declaration order).
std::vector<std::pair<Attribute, double>> rank_attributes(
    const Dataset &dataset, int tf_idf_bins = 10);

}  // namespace opinion_miner

#endif  // OPINION_MINER_FEATURES_H_
