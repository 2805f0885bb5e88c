#include "opinion_miner/features.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

char pos_class_symbol(PosClass pos) {
  switch (pos) {
    case PosClass::kAdjective: return 'A';
    case PosClass::kAdverb: return 'D';
    case PosClass::kNoun: return 'N';
    case PosClass::kVerb: return 'V';
    case PosClass::kOther: return 'E';
  }
  return 'E';
}

std::optional<PosClass> parse_pos_class(std::string_view symbol) {
  if (symbol == "A") return PosClass::kAdjective;
  if (symbol == "D") return PosClass::kAdverb;
  if (symbol == "N") return PosClass::kNoun;
  if (symbol == "V") return PosClass::kVerb;
  if (symbol == "E") return PosClass::kOther;
  return std::nullopt;
}

PosClass pos_class_of(std::string_view tag) {
  if (is_adjective(tag)) return PosClass::kAdjective;
  if (is_adverb(tag)) return PosClass::kAdverb;
  if (is_noun(tag)) return PosClass::kNoun;
  if (is_verb(tag)) return PosClass::kVerb;
  return PosClass::kOther;
}

std::string_view seed_symbol(Seed seed) {
  switch (seed) {
    case Seed::kPositive: return "1";
    case Seed::kNegative: return "0";
    case Seed::kNone: return "none";
  }
  return "none";
}

std::optional<Seed> parse_seed(std::string_view symbol) {
  if (symbol == "1") return Seed::kPositive;
  if (symbol == "0") return Seed::kNegative;
  if (symbol == "none") return Seed::kNone;
  return std::nullopt;
}

TermCounts TermCounts::of(const ReviewDocument &doc) {
  TermCounts t;
  for (const Sentence &s : doc.sentences) {
    for (const Token &tok : s.tokens) {
      ++t.counts[tok.normalized];
      ++t.word_count;
    }
  }
  return t;
}

CorpusStats::CorpusStats(const Corpus &corpus)
    : document_count_(corpus.size()) {
  for (const ReviewDocument &doc : corpus.documents) {
    TermCounts terms = TermCounts::of(doc);
    for (const auto &[word, count] : terms.counts) ++document_frequency_[word];
    terms_.emplace(doc.doc_id, std::move(terms));
  }
}

CorpusStats::CorpusStats(
    int document_count,
    std::map<std::string, int, std::less<>> document_frequency)
    : document_count_(document_count),
      document_frequency_(std::move(document_frequency)) {}

int CorpusStats::document_frequency(std::string_view unigram) const {
  auto it = document_frequency_.find(unigram);
  return it == document_frequency_.end() ? 0 : it->second;
}

const TermCounts *CorpusStats::terms(std::string_view doc_id) const {
  auto it = terms_.find(doc_id);
  return it == terms_.end() ? nullptr : &it->second;
}

double compute_tf_idf(std::string_view unigram, const TermCounts &doc,
                      const CorpusStats &stats) {
  const int corpus_size = stats.document_count();
  if (corpus_size < 1) throw InvalidArgument("tf-idf: empty corpus");
  if (doc.word_count < 1) throw InvalidArgument("tf-idf: empty document");
  auto it = doc.counts.find(unigram);
  if (it == doc.counts.end() || it->second < 1) {
    throw InvalidArgument("tf-idf: '" + std::string(unigram) +
                          "' does not occur in the document");
  }
  const int doc_freq = stats.document_frequency(unigram);
  if (doc_freq < 1 || doc_freq > corpus_size) {
    throw InvalidArgument("tf-idf: document frequency of '" +
                          std::string(unigram) + "' is " +
                          std::to_string(doc_freq) + " with C = " +
                          std::to_string(corpus_size));
  }
  double tf = static_cast<double>(it->second) / doc.word_count;
  double idf = -std::log2(static_cast<double>(doc_freq) / corpus_size);
  return tf * idf + 0.0;  // folds -0.0 when N_f == C
}

double compute_tf_idf(std::string_view unigram, const ReviewDocument &doc,
                      const CorpusStats &stats) {
  if (const TermCounts *cached = stats.terms(doc.doc_id)) {
    return compute_tf_idf(unigram, *cached, stats);
  }
  return compute_tf_idf(unigram, TermCounts::of(doc), stats);
}

bool is_filtered_token(const Token &token, const Lexicons &lexicons) {
  return !is_word_token(token.surface) || lexicons.is_stop_word(token.normalized);
}

namespace {

int position_of(const Token &token, const Sentence &sentence) {
  int first = -1;
  int last = -1;
  for (const Token &t : sentence.tokens) {
    if (!is_word_token(t.surface)) continue;
    if (first < 0) first = t.position_in_sentence;
    last = t.position_in_sentence;
  }
  if (first < 0) {
    // Punctuation-only sentence: fall back to raw indices.
    first = 0;
    last = static_cast<int>(sentence.tokens.size()) - 1;
  }
  if (token.position_in_sentence == first) return -1;
  if (token.position_in_sentence == last) return 1;
  return 0;
}

FeatureVector make_vector(const Token &token, const Sentence &sentence,
                          double tf_idf, const Lexicons &lex,
                          std::optional<Label> label) {
  FeatureVector fv;
  fv.tf_idf = tf_idf;
  fv.position = position_of(token, sentence);
  fv.pos_class = pos_class_of(token.pos_tag);
  if (lex.positive_seeds.count(token.normalized)) {
    fv.seed = Seed::kPositive;
  } else if (lex.negative_seeds.count(token.normalized)) {
    fv.seed = Seed::kNegative;
  }
  fv.negation = lex.negation_words.count(token.normalized) > 0;
  fv.modifier = lex.modifier_words.count(token.normalized) > 0;
  fv.class_label = label;
  return fv;
}

}  // namespace

FeatureVector build_feature_vector(const Token &token,
                                   const Sentence &sentence,
                                   const ReviewDocument &doc,
                                   const CorpusStats &stats,
                                   const Lexicons &lexicons) {
  int index = token.position_in_sentence;
  if (index < 0 || index >= static_cast<int>(sentence.tokens.size()) ||
      sentence.tokens[index].surface != token.surface) {
    throw InvalidArgument("token '" + token.surface +
                          "' is not part of sentence " +
                          std::to_string(sentence.index));
  }
  if (sentence.doc_id != doc.doc_id) {
    throw InvalidArgument("sentence belongs to '" + sentence.doc_id +
                          "', not '" + doc.doc_id + "'");
  }
  double tf_idf = compute_tf_idf(token.normalized, doc, stats);
  return make_vector(token, sentence, tf_idf, lexicons, doc.label);
}

std::vector<SentenceFeatures> featurize_document(const ReviewDocument &doc,
                                                 const CorpusStats &stats,
                                                 const Lexicons &lexicons) {
  const TermCounts *cached = stats.terms(doc.doc_id);
  TermCounts local;
  if (cached == nullptr) {
    local = TermCounts::of(doc);
    cached = &local;
  }
  // tf-idf is a property of the (unigram, document) pair; compute it once.
  std::map<std::string, double, std::less<>> tf_idf;
  std::vector<SentenceFeatures> out;
  for (const Sentence &s : doc.sentences) {
    SentenceFeatures sf;
    sf.doc_id = doc.doc_id;
    sf.sentence_index = s.index;
    for (const Token &t : s.tokens) {
      if (is_filtered_token(t, lexicons)) continue;
      auto it = tf_idf.find(t.normalized);
      if (it == tf_idf.end()) {
        it = tf_idf.emplace(t.normalized,
                            compute_tf_idf(t.normalized, *cached, stats))
                 .first;
      }
      sf.token_indices.push_back(t.position_in_sentence);
      sf.vectors.push_back(make_vector(t, s, it->second, lexicons, doc.label));
    }
    out.push_back(std::move(sf));
  }
  return out;
}

bool Dataset::labeled() const {
  return std::all_of(vectors.begin(), vectors.end(),
                     [](const FeatureVector &v) { return v.class_label; });
}

int Dataset::support(Label label) const {
  return static_cast<int>(
      std::count_if(vectors.begin(), vectors.end(),
                    [&](const FeatureVector &v) { return v.class_label == label; }));
}

Dataset build_dataset(const Corpus &corpus, const Lexicons &lexicons,
                      DatasetMode mode) {
  if (mode == DatasetMode::kLabeled) {
    std::string missing;
    for (const ReviewDocument &d : corpus.documents) {
      if (!d.label) missing += (missing.empty() ? "" : ", ") + d.doc_id;
    }
    if (!missing.empty()) {
      throw InvalidArgument("labeled dataset requested but these documents "
                            "have no label: " + missing);
    }
  }
  CorpusStats stats(corpus);
  Dataset dataset;
  for (const ReviewDocument &d : corpus.documents) {
    for (SentenceFeatures &sf : featurize_document(d, stats, lexicons)) {
      for (FeatureVector &v : sf.vectors) dataset.vectors.push_back(v);
    }
  }
  return dataset;
}

std::string format_dataset_csv(const Dataset &dataset) {
  std::ostringstream out;
  out << "tf_idf,position,pos,seed,negation,modifier,class\n";
  for (const FeatureVector &v : dataset.vectors) {
    out << format_double(v.tf_idf) << ',' << v.position << ','
        << pos_class_symbol(v.pos_class) << ',' << seed_symbol(v.seed) << ','
        << (v.negation ? 1 : 0) << ',' << (v.modifier ? 1 : 0) << ','
        << (v.class_label ? label_symbol(*v.class_label) : '?') << '\n';
  }
  return out.str();
}

Dataset parse_dataset_csv(std::string_view content, const std::string &source) {
  Dataset dataset;
  int line_no = 0;
  bool header_seen = false;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (!header_seen) {
      if (trim(line) != "tf_idf,position,pos,seed,negation,modifier,class") {
        throw ParseError(source, line_no, "unexpected dataset header");
      }
      header_seen = true;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 7) {
      throw ParseError(source, line_no, "expected 7 comma-separated fields");
    }
    FeatureVector v;
    try {
      v.tf_idf = parse_double(f[0]);
      v.position = static_cast<int>(parse_int(f[1]));
    } catch (const InvalidArgument &e) {
      throw ParseError(source, line_no, e.what());
    }
    auto pos = parse_pos_class(f[2]);
    auto seed = parse_seed(f[3]);
    bool ok = pos && seed && v.tf_idf >= 0.0 && v.position >= -1 &&
              v.position <= 1 && (f[4] == "0" || f[4] == "1") &&
              (f[5] == "0" || f[5] == "1");
    if (!ok) throw ParseError(source, line_no, "field out of domain");
    v.pos_class = *pos;
    v.seed = *seed;
    v.negation = f[4] == "1";
    v.modifier = f[5] == "1";
    if (f[6] != "?") {
      v.class_label = parse_label(f[6]);
      if (!v.class_label) throw ParseError(source, line_no, "bad class");
    }
    dataset.vectors.push_back(v);
  }
  if (!header_seen) throw ParseError(source, 0, "missing dataset header");
  return dataset;
}

std::string_view attribute_name(Attribute attribute) {
  switch (attribute) {
    case Attribute::kTfIdf: return "tf_idf";
    case Attribute::kPosition: return "position";
    case Attribute::kPos: return "pos";
    case Attribute::kSeed: return "seed";
    case Attribute::kNegation: return "negation";
    case Attribute::kModifier: return "modifier";
  }
  return "?";
}

std::vector<int> equal_frequency_bins(std::span<const double> values,
                                      int bins) {
  if (bins < 1) throw InvalidArgument("bins must be >= 1");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  std::set<double> cuts;
  for (int k = 1; k < bins && n > 0; ++k) {
    cuts.insert(sorted[static_cast<size_t>(k) * n / bins]);
  }
  std::vector<int> out;
  out.reserve(values.size());
  for (double v : values) {
    out.push_back(static_cast<int>(
        std::distance(cuts.begin(), cuts.upper_bound(v))));
  }
  return out;
}

double entropy_bits(std::span<const int> counts) {
  long long total = 0;
  for (int c : counts) total += c;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (int c : counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

namespace {

int attribute_value(const FeatureVector &v, Attribute a) {
  switch (a) {
    case Attribute::kPosition: return v.position;
    case Attribute::kPos: return static_cast<int>(v.pos_class);
    case Attribute::kSeed: return static_cast<int>(v.seed);
    case Attribute::kNegation: return v.negation ? 1 : 0;
    case Attribute::kModifier: return v.modifier ? 1 : 0;
    case Attribute::kTfIdf: break;
  }
  return 0;
}

}  // namespace

double information_gain(const Dataset &dataset, Attribute attribute,
                        int tf_idf_bins) {
  if (dataset.vectors.size() < 2) {
    throw InvalidArgument("information gain needs at least 2 instances");
  }
  if (!dataset.labeled()) {
    throw InvalidArgument("information gain needs a labeled dataset");
  }
  std::vector<int> values;
  values.reserve(dataset.vectors.size());
  if (attribute == Attribute::kTfIdf) {
    std::vector<double> raw;
    for (const FeatureVector &v : dataset.vectors) raw.push_back(v.tf_idf);
    values = equal_frequency_bins(raw, tf_idf_bins);
  } else {
    for (const FeatureVector &v : dataset.vectors) {
      values.push_back(attribute_value(v, attribute));
    }
  }

  std::array<int, 2> class_counts{};
  std::map<int, std::array<int, 2>> by_value;
  for (size_t i = 0; i < values.size(); ++i) {
    int c = *dataset.vectors[i].class_label == Label::kSubjective ? 0 : 1;
    ++class_counts[c];
    ++by_value[values[i]][c];
  }
  const double n = static_cast<double>(values.size());
  const double h_class = entropy_bits(class_counts);
  double h_conditional = 0.0;
  for (const auto &[value, counts] : by_value) {
    h_conditional += (counts[0] + counts[1]) / n * entropy_bits(counts);
  }
  return std::clamp(h_class - h_conditional, 0.0, h_class);
}

std::vector<std::pair<Attribute, double>> rank_attributes(
    const Dataset &dataset, int tf_idf_bins) {
  std::vector<std::pair<Attribute, double>> out;
  for (Attribute a : kAllAttributes) {
    out.emplace_back(a, information_gain(dataset, a, tf_idf_bins));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  return out;
}

}  // namespace opinion_miner
