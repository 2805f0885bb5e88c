#include "opinion_miner/lexicons.h"

#include <sstream>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

namespace {

// Keep in sync with core/data/*.txt (checked by lexicons_test).
constexpr std::string_view kPositiveSeeds[] = {
    "amazing", "awesome", "beautiful", "decent", "excellent", "good", "nice",
};
constexpr std::string_view kNegativeSeeds[] = {
    "bad", "bulky", "expensive", "faulty", "horrible", "poor", "stupid",
};
constexpr std::string_view kNegationWords[] = {
    "cannot", "hardly", "n't", "neither", "never", "no", "nor", "not",
    "without",
};
constexpr std::string_view kModifierWords[] = {
    "barely", "enough", "extremely", "fairly", "pretty", "quite", "rather",
    "really", "too", "very",
};
constexpr std::string_view kStopWords[] = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am",
    "an", "and", "any", "are", "as", "at", "be", "because", "been", "before",
    "being", "below", "between", "both", "but", "by", "can", "could", "did",
    "do", "does", "doing", "down", "during", "each", "few", "for", "from",
    "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is",
    "it", "its", "itself", "just", "let", "may", "me", "might", "more",
    "most", "must", "my", "myself", "of", "off", "on", "once", "only", "or",
    "other", "our", "ours", "ourselves", "out", "over", "own", "same",
    "shall", "she", "should", "so", "some", "such", "than", "that", "the",
    "their", "theirs", "them", "themselves", "then", "there", "these", "they",
    "this", "those", "through", "to", "under", "until", "up", "upon", "us",
    "via", "was", "we", "were", "what", "when", "where", "which", "while",
    "who", "whom", "why", "will", "with", "would", "yet", "you", "your",
    "yours", "yourself", "yourselves",
};

template <size_t N>
std::set<std::string, std::less<>> to_set(const std::string_view (&words)[N]) {
  return {std::begin(words), std::end(words)};
}

}  // namespace

Lexicons Lexicons::defaults() {
  Lexicons lex;
  lex.positive_seeds = to_set(kPositiveSeeds);
  lex.negative_seeds = to_set(kNegativeSeeds);
  lex.negation_words = to_set(kNegationWords);
  lex.modifier_words = to_set(kModifierWords);
  lex.stop_words = to_set(kStopWords);
  return lex;
}

void Lexicons::validate() const {
  std::string clash;
  for (const std::string &w : positive_seeds) {
    if (negative_seeds.count(w)) clash += (clash.empty() ? "" : ", ") + w;
  }
  if (!clash.empty()) {
    throw InvalidArgument("words in both seed lexicons: " + clash);
  }
}

std::set<std::string, std::less<>> read_word_list(
    const std::filesystem::path &path) {
  std::set<std::string, std::less<>> out;
  for (const std::string &w : read_list_file(path)) out.insert(to_lower(w));
  return out;
}

std::string format_word_list(const std::set<std::string, std::less<>> &words) {
  std::ostringstream out;
  for (const std::string &w : words) out << w << '\n';
  return out.str();
}

}  // namespace opinion_miner
