#ifndef OPINION_MINER_LEXICONS_H_
#define OPINION_MINER_LEXICONS_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace opinion_miner {

// Word lists driving the categorical attributes and the stop-word guard.
// All entries are stored lowercased.
struct Lexicons {
  std::set<std::string, std::less<>> positive_seeds;
  std::set<std::string, std::less<>> negative_seeds;
  std::set<std::string, std::less<>> negation_words;
  std::set<std::string, std::less<>> modifier_words;
  std::set<std::string, std::less<>> stop_words;

  // Built-in lists, identical to the files under core/data/.
  static Lexicons defaults();

  bool is_stop_word(std::string_view normalized) const {
    return stop_words.count(normalized) > 0;
  }

  // Throws InvalidArgument when a word is both a positive and negative seed.
  void validate() const;
};

// One word per line, '#' comments; entries lowercased.
std::set<std::string, std::less<>> read_word_list(
    const std::filesystem::path &path);

// Text of a word list in the file format above, sorted.
std::string format_word_list(const std::set<std::string, std::less<>> &words);

}  // namespace opinion_miner

#endif  // OPINION_MINER_LEXICONS_H_
