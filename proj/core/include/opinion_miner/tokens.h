#ifndef OPINION_MINER_TOKENS_H_
#define OPINION_MINER_TOKENS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opinion_miner {

// Subjective / objective.
enum class Label { kSubjective, kObjective };

char label_symbol(Label label);  // 'S' or 'O'
std::optional<Label> parse_label(std::string_view symbol);

struct Token {
  std::string surface;
  std::string normalized;
  int position_in_sentence = 0;  // 0-based
  std::string pos_tag;           // Penn Treebank style; empty until tagged
};

Token make_token(std::string surface, int position,
                 std::string pos_tag = std::string());

struct Sentence {
  std::string doc_id;
  int index = 0;
  std::vector<Token> tokens;
};

// Prefix match against Penn tags: "NN" matches NN, NNS, NNP, NNPS.
inline bool pos_matches(std::string_view tag, std::string_view prefix) {
  return !tag.empty() && tag.substr(0, prefix.size()) == prefix;
}
inline bool is_noun(std::string_view tag) { return pos_matches(tag, "NN"); }
inline bool is_verb(std::string_view tag) { return pos_matches(tag, "VB"); }
inline bool is_adjective(std::string_view tag) {
  return pos_matches(tag, "JJ");
}
inline bool is_adverb(std::string_view tag) { return pos_matches(tag, "RB"); }

}  // namespace opinion_miner

#endif  // OPINION_MINER_TOKENS_H_
