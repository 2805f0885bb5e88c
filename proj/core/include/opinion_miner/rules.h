#ifndef OPINION_MINER_RULES_H_
#define OPINION_MINER_RULES_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opinion_miner/dependency.h"

namespace opinion_miner {

using WordSet = std::set<std::string, std::less<>>;

enum class RuleId { kRule1, kRule2 };

// An extracted <feature, modifier, opinion> unit.
struct Triple {
  std::vector<std::string> feature;  // one word, or an nn pair in surface order
  std::optional<std::string> modifier;
  std::string opinion;
  std::string doc_id;
  int sentence_index = 0;
  RuleId rule = RuleId::kRule1;
  // Rule 1 pairs the opinion with the direct object (primary) and also with
  // the subject-side feature; the latter is marked secondary ("R1s").
  bool secondary = false;

  // Token indices in the source graph; -1 when read back from an export.
  std::vector<int> feature_tokens;
  int opinion_token = -1;

  std::string feature_text() const;  // words joined by a space
  std::string rule_name() const;     // "R1", "R1s" or "R2"
};

// nsubj(verb, subject) with an nn compound or a bare noun subject, then
// dobj(verb, object) and amod(object, adjective). Emits (object, adjective)
// and the secondary (subject feature, adjective). Modifiers are not set.
std::vector<Triple> apply_rule1(const DepGraph &g, const WordSet &stop_words);

// nsubj(adjective, subject) with an nn compound or bare noun subject; the
// adjective is the opinion. Up to five conjuncts reached through "and"
// edges from the adjective add one triple each.
std::vector<Triple> apply_rule2(const DepGraph &g, const WordSet &stop_words);

// Index of the RB* advmod dependent of `opinion_token` nearest by token
// index (ties go to the earlier token).
std::optional<int> find_modifier(const DepGraph &g, int opinion_token);
std::optional<std::string> attach_modifier(const DepGraph &g,
                                           int opinion_token);

// A sentence the classifier labeled subjective. `graph` is null when the
// document has no parse for it.
struct ExtractionInput {
  std::string doc_id;
  int sentence_index = 0;
  const DepGraph *graph = nullptr;
};

struct ExtractionResult {
  std::vector<Triple> triples;
  int skipped_without_parse = 0;
};

// Union of both rules with modifiers attached, duplicates (same feature,
// opinion and sentence) collapsed. Ordered by input document order, then
// sentence, rule, feature token, opinion token.
ExtractionResult extract_triples(std::span<const ExtractionInput> sentences,
                                 const WordSet &stop_words);

// "doc_id<TAB>sentence<TAB>feature<TAB>modifier|-<TAB>opinion<TAB>rule_id"
std::string format_triples(std::span<const Triple> triples);
std::vector<Triple> parse_triples(std::string_view content,
                                  const std::string &source);

}  // namespace opinion_miner

#endif  // OPINION_MINER_RULES_H_
