#ifndef OPINION_MINER_DEPENDENCY_H_
#define OPINION_MINER_DEPENDENCY_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opinion_miner/tokens.h"

namespace opinion_miner {

struct DepEdge {
  std::string label;
  int head = 0;       // 1-based token index
  int dependent = 0;  // 1-based token index

  bool operator==(const DepEdge &) const = default;
};

// One parsed sentence. tokens[i] is the parser's token i+1.
struct DepGraph {
  std::string doc_id;
  int sentence_index = 0;
  std::vector<Token> tokens;
  std::vector<DepEdge> edges;

  const Token &token(int index) const { return tokens.at(index - 1); }
  int size() const { return static_cast<int>(tokens.size()); }
};

// Maps parser-specific relation spellings onto the canonical labels the
// extraction rules use (Stanford basic dependencies).
class LabelAliasMap {
 public:
  // Ships with entries for Universal Dependencies and collapsed Stanford
  // spellings: compound->nn, obj->dobj, conj:and->and, conj_and->and, ...
  static LabelAliasMap defaults();
  // "alias<TAB>canonical" per line; '#' comments. Entries are added on top
  // of whatever the map already holds.
  void load(const std::filesystem::path &path);
  void add(std::string_view alias, std::string_view canonical);

  // Lowercases, then applies the alias table. Unknown labels pass through.
  std::string normalize(std::string_view label) const;

  const std::map<std::string, std::string> &entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
};

// Parses either CoNLL-U or the typed-dependency format
//
//   # doc_id = 1Canon            (optional metadata comments)
//   # sent_index = 0
//   Samsung/NNP S5830/NNP has/VBZ a/DT powerful/JJ battery/NN ./.
//   nn(S5830-2, Samsung-1) nsubj(has-3, S5830-2) ...
//
// The format is chosen from the first non-comment line. In the typed format
// a sentence ends at a blank line or at a relation followed by '.'; the
// optional "word/TAG" line supplies tokens and POS tags. Root edges (head 0)
// are dropped. `source` names the input in error messages; `default_doc_id`
// applies when no doc_id comment is present.
std::vector<DepGraph> parse_dependencies(std::string_view content,
                                         const LabelAliasMap &aliases,
                                         const std::string &source,
                                         const std::string &default_doc_id);

// Reads a file with parse_dependencies; doc_id defaults to the file stem.
std::vector<DepGraph> parse_dep_file(const std::filesystem::path &path,
                                     const LabelAliasMap &aliases);

// Writes graphs in the typed-dependency format above, one relation per line,
// with doc_id / sent_index comments. parse_dependencies reads it back.
std::string format_typed_dependencies(const std::vector<DepGraph> &graphs);

}  // namespace opinion_miner

#endif  // OPINION_MINER_DEPENDENCY_H_
