#ifndef OPINION_MINER_CORPUS_H_
#define OPINION_MINER_CORPUS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opinion_miner/dependency.h"
#include "opinion_miner/tokens.h"

namespace opinion_miner {

struct ReviewDocument {
  std::string doc_id;  // file stem
  std::string product_category;
  std::string text;
  std::optional<Label> label;
  int word_count = 0;  // == tokenize(text).size()

  std::vector<Sentence> sentences;
  // Parsed sentences from the sibling .conllu file; absent when the
  // document has no parse (it is then skipped by triple extraction).
  std::optional<std::vector<DepGraph>> parses;
};

// Immutable after load; safe to share read-only across threads.
struct Corpus {
  std::vector<ReviewDocument> documents;  // sorted by (category, doc_id)
  std::vector<std::string> categories;    // sorted, unique
  std::vector<std::string> warnings;      // non-fatal issues seen at load

  int size() const { return static_cast<int>(documents.size()); }
  const ReviewDocument *find(std::string_view doc_id) const;
};

struct SegmenterOptions {
  std::string terminators = ".!?";
};

struct LoadOptions {
  std::optional<std::filesystem::path> labels_path;
  LabelAliasMap aliases = LabelAliasMap::defaults();
  SegmenterOptions segmenter;
};

// Splits a document into sentences at terminator characters followed by
// whitespace or end of text; "$4.99" and "e.g.x" do not split. Text with no
// boundary is one sentence. Chunks without tokens are dropped.
std::vector<Sentence> segment_sentences(const ReviewDocument &doc,
                                        const SegmenterOptions &options = {});

// Copies POS tags from parsed sentences onto text sentences with the same
// index. Tokens are aligned by normalized form, scanning forward; tokens the
// parse does not cover stay untagged. Returns the number of sentences that
// aligned token-for-token.
int attach_pos_tags(std::vector<Sentence> &sentences,
                    const std::vector<DepGraph> &parses);

// Loads root/<category>/<doc_id>.txt (+ optional <doc_id>.conllu).
// Throws IoError for unreadable files and InvalidArgument for duplicate
// doc_ids; labels for unknown doc_ids only produce a warning.
Corpus load_corpus(const std::filesystem::path &root,
                   const LoadOptions &options = {});

// "doc_id<TAB>S|O" per line (any whitespace separator is accepted).
std::vector<std::pair<std::string, Label>> read_labels_file(
    const std::filesystem::path &path);

// Ingest stage exports. documents.tsv holds one row per document
// (category, doc_id, label, word_count, sentences, has_parse); sentences.tsv
// holds doc_id, sentence index and the "surface/TAG" tokens; parses.dep
// holds the dependency graphs in the typed-dependency format.
struct IngestExport {
  std::string documents_tsv;
  std::string sentences_tsv;
  std::string parses;
};
IngestExport format_ingest_export(const Corpus &corpus);

// Rebuilds a Corpus from the three ingest exports in `dir`. Text is the
// space-joined token surfaces, so tokenization and word counts round-trip.
Corpus read_ingest_export(const std::filesystem::path &dir);

}  // namespace opinion_miner

#endif  // OPINION_MINER_CORPUS_H_
