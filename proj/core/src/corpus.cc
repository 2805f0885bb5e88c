#include "opinion_miner/corpus.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace fs = std::filesystem;

namespace opinion_miner {

char label_symbol(Label label) {
  return label == Label::kSubjective ? 'S' : 'O';
}

std::optional<Label> parse_label(std::string_view symbol) {
  symbol = trim(symbol);
  if (symbol == "S" || symbol == "s") return Label::kSubjective;
  if (symbol == "O" || symbol == "o") return Label::kObjective;
  return std::nullopt;
}

Token make_token(std::string surface, int position, std::string pos_tag) {
  Token t;
  t.normalized = to_lower(surface);
  t.surface = std::move(surface);
  t.position_in_sentence = position;
  t.pos_tag = std::move(pos_tag);
  return t;
}

const ReviewDocument *Corpus::find(std::string_view doc_id) const {
  for (const ReviewDocument &doc : documents) {
    if (doc.doc_id == doc_id) return &doc;
  }
  return nullptr;
}

std::vector<Sentence> segment_sentences(const ReviewDocument &doc,
                                        const SegmenterOptions &options) {
  const std::string &text = doc.text;
  std::vector<Sentence> sentences;
  auto emit = [&](std::string_view chunk) {
    std::vector<std::string> words = tokenize(chunk);
    if (words.empty()) return;
    Sentence s;
    s.doc_id = doc.doc_id;
    s.index = static_cast<int>(sentences.size());
    for (auto &w : words) {
      s.tokens.push_back(
          make_token(std::move(w), static_cast<int>(s.tokens.size())));
    }
    sentences.push_back(std::move(s));
  };

  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (options.terminators.find(text[i]) == std::string::npos) continue;
    bool at_end = i + 1 == text.size();
    if (!at_end && !std::isspace(static_cast<unsigned char>(text[i + 1]))) {
      continue;
    }
    emit(std::string_view(text).substr(start, i + 1 - start));
    start = i + 1;
  }
  if (start < text.size()) emit(std::string_view(text).substr(start));
  return sentences;
}

int attach_pos_tags(std::vector<Sentence> &sentences,
                    const std::vector<DepGraph> &parses) {
  std::map<int, const DepGraph *> by_index;
  for (const DepGraph &g : parses) by_index[g.sentence_index] = &g;

  constexpr size_t kLookahead = 4;
  int aligned = 0;
  for (Sentence &s : sentences) {
    auto it = by_index.find(s.index);
    if (it == by_index.end()) continue;
    const std::vector<Token> &parsed = it->second->tokens;
    size_t cursor = 0;
    size_t matched = 0;
    for (Token &t : s.tokens) {
      size_t limit = std::min(parsed.size(), cursor + kLookahead);
      for (size_t k = cursor; k < limit; ++k) {
        if (parsed[k].normalized == t.normalized) {
          t.pos_tag = parsed[k].pos_tag;
          cursor = k + 1;
          ++matched;
          break;
        }
      }
    }
    if (matched == s.tokens.size() && parsed.size() == s.tokens.size()) {
      ++aligned;
    }
  }
  return aligned;
}

std::vector<std::pair<std::string, Label>> read_labels_file(
    const fs::path &path) {
  std::string content = read_file(path);
  std::vector<std::pair<std::string, Label>> out;
  int line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    auto fields = split_whitespace(line);
    std::optional<Label> label;
    if (fields.size() == 2) label = parse_label(fields[1]);
    if (!label) {
      throw ParseError(path.string(), line_no, "expected 'doc_id<TAB>S|O'");
    }
    out.emplace_back(std::string(fields[0]), *label);
  }
  return out;
}

Corpus load_corpus(const fs::path &root, const LoadOptions &options) {
  if (!fs::is_directory(root)) {
    throw IoError("corpus root is not a directory: " + root.string());
  }
  Corpus corpus;
  std::set<std::string> seen;

  std::vector<fs::path> category_dirs;
  for (const auto &entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) category_dirs.push_back(entry.path());
  }
  std::sort(category_dirs.begin(), category_dirs.end());

  for (const fs::path &dir : category_dirs) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) continue;
    corpus.categories.push_back(dir.filename().string());

    for (const fs::path &file : files) {
      ReviewDocument doc;
      doc.doc_id = file.stem().string();
      doc.product_category = dir.filename().string();
      if (!seen.insert(doc.doc_id).second) {
        throw InvalidArgument("duplicate doc_id '" + doc.doc_id + "' at " +
                              file.string());
      }
      doc.text = strip_markup(read_file(file));
      doc.word_count = static_cast<int>(tokenize(doc.text).size());
      doc.sentences = segment_sentences(doc, options.segmenter);
      if (doc.sentences.empty()) {
        corpus.warnings.push_back("empty document: " + file.string());
      }

      fs::path parse_path = file;
      parse_path.replace_extension(".conllu");
      if (fs::exists(parse_path)) {
        std::vector<DepGraph> graphs = parse_dep_file(parse_path,
                                                      options.aliases);
        for (DepGraph &g : graphs) g.doc_id = doc.doc_id;
        int aligned = attach_pos_tags(doc.sentences, graphs);
        if (graphs.size() != doc.sentences.size() ||
            aligned != static_cast<int>(doc.sentences.size())) {
          corpus.warnings.push_back(
              parse_path.string() + ": " + std::to_string(graphs.size()) +
              " parsed sentences, " + std::to_string(doc.sentences.size()) +
              " segmented, " + std::to_string(aligned) + " aligned exactly");
        }
        doc.parses = std::move(graphs);
      }
      corpus.documents.push_back(std::move(doc));
    }
  }

  if (options.labels_path) {
    for (auto &[doc_id, label] : read_labels_file(*options.labels_path)) {
      auto it = std::find_if(
          corpus.documents.begin(), corpus.documents.end(),
          [&](const ReviewDocument &d) { return d.doc_id == doc_id; });
      if (it == corpus.documents.end()) {
        corpus.warnings.push_back("label for unknown doc_id '" + doc_id +
                                  "' ignored");
        continue;
      }
      it->label = label;
    }
  }
  return corpus;
}

IngestExport format_ingest_export(const Corpus &corpus) {
  std::ostringstream docs;
  std::ostringstream sents;
  std::vector<DepGraph> graphs;
  docs << "#category\tdoc_id\tlabel\tword_count\tsentences\thas_parse\n";
  for (const ReviewDocument &d : corpus.documents) {
    docs << d.product_category << '\t' << d.doc_id << '\t'
         << (d.label ? label_symbol(*d.label) : '-') << '\t' << d.word_count
         << '\t' << d.sentences.size() << '\t' << (d.parses ? 1 : 0) << '\n';
    for (const Sentence &s : d.sentences) {
      sents << d.doc_id << '\t' << s.index << '\t';
      for (size_t i = 0; i < s.tokens.size(); ++i) {
        if (i > 0) sents << ' ';
        sents << s.tokens[i].surface << '/' << s.tokens[i].pos_tag;
      }
      sents << '\n';
    }
    if (d.parses) graphs.insert(graphs.end(), d.parses->begin(),
                                d.parses->end());
  }
  return {docs.str(), sents.str(), format_typed_dependencies(graphs)};
}

Corpus read_ingest_export(const fs::path &dir) {
  const fs::path docs_path = dir / "documents.tsv";
  const fs::path sents_path = dir / "sentences.tsv";
  const fs::path parses_path = dir / "parses.dep";

  Corpus corpus;
  std::map<std::string, size_t> index;
  std::set<std::string> categories;
  const std::string docs_text = read_file(docs_path);
  const std::string sents_text = read_file(sents_path);
  int line_no = 0;
  for (std::string_view line : split(docs_text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 6) {
      throw ParseError(docs_path.string(), line_no, "expected 6 columns");
    }
    ReviewDocument d;
    d.product_category = std::string(f[0]);
    d.doc_id = std::string(f[1]);
    if (f[2] != "-") {
      d.label = parse_label(f[2]);
      if (!d.label) throw ParseError(docs_path.string(), line_no, "bad label");
    }
    try {
      d.word_count = static_cast<int>(parse_int(f[3]));
    } catch (const InvalidArgument &e) {
      throw ParseError(docs_path.string(), line_no, e.what());
    }
    if (f[5] == "1") d.parses.emplace();
    categories.insert(d.product_category);
    index[d.doc_id] = corpus.documents.size();
    corpus.documents.push_back(std::move(d));
  }
  corpus.categories.assign(categories.begin(), categories.end());

  line_no = 0;
  for (std::string_view line : split(sents_text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 3 || !index.count(std::string(f[0]))) {
      throw ParseError(sents_path.string(), line_no,
                       "expected 'doc_id<TAB>index<TAB>tokens' for a known "
                       "document");
    }
    ReviewDocument &d = corpus.documents[index[std::string(f[0])]];
    Sentence s;
    s.doc_id = d.doc_id;
    s.index = static_cast<int>(parse_int(f[1]));
    for (std::string_view field : split_whitespace(f[2])) {
      size_t slash = field.rfind('/');
      if (slash == std::string_view::npos) {
        throw ParseError(sents_path.string(), line_no,
                         "token without '/TAG' suffix");
      }
      s.tokens.push_back(make_token(std::string(field.substr(0, slash)),
                                    static_cast<int>(s.tokens.size()),
                                    std::string(field.substr(slash + 1))));
    }
    d.sentences.push_back(std::move(s));
  }

  for (ReviewDocument &d : corpus.documents) {
    std::string text;
    int tokens = 0;
    for (const Sentence &s : d.sentences) {
      for (const Token &t : s.tokens) {
        if (!text.empty()) text += ' ';
        text += t.surface;
        ++tokens;
      }
    }
    if (tokens != d.word_count) {
      throw ParseError(sents_path.string(), 0,
                       "document " + d.doc_id + " has " +
                           std::to_string(tokens) + " tokens but word_count " +
                           std::to_string(d.word_count));
    }
    d.text = std::move(text);
  }

  std::vector<DepGraph> graphs =
      parse_dependencies(read_file(parses_path), LabelAliasMap(),
                         parses_path.string(), std::string());
  for (DepGraph &g : graphs) {
    auto it = index.find(g.doc_id);
    if (it == index.end() || !corpus.documents[it->second].parses) {
      throw ParseError(parses_path.string(), 0,
                       "parse for unexpected document '" + g.doc_id + "'");
    }
    corpus.documents[it->second].parses->push_back(std::move(g));
  }
  return corpus;
}

}  // namespace opinion_miner
