#include "opinion_miner/dependency.h"

#include <algorithm>
#include <optional>
#include <regex>
#include <sstream>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

LabelAliasMap LabelAliasMap::defaults() {
  LabelAliasMap map;
  // Universal Dependencies v2 spellings.
  map.add("compound", "nn");
  map.add("obj", "dobj");
  map.add("nsubj:pass", "nsubjpass");
  map.add("nmod:poss", "poss");
  map.add("conj:and", "and");
  map.add("conj:or", "or");
  // Collapsed Stanford dependencies.
  map.add("conj_and", "and");
  map.add("conj_or", "or");
  return map;
}

void LabelAliasMap::load(const std::filesystem::path &path) {
  std::string content = read_file(path);
  int line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    auto fields = split_whitespace(line);
    if (fields.size() != 2) {
      throw ParseError(path.string(), line_no,
                       "expected 'alias<TAB>canonical'");
    }
    add(fields[0], fields[1]);
  }
}

void LabelAliasMap::add(std::string_view alias, std::string_view canonical) {
  entries_[to_lower(alias)] = to_lower(canonical);
}

std::string LabelAliasMap::normalize(std::string_view label) const {
  std::string lowered = to_lower(label);
  auto it = entries_.find(lowered);
  return it == entries_.end() ? lowered : it->second;
}

namespace {

struct Metadata {
  std::optional<std::string> doc_id;
  std::optional<int> sent_index;
};

void read_comment(std::string_view line, Metadata &meta) {
  line = trim(line.substr(1));
  size_t eq = line.find('=');
  if (eq == std::string_view::npos) return;
  std::string_view key = trim(line.substr(0, eq));
  std::string_view value = trim(line.substr(eq + 1));
  if (key == "doc_id") {
    meta.doc_id = std::string(value);
  } else if (key == "sent_index") {
    try {
      meta.sent_index = static_cast<int>(parse_int(value));
    } catch (const InvalidArgument &) {
    }
  }
}

// Basic UD spells every coordination "conj" and hangs the coordinator off
// a conjunct as "cc" (the second conjunct in UD v2, the first in v1). Such
// edges take the coordinator's word ("and", "or") as their label, matching
// the collapsed spellings conj_and / conj:and.
void resolve_plain_conjuncts(DepGraph &graph) {
  std::map<int, std::string> coordinator;
  for (const DepEdge &e : graph.edges) {
    if (e.label == "cc") {
      coordinator.emplace(e.head, graph.token(e.dependent).normalized);
    }
  }
  for (DepEdge &e : graph.edges) {
    if (e.label != "conj") continue;
    auto it = coordinator.find(e.dependent);
    if (it == coordinator.end()) it = coordinator.find(e.head);
    if (it != coordinator.end() &&
        (it->second == "and" || it->second == "or")) {
      e.label = it->second;
    }
  }
}

// Assigns doc_id / sentence_index, keeping a per-document ordinal for
// sentences that carry no explicit index.
class GraphSink {
 public:
  GraphSink(std::string default_doc_id, std::string source)
      : default_doc_id_(std::move(default_doc_id)),
        source_(std::move(source)) {}

  void emit(DepGraph graph, const Metadata &meta, int line_no) {
    graph.doc_id = meta.doc_id.value_or(default_doc_id_);
    int &ordinal = ordinals_[graph.doc_id];
    graph.sentence_index = meta.sent_index.value_or(ordinal);
    ordinal = graph.sentence_index + 1;
    for (const DepEdge &e : graph.edges) {
      if (e.head < 1 || e.head > graph.size() || e.dependent < 1 ||
          e.dependent > graph.size()) {
        throw ParseError(source_, line_no,
                         "edge " + e.label + "(" + std::to_string(e.head) +
                             ", " + std::to_string(e.dependent) +
                             ") references a token outside 1.." +
                             std::to_string(graph.size()));
      }
    }
    resolve_plain_conjuncts(graph);
    graphs_.push_back(std::move(graph));
  }

  std::vector<DepGraph> take() { return std::move(graphs_); }

 private:
  std::string default_doc_id_;
  std::string source_;
  std::map<std::string, int> ordinals_;
  std::vector<DepGraph> graphs_;
};

std::string upos_to_penn(std::string_view upos) {
  static const std::map<std::string, std::string, std::less<>> kMap = {
      {"ADJ", "JJ"},  {"ADV", "RB"},   {"NOUN", "NN"}, {"PROPN", "NNP"},
      {"VERB", "VB"}, {"AUX", "VB"},   {"PRON", "PRP"}, {"DET", "DT"},
      {"ADP", "IN"},  {"CCONJ", "CC"}, {"NUM", "CD"},  {"PART", "RP"},
      {"PUNCT", "."}, {"SCONJ", "IN"}, {"INTJ", "UH"}, {"SYM", "SYM"},
  };
  auto it = kMap.find(upos);
  return it == kMap.end() ? std::string(upos) : it->second;
}

std::vector<DepGraph> parse_conllu(const std::vector<std::string_view> &lines,
                                   const LabelAliasMap &aliases,
                                   const std::string &source,
                                   const std::string &default_doc_id) {
  GraphSink sink(default_doc_id, source);
  DepGraph current;
  Metadata meta;
  int last_line = 0;

  auto flush = [&](int line_no) {
    if (!current.tokens.empty()) sink.emit(std::move(current), meta, line_no);
    current = DepGraph();
    meta = Metadata();
  };

  for (size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      flush(last_line);
      continue;
    }
    if (line.front() == '#') {
      if (!current.tokens.empty()) flush(last_line);
      read_comment(line, meta);
      continue;
    }
    last_line = line_no;
    auto cols = split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError(source, line_no,
                       "expected 10 tab-separated CoNLL-U columns, got " +
                           std::to_string(cols.size()));
    }
    // Multiword ranges (1-2) and empty nodes (1.1) carry no basic edges.
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;
    int id = 0;
    try {
      id = static_cast<int>(parse_int(cols[0]));
    } catch (const InvalidArgument &) {
      throw ParseError(source, line_no, "bad token id '" +
                                            std::string(cols[0]) + "'");
    }
    if (id != current.size() + 1) {
      throw ParseError(source, line_no,
                       "token id " + std::to_string(id) + " out of sequence");
    }
    std::string tag = cols[4] != "_" ? std::string(cols[4])
                      : cols[3] != "_" ? upos_to_penn(cols[3])
                                       : std::string();
    current.tokens.push_back(
        make_token(std::string(cols[1]), id - 1, std::move(tag)));
    if (cols[6] == "_") continue;
    int head = 0;
    try {
      head = static_cast<int>(parse_int(cols[6]));
    } catch (const InvalidArgument &) {
      throw ParseError(source, line_no,
                       "bad head '" + std::string(cols[6]) + "'");
    }
    if (head < 0) throw ParseError(source, line_no, "negative head index");
    if (head == 0) continue;  // root
    current.edges.push_back({aliases.normalize(cols[7]), head, id});
  }
  flush(last_line);
  return sink.take();
}

// label(head-3, dependent-5) with optional copy-node apostrophes.
const std::regex &relation_regex() {
  static const std::regex kRelation(
      R"(([A-Za-z_][A-Za-z0-9_:.\-]*)\s*\(\s*(\S+?)-(\d+)'*\s*,\s*(\S+?)-(\d+)'*\s*\))");
  return kRelation;
}

struct TypedSentence {
  DepGraph graph;
  bool tagged = false;
  bool empty() const { return graph.tokens.empty() && graph.edges.empty(); }
};

void place_word(TypedSentence &s, int index, std::string_view word,
                const std::string &source, int line_no) {
  if (index < 1) return;
  auto &tokens = s.graph.tokens;
  if (s.tagged) {
    if (index > static_cast<int>(tokens.size())) {
      throw ParseError(source, line_no,
                       "relation references token " + std::to_string(index) +
                           " but the tagged sentence has " +
                           std::to_string(tokens.size()) + " tokens");
    }
    return;
  }
  while (static_cast<int>(tokens.size()) < index) {
    tokens.push_back(
        make_token("_", static_cast<int>(tokens.size()), std::string()));
  }
  Token &slot = tokens[index - 1];
  if (slot.surface == "_") {
    slot = make_token(std::string(word), index - 1, std::string());
  } else if (slot.surface != word) {
    throw ParseError(source, line_no,
                     "token " + std::to_string(index) + " is both '" +
                         slot.surface + "' and '" + std::string(word) + "'");
  }
}

bool parse_tagged_line(std::string_view line, TypedSentence &s) {
  auto fields = split_whitespace(line);
  std::vector<Token> tokens;
  for (std::string_view field : fields) {
    size_t slash = field.rfind('/');
    if (slash == std::string_view::npos || slash == 0) return false;
    tokens.push_back(make_token(std::string(field.substr(0, slash)),
                                static_cast<int>(tokens.size()),
                                std::string(field.substr(slash + 1))));
  }
  s.graph.tokens = std::move(tokens);
  s.tagged = true;
  return true;
}

std::vector<DepGraph> parse_typed(const std::vector<std::string_view> &lines,
                                  const LabelAliasMap &aliases,
                                  const std::string &source,
                                  const std::string &default_doc_id) {
  GraphSink sink(default_doc_id, source);
  TypedSentence current;
  Metadata meta;
  int last_line = 0;

  auto flush = [&](int line_no) {
    if (!current.empty()) sink.emit(std::move(current.graph), meta, line_no);
    current = TypedSentence();
    meta = Metadata();
  };

  for (size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      flush(last_line);
      continue;
    }
    if (trim(line).front() == '#') {
      if (!current.empty()) flush(last_line);
      read_comment(trim(line), meta);
      continue;
    }
    last_line = line_no;

    std::string owned(line);
    auto begin = std::sregex_iterator(owned.begin(), owned.end(),
                                      relation_regex());
    auto end = std::sregex_iterator();
    if (begin == end) {
      if (!current.empty()) flush(line_no);
      if (!parse_tagged_line(line, current)) {
        throw ParseError(source, line_no,
                         "neither a dependency relation nor a tagged "
                         "'word/TAG' sentence");
      }
      continue;
    }
    size_t cursor = 0;
    for (auto it = begin; it != end; ++it) {
      const std::smatch &m = *it;
      std::string_view gap(owned.data() + cursor,
                           static_cast<size_t>(m.position()) - cursor);
      if (gap.find_first_not_of(" \t.;") != std::string_view::npos) {
        throw ParseError(source, line_no,
                         "unexpected text '" + std::string(trim(gap)) + "'");
      }
      if (gap.find('.') != std::string_view::npos) flush(line_no);
      int head = std::stoi(m[3].str());
      int dep = std::stoi(m[5].str());
      place_word(current, head, m[2].str(), source, line_no);
      place_word(current, dep, m[4].str(), source, line_no);
      if (head != 0 && dep != 0) {
        current.graph.edges.push_back({aliases.normalize(m[1].str()), head,
                                       dep});
      }
      cursor = static_cast<size_t>(m.position() + m.length());
    }
    std::string_view tail(owned.data() + cursor, owned.size() - cursor);
    if (tail.find_first_not_of(" \t.;") != std::string_view::npos) {
      throw ParseError(source, line_no,
                       "unexpected text '" + std::string(trim(tail)) + "'");
    }
    if (tail.find('.') != std::string_view::npos) flush(line_no);
  }
  flush(last_line);
  return sink.take();
}

}  // namespace

std::vector<DepGraph> parse_dependencies(std::string_view content,
                                         const LabelAliasMap &aliases,
                                         const std::string &source,
                                         const std::string &default_doc_id) {
  std::vector<std::string_view> lines = split(content, '\n');
  for (std::string_view line : lines) {
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (split(t, '\t').size() == 10) {
      return parse_conllu(lines, aliases, source, default_doc_id);
    }
    break;
  }
  return parse_typed(lines, aliases, source, default_doc_id);
}

std::vector<DepGraph> parse_dep_file(const std::filesystem::path &path,
                                     const LabelAliasMap &aliases) {
  return parse_dependencies(read_file(path), aliases, path.string(),
                            path.stem().string());
}

std::string format_typed_dependencies(const std::vector<DepGraph> &graphs) {
  std::ostringstream out;
  for (const DepGraph &g : graphs) {
    out << "# doc_id = " << g.doc_id << "\n";
    out << "# sent_index = " << g.sentence_index << "\n";
    for (size_t i = 0; i < g.tokens.size(); ++i) {
      if (i > 0) out << ' ';
      out << g.tokens[i].surface << '/' << g.tokens[i].pos_tag;
    }
    out << "\n";
    for (const DepEdge &e : g.edges) {
      out << e.label << '(' << g.token(e.head).surface << '-' << e.head
          << ", " << g.token(e.dependent).surface << '-' << e.dependent
          << ")\n";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace opinion_miner
