#include "opinion_miner/rules.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

namespace {

// Maximum number of "and" conjuncts Rule 2 follows from one opinion.
constexpr size_t kMaxConjuncts = 5;

std::vector<DepEdge> edges_with(const DepGraph &g, std::string_view label) {
  std::vector<DepEdge> out;
  for (const DepEdge &e : g.edges) {
    if (e.label == label) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const DepEdge &a, const DepEdge &b) {
    return std::tie(a.head, a.dependent) < std::tie(b.head, b.dependent);
  });
  return out;
}

bool stop(const DepGraph &g, int index, const WordSet &stop_words) {
  return stop_words.count(g.token(index).normalized) > 0;
}

// Feature named by the subject `head` of an nsubj edge: the nn compound
// (dependent, head) when one qualifies, else the bare noun. Empty when
// neither branch matches.
std::vector<int> subject_feature(const DepGraph &g, int head,
                                 const std::vector<DepEdge> &nn_edges,
                                 const WordSet &stop_words) {
  const bool head_ok = is_noun(g.token(head).pos_tag) &&
                       !stop(g, head, stop_words);
  if (!head_ok) return {};
  int best = -1;
  for (const DepEdge &e : nn_edges) {
    if (e.head != head) continue;
    int w2 = e.dependent;
    if (!is_noun(g.token(w2).pos_tag) || stop(g, w2, stop_words)) continue;
    if (best < 0 || std::abs(w2 - head) < std::abs(best - head)) best = w2;
  }
  if (best < 0) return {head};
  return best < head ? std::vector<int>{best, head}
                     : std::vector<int>{head, best};
}

Triple make_triple(const DepGraph &g, const std::vector<int> &feature,
                   int opinion, RuleId rule, bool secondary) {
  Triple t;
  for (int i : feature) t.feature.push_back(g.token(i).surface);
  t.feature_tokens = feature;
  t.opinion = g.token(opinion).surface;
  t.opinion_token = opinion;
  t.doc_id = g.doc_id;
  t.sentence_index = g.sentence_index;
  t.rule = rule;
  t.secondary = secondary;
  return t;
}

}  // namespace

std::string Triple::feature_text() const {
  std::string out;
  for (const std::string &w : feature) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string Triple::rule_name() const {
  if (rule == RuleId::kRule2) return "R2";
  return secondary ? "R1s" : "R1";
}

std::vector<Triple> apply_rule1(const DepGraph &g, const WordSet &stop_words) {
  std::vector<Triple> out;
  const auto nn = edges_with(g, "nn");
  const auto dobj = edges_with(g, "dobj");
  const auto amod = edges_with(g, "amod");
  for (const DepEdge &subj : edges_with(g, "nsubj")) {
    const int verb = subj.head;
    if (!is_verb(g.token(verb).pos_tag)) continue;
    std::vector<int> subject = subject_feature(g, subj.dependent, nn,
                                               stop_words);
    if (subject.empty()) continue;
    for (const DepEdge &obj : dobj) {
      if (obj.head != verb) continue;
      const int object = obj.dependent;
      if (!is_noun(g.token(object).pos_tag) || stop(g, object, stop_words)) {
        continue;
      }
      for (const DepEdge &mod : amod) {
        if (mod.head != object) continue;
        const int opinion = mod.dependent;
        if (!is_adjective(g.token(opinion).pos_tag) ||
            stop(g, opinion, stop_words)) {
          continue;
        }
        out.push_back(make_triple(g, {object}, opinion, RuleId::kRule1,
                                  false));
        out.push_back(make_triple(g, subject, opinion, RuleId::kRule1, true));
      }
    }
  }
  return out;
}

std::vector<Triple> apply_rule2(const DepGraph &g, const WordSet &stop_words) {
  std::vector<Triple> out;
  const auto nn = edges_with(g, "nn");
  const auto conj = edges_with(g, "and");
  for (const DepEdge &subj : edges_with(g, "nsubj")) {
    const int opinion = subj.head;
    if (!is_adjective(g.token(opinion).pos_tag) ||
        stop(g, opinion, stop_words)) {
      continue;
    }
    std::vector<int> feature = subject_feature(g, subj.dependent, nn,
                                               stop_words);
    if (feature.empty()) continue;
    out.push_back(make_triple(g, feature, opinion, RuleId::kRule2, false));

    // Conjuncts reachable through and(w3, wk)+, in token order.
    std::vector<int> conjuncts;
    std::vector<bool> seen(g.size() + 1, false);
    seen[opinion] = true;
    std::deque<int> frontier = {opinion};
    while (!frontier.empty()) {
      int from = frontier.front();
      frontier.pop_front();
      for (const DepEdge &e : conj) {
        if (e.head != from || seen[e.dependent]) continue;
        seen[e.dependent] = true;
        conjuncts.push_back(e.dependent);
        frontier.push_back(e.dependent);
      }
    }
    std::sort(conjuncts.begin(), conjuncts.end());
    if (conjuncts.size() > kMaxConjuncts) conjuncts.resize(kMaxConjuncts);
    for (int wk : conjuncts) {
      if (!is_adjective(g.token(wk).pos_tag) || stop(g, wk, stop_words)) {
        continue;
      }
      out.push_back(make_triple(g, feature, wk, RuleId::kRule2, false));
    }
  }
  return out;
}

std::optional<int> find_modifier(const DepGraph &g, int opinion_token) {
  std::optional<int> best;
  for (const DepEdge &e : g.edges) {
    if (e.label != "advmod" || e.head != opinion_token) continue;
    if (!is_adverb(g.token(e.dependent).pos_tag)) continue;
    int d = std::abs(e.dependent - opinion_token);
    if (!best || d < std::abs(*best - opinion_token) ||
        (d == std::abs(*best - opinion_token) && e.dependent < *best)) {
      best = e.dependent;
    }
  }
  return best;
}

std::optional<std::string> attach_modifier(const DepGraph &g,
                                           int opinion_token) {
  if (auto idx = find_modifier(g, opinion_token)) {
    return g.token(*idx).surface;
  }
  return std::nullopt;
}

ExtractionResult extract_triples(std::span<const ExtractionInput> sentences,
                                 const WordSet &stop_words) {
  ExtractionResult result;
  std::map<std::string, int> doc_order;
  struct Keyed {
    std::tuple<int, int, int, int, int, bool> key;
    Triple triple;
  };
  std::vector<Keyed> keyed;
  for (const ExtractionInput &in : sentences) {
    doc_order.emplace(in.doc_id, static_cast<int>(doc_order.size()));
    if (in.graph == nullptr) {
      ++result.skipped_without_parse;
      continue;
    }
    std::vector<Triple> found = apply_rule1(*in.graph, stop_words);
    std::vector<Triple> r2 = apply_rule2(*in.graph, stop_words);
    found.insert(found.end(), r2.begin(), r2.end());
    for (Triple &t : found) {
      t.doc_id = in.doc_id;
      t.sentence_index = in.sentence_index;
      t.modifier = attach_modifier(*in.graph, t.opinion_token);
      keyed.push_back(
          {{doc_order[in.doc_id], in.sentence_index,
            t.rule == RuleId::kRule1 ? 1 : 2, t.feature_tokens.front(),
            t.opinion_token, t.secondary},
           std::move(t)});
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed &a, const Keyed &b) { return a.key < b.key; });

  std::set<std::tuple<std::string, int, std::string, std::string>> seen;
  for (Keyed &k : keyed) {
    const Triple &t = k.triple;
    auto id = std::make_tuple(t.doc_id, t.sentence_index,
                              to_lower(t.feature_text()), to_lower(t.opinion));
    if (seen.insert(id).second) result.triples.push_back(std::move(k.triple));
  }
  return result;
}

std::string format_triples(std::span<const Triple> triples) {
  std::ostringstream out;
  for (const Triple &t : triples) {
    out << t.doc_id << '\t' << t.sentence_index << '\t' << t.feature_text()
        << '\t' << t.modifier.value_or("-") << '\t' << t.opinion << '\t'
        << t.rule_name() << '\n';
  }
  return out.str();
}

std::vector<Triple> parse_triples(std::string_view content,
                                  const std::string &source) {
  std::vector<Triple> out;
  int line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 6) {
      throw ParseError(source, line_no, "expected 6 tab-separated fields");
    }
    Triple t;
    t.doc_id = std::string(f[0]);
    try {
      t.sentence_index = static_cast<int>(parse_int(f[1]));
    } catch (const InvalidArgument &e) {
      throw ParseError(source, line_no, e.what());
    }
    for (std::string_view w : split_whitespace(f[2])) t.feature.emplace_back(w);
    if (t.feature.empty() || f[4].empty()) {
      throw ParseError(source, line_no, "empty feature or opinion");
    }
    if (f[3] != "-") t.modifier = std::string(f[3]);
    t.opinion = std::string(f[4]);
    if (f[5] == "R1") {
      t.rule = RuleId::kRule1;
    } else if (f[5] == "R1s") {
      t.rule = RuleId::kRule1;
      t.secondary = true;
    } else if (f[5] == "R2") {
      t.rule = RuleId::kRule2;
    } else {
      throw ParseError(source, line_no, "unknown rule id '" +
                                            std::string(f[5]) + "'");
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace opinion_miner
