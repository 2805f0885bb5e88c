#include "opinion_miner/reliability.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

BipartiteGraph build_graph(std::span<const Triple> triples,
                           std::string category) {
  if (triples.empty()) {
    throw InvalidArgument("no triples to score in category '" + category +
                          "'");
  }
  std::map<std::pair<std::string, std::string>, std::map<std::string, int>>
      counts;
  std::map<std::string, int> doc_index;
  for (const Triple &t : triples) {
    ++counts[{to_lower(t.feature_text()), to_lower(t.opinion)}][t.doc_id];
    doc_index.emplace(t.doc_id, 0);
  }

  BipartiteGraph g;
  g.category = std::move(category);
  for (auto &[doc, index] : doc_index) {
    index = static_cast<int>(g.documents.size());
    g.documents.push_back(doc);
  }
  for (const auto &[pair, per_doc] : counts) {
    const int p = static_cast<int>(g.pairs.size());
    g.pairs.push_back({pair.first, pair.second});
    for (const auto &[doc, weight] : per_doc) {
      g.edges.push_back({p, doc_index[doc], weight});
    }
  }
  return g;
}

namespace {

// Divides by the maximum; a zero vector stays zero.
void rescale(std::vector<double> &v) {
  double top = 0.0;
  for (double x : v) top = std::max(top, x);
  if (top > 0.0) {
    for (double &x : v) x /= top;
  }
}

double max_change(const std::vector<double> &a, const std::vector<double> &b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace

HitsResult run_hits(const BipartiteGraph &g, const HitsOptions &options) {
  if (g.pairs.empty() || g.documents.empty()) {
    throw InvalidArgument("run_hits: empty graph");
  }
  if (!(options.eps > 0.0) || options.max_iter < 1) {
    throw InvalidArgument("run_hits: eps must be > 0 and max_iter >= 1");
  }
  HitsResult r;
  r.hubs.assign(g.pairs.size(), 1.0);
  r.authorities.assign(g.documents.size(), 1.0);
  std::vector<double> hubs(g.pairs.size());
  std::vector<double> auths(g.documents.size());

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    // Synchronous rounds: authorities read the previous hubs, hubs read the
    // authorities of this round.
    std::fill(auths.begin(), auths.end(), 0.0);
    for (const auto &e : g.edges) auths[e.document] += e.weight * r.hubs[e.pair];
    std::fill(hubs.begin(), hubs.end(), 0.0);
    for (const auto &e : g.edges) hubs[e.pair] += e.weight * auths[e.document];
    rescale(auths);
    rescale(hubs);

    const double change = std::max(max_change(hubs, r.hubs),
                                   max_change(auths, r.authorities));
    r.hubs.swap(hubs);
    r.authorities.swap(auths);
    r.iterations = iter;
    if (options.observer) options.observer(iter, r.hubs, r.authorities);
    if (change < options.eps) {
      r.converged = true;
      break;
    }
  }
  return r;
}

std::vector<double> reliability_scores(std::span<const double> hub_scores) {
  if (hub_scores.empty()) return {};
  auto [lo_it, hi_it] = std::minmax_element(hub_scores.begin(),
                                            hub_scores.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::vector<double> r;
  r.reserve(hub_scores.size());
  for (double h : hub_scores) {
    if (hi == lo) {
      r.push_back(1.0);
    } else {
      // NewMax = 1, NewMin = 0.
      r.push_back(std::clamp((h - lo) / (hi - lo) * (1.0 - 0.0) + 0.0, 0.0,
                             1.0));
    }
  }
  return r;
}

ScoreTable score_category(std::span<const Triple> triples,
                          const std::string &category,
                          const HitsOptions &options) {
  BipartiteGraph g = build_graph(triples, category);
  HitsResult hits = run_hits(g, options);
  std::vector<double> r = reliability_scores(hits.hubs);
  std::vector<double> a = reliability_scores(hits.authorities);

  ScoreTable table;
  table.iterations = hits.iterations;
  table.converged = hits.converged;
  for (size_t i = 0; i < g.pairs.size(); ++i) {
    table.pairs.push_back({category, g.pairs[i].feature, g.pairs[i].opinion,
                           1.0, hits.hubs[i], r[i]});
  }
  for (size_t i = 0; i < g.documents.size(); ++i) {
    table.documents.push_back(
        {category, g.documents[i], 1.0, hits.authorities[i], a[i]});
  }
  std::stable_sort(table.pairs.begin(), table.pairs.end(),
                   [](const PairScore &x, const PairScore &y) {
                     return std::tie(y.reliability, x.feature, x.opinion) <
                            std::tie(x.reliability, y.feature, y.opinion);
                   });
  std::stable_sort(table.documents.begin(), table.documents.end(),
                   [](const DocumentScore &x, const DocumentScore &y) {
                     return std::tie(y.normalized_authority, x.doc_id) <
                            std::tie(x.normalized_authority, y.doc_id);
                   });
  return table;
}

FilterResult filter_noisy(std::span<const PairScore> pairs, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw InvalidArgument("reliability threshold must lie in [0, 1], got " +
                          format_double(tau));
  }
  FilterResult out;
  for (const PairScore &p : pairs) {
    (p.reliability >= tau ? out.kept : out.removed).push_back(p);
  }
  return out;
}

std::string format_pair_scores(std::span<const PairScore> pairs) {
  std::ostringstream out;
  for (const PairScore &p : pairs) {
    out << p.category << '\t' << p.feature << '\t' << p.opinion << '\t'
        << format_fixed(p.initial_hub, 6) << '\t'
        << format_fixed(p.final_hub, 6) << '\t'
        << format_fixed(p.reliability, 6) << '\n';
  }
  return out.str();
}

std::string format_document_scores(std::span<const DocumentScore> docs) {
  std::ostringstream out;
  for (const DocumentScore &d : docs) {
    out << d.category << '\t' << d.doc_id << '\t'
        << format_fixed(d.initial_authority, 6) << '\t'
        << format_fixed(d.final_authority, 6) << '\t'
        << format_fixed(d.normalized_authority, 6) << '\n';
  }
  return out.str();
}

std::vector<PairScore> parse_pair_scores(std::string_view content,
                                         const std::string &source) {
  std::vector<PairScore> out;
  int line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 6) {
      throw ParseError(source, line_no, "expected 6 tab-separated fields");
    }
    try {
      out.push_back({std::string(f[0]), std::string(f[1]), std::string(f[2]),
                     parse_double(f[3]), parse_double(f[4]),
                     parse_double(f[5])});
    } catch (const InvalidArgument &e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return out;
}

}  // namespace opinion_miner
