#include "opinion_miner/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

namespace {

double ratio(long long num, long long den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

MetricRow prf(const ConfusionCounts &c) {
  MetricRow row;
  row.precision = ratio(c.tp, c.tp + c.fp);
  row.recall = ratio(c.tp, c.tp + c.fn);
  const double sum = row.precision + row.recall;
  row.f_score = sum == 0.0 ? 0.0 : 2.0 * row.precision * row.recall / sum;
  row.support = c.tp + c.fn;
  return row;
}

MetricRow weighted_average(std::span<const MetricRow> rows) {
  long long total = 0;
  for (const MetricRow &r : rows) {
    if (r.support < 0) throw InvalidArgument("negative support");
    total += r.support;
  }
  if (total == 0) throw InvalidArgument("weighted average: total support is 0");
  MetricRow out;
  for (const MetricRow &r : rows) {
    const double w = static_cast<double>(r.support) / total;
    out.precision += w * r.precision;
    out.recall += w * r.recall;
    out.f_score += w * r.f_score;
  }
  out.support = total;
  return out;
}

MetricRow mean_metrics(std::span<const MetricRow> rows) {
  if (rows.empty()) throw InvalidArgument("mean of zero metric rows");
  MetricRow out;
  for (const MetricRow &r : rows) {
    out.precision += r.precision;
    out.recall += r.recall;
    out.f_score += r.f_score;
    out.support += r.support;
  }
  const double n = static_cast<double>(rows.size());
  out.precision /= n;
  out.recall /= n;
  out.f_score /= n;
  return out;
}

MetricRow macro_average(std::span<const ConfusionCounts> categories,
                        MacroMode mode) {
  if (categories.empty()) throw InvalidArgument("macro average of nothing");
  if (mode == MacroMode::kPooled) {
    ConfusionCounts pooled;
    for (const ConfusionCounts &c : categories) pooled += c;
    return prf(pooled);
  }
  std::vector<MetricRow> rows;
  for (const ConfusionCounts &c : categories) rows.push_back(prf(c));
  return mean_metrics(rows);
}

std::array<ConfusionCounts, 2> class_confusion(
    std::span<const std::pair<Label, Label>> predicted_and_true) {
  std::array<ConfusionCounts, 2> out;
  for (const auto &[predicted, truth] : predicted_and_true) {
    for (int c = 0; c < 2; ++c) {
      const Label positive = c == 0 ? Label::kSubjective : Label::kObjective;
      const bool p = predicted == positive;
      const bool t = truth == positive;
      if (p && t) ++out[c].tp;
      if (p && !t) ++out[c].fp;
      if (!p && t) ++out[c].fn;
      if (!p && !t) ++out[c].tn;
    }
  }
  return out;
}

std::vector<RocPoint> roc_points(std::span<const ScoredPrediction> scored) {
  long long positives = 0;
  for (const ScoredPrediction &s : scored) positives += s.positive ? 1 : 0;
  const long long negatives = static_cast<long long>(scored.size()) - positives;
  if (positives == 0 || negatives == 0) {
    throw InvalidArgument("ROC needs both classes among the predictions");
  }
  std::vector<ScoredPrediction> sorted(scored.begin(), scored.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ScoredPrediction &a, const ScoredPrediction &b) {
                     return a.score > b.score;
                   });
  std::vector<RocPoint> out = {RocPoint{}};
  long long tp = 0;
  long long fp = 0;
  size_t i = 0;
  while (i < sorted.size()) {
    const double threshold = sorted[i].score;
    while (i < sorted.size() && sorted[i].score == threshold) {
      (sorted[i].positive ? tp : fp) += 1;
      ++i;
    }
    out.push_back({threshold, ratio(fp, negatives), ratio(tp, positives)});
  }
  return out;
}

double area_under_curve(std::span<const RocPoint> points) {
  double area = 0.0;
  for (size_t i = 1; i < points.size(); ++i) {
    area += (points[i].fpr - points[i - 1].fpr) *
            (points[i].tpr + points[i - 1].tpr) / 2.0;
  }
  return area;
}

std::string format_roc_csv(std::span<const RocPoint> points) {
  std::ostringstream out;
  out << "threshold,fpr,tpr\n";
  for (const RocPoint &p : points) {
    out << (std::isinf(p.threshold) ? std::string("inf")
                                    : format_double(p.threshold))
        << ',' << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
  }
  return out.str();
}

std::vector<GoldPair> parse_gold_pairs(std::string_view content,
                                       const std::string &source) {
  std::vector<GoldPair> out;
  int line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 3 || trim(f[1]).empty() || trim(f[2]).empty()) {
      throw ParseError(source, line_no,
                       "expected 'doc_id<TAB>feature<TAB>opinion'");
    }
    out.push_back({std::string(trim(f[0])), std::string(trim(f[1])),
                   std::string(trim(f[2]))});
  }
  return out;
}

namespace {

using PairKey = std::tuple<std::string, std::multiset<std::string>, std::string>;

PairKey pair_key(const std::string &doc, std::string_view feature,
                 std::string_view opinion) {
  std::multiset<std::string> words;
  for (std::string_view w : split_whitespace(feature)) words.insert(to_lower(w));
  return {doc, std::move(words), to_lower(trim(opinion))};
}

}  // namespace

std::map<std::string, ConfusionCounts> evaluate_extraction(
    std::span<const Triple> predicted, std::span<const GoldPair> gold,
    const std::map<std::string, std::string> &doc_category) {
  auto category_of = [&](const std::string &doc) {
    auto it = doc_category.find(doc);
    return it == doc_category.end() ? std::string("(unknown)") : it->second;
  };
  std::set<PairKey> predicted_keys;
  for (const Triple &t : predicted) {
    predicted_keys.insert(pair_key(t.doc_id, t.feature_text(), t.opinion));
  }
  std::set<PairKey> gold_keys;
  for (const GoldPair &g : gold) {
    gold_keys.insert(pair_key(g.doc_id, g.feature, g.opinion));
  }

  std::map<std::string, ConfusionCounts> out;
  for (const auto &[doc, category] : doc_category) {
    (void)doc;
    out[category];  // every known category appears, even with zero counts
  }
  for (const PairKey &k : predicted_keys) {
    ConfusionCounts &c = out[category_of(std::get<0>(k))];
    (gold_keys.count(k) ? c.tp : c.fp) += 1;
  }
  for (const PairKey &k : gold_keys) {
    if (!predicted_keys.count(k)) ++out[category_of(std::get<0>(k))].fn;
  }
  return out;
}

std::vector<ReportRow> extraction_report(
    const std::map<std::string, ConfusionCounts> &per_category,
    MacroMode mode) {
  std::vector<ReportRow> rows;
  std::vector<ConfusionCounts> counts;
  ConfusionCounts pooled;
  for (const auto &[name, c] : per_category) {
    rows.push_back({name, c, prf(c)});
    counts.push_back(c);
    pooled += c;
  }
  if (!counts.empty()) {
    rows.push_back({"Macro-Average", pooled, macro_average(counts, mode)});
  }
  return rows;
}

std::vector<ReportRow> class_report(const std::array<ConfusionCounts, 2> &c) {
  std::vector<ReportRow> rows = {{"S", c[0], prf(c[0])},
                                 {"O", c[1], prf(c[1])}};
  const std::array<MetricRow, 2> per_class = {rows[0].metrics,
                                              rows[1].metrics};
  ConfusionCounts pooled = c[0];
  pooled += c[1];
  if (per_class[0].support + per_class[1].support > 0) {
    rows.push_back({"Weighted-Average", pooled, weighted_average(per_class)});
  }
  return rows;
}

std::string format_metric_table(std::span<const ReportRow> rows) {
  size_t width = 8;
  for (const ReportRow &r : rows) width = std::max(width, r.name.size());

  std::ostringstream out;
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%-*s %6s %6s %6s %9s %9s %9s\n",
                static_cast<int>(width), "name", "TP", "FP", "FN",
                "precision", "recall", "f-score");
  out << buf;
  for (const ReportRow &r : rows) {
    std::snprintf(buf, sizeof(buf), "%-*s %6lld %6lld %6lld %9s %9s %9s\n",
                  static_cast<int>(width), r.name.c_str(), r.counts.tp,
                  r.counts.fp, r.counts.fn,
                  format_fixed(r.metrics.precision, 3).c_str(),
                  format_fixed(r.metrics.recall, 3).c_str(),
                  format_fixed(r.metrics.f_score, 3).c_str());
    out << buf;
  }
  out << "# ratios with a zero denominator are reported as 0.000\n";
  return out.str();
}

std::string format_metric_rows(std::span<const ReportRow> rows) {
  std::ostringstream out;
  out << "#name\ttp\tfp\tfn\tsupport\tprecision\trecall\tf_score\n";
  for (const ReportRow &r : rows) {
    out << r.name << '\t' << r.counts.tp << '\t' << r.counts.fp << '\t'
        << r.counts.fn << '\t' << r.metrics.support << '\t'
        << format_double(r.metrics.precision) << '\t'
        << format_double(r.metrics.recall) << '\t'
        << format_double(r.metrics.f_score) << '\n';
  }
  return out.str();
}

}  // namespace opinion_miner
