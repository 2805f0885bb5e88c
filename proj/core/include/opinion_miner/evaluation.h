#ifndef OPINION_MINER_EVALUATION_H_
#define OPINION_MINER_EVALUATION_H_

#include <array>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opinion_miner/rules.h"
#include "opinion_miner/tokens.h"

namespace opinion_miner {

struct ConfusionCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  long long tn = 0;

  ConfusionCounts &operator+=(const ConfusionCounts &o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
};

struct MetricRow {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  long long support = 0;
};

// Precision, recall and their harmonic mean. Any 0/0 ratio is 0.0.
// support = tp + fn.
MetricRow prf(const ConfusionCounts &c);

// Support-weighted mean of per-class rows. Throws InvalidArgument when the
// total support is 0.
MetricRow weighted_average(std::span<const MetricRow> rows);

enum class MacroMode {
  kPooled,  // sum the counts, then prf
  kMean,    // unweighted mean of per-category metrics
};

MetricRow macro_average(std::span<const ConfusionCounts> categories,
                        MacroMode mode = MacroMode::kPooled);
// Unweighted mean of already-computed rows (kMean without the counts).
MetricRow mean_metrics(std::span<const MetricRow> rows);

// Per-class counts for a binary S/O task from (predicted, true) pairs.
// Element 0 treats S as the positive class, element 1 treats O.
std::array<ConfusionCounts, 2> class_confusion(
    std::span<const std::pair<Label, Label>> predicted_and_true);

struct ScoredPrediction {
  double score = 0.0;  // P(S)
  bool positive = false;
};

struct RocPoint {
  double threshold = std::numeric_limits<double>::infinity();
  double fpr = 0.0;
  double tpr = 0.0;
};

// Threshold sweep over each distinct score, descending, starting at (0, 0)
// with threshold +inf and ending at (1, 1). Throws InvalidArgument unless
// both classes are present.
std::vector<RocPoint> roc_points(std::span<const ScoredPrediction> scored);
double area_under_curve(std::span<const RocPoint> points);
std::string format_roc_csv(std::span<const RocPoint> points);

struct GoldPair {
  std::string doc_id;
  std::string feature;
  std::string opinion;
};

// "doc_id<TAB>feature<TAB>opinion" per line.
std::vector<GoldPair> parse_gold_pairs(std::string_view content,
                                       const std::string &source);

// Pair-level matching within each document: feature word sets compared
// after case folding, opinions compared case-folded, modifiers ignored.
// Counts are grouped by the category of the document (`doc_category`);
// unknown documents land in "(unknown)".
std::map<std::string, ConfusionCounts> evaluate_extraction(
    std::span<const Triple> predicted, std::span<const GoldPair> gold,
    const std::map<std::string, std::string> &doc_category);

struct ReportRow {
  std::string name;
  ConfusionCounts counts;
  MetricRow metrics;
};

// One row per category (sorted) plus a final "Macro-Average" row whose
// counts are the pooled sums and whose metrics follow `mode`.
std::vector<ReportRow> extraction_report(
    const std::map<std::string, ConfusionCounts> &per_category,
    MacroMode mode);

// Rows "S", "O" and "Weighted-Average" for a binary classification task.
std::vector<ReportRow> class_report(const std::array<ConfusionCounts, 2> &c);

// Aligned, human-readable table with P/R/F to three decimals and a footer
// stating the 0/0 convention.
std::string format_metric_table(std::span<const ReportRow> rows);
// Machine-readable: "#name<TAB>tp<TAB>fp<TAB>fn<TAB>support<TAB>precision
// <TAB>recall<TAB>f_score" header, then one row each at full precision.
std::string format_metric_rows(std::span<const ReportRow> rows);

}  // namespace opinion_miner

#endif  // OPINION_MINER_EVALUATION_H_
