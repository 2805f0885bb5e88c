#ifndef OPINION_MINER_TESTS_ORACLES_ROC_ORACLE_H_
#define OPINION_MINER_TESTS_ORACLES_ROC_ORACLE_H_

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "opinion_miner/evaluation.h"

namespace opinion_miner::oracle {

// Brute-force sweep: for +inf and every distinct score t (descending),
// classify "score >= t" as positive and count rates from scratch.
inline std::vector<RocPoint> roc_by_enumeration(
    const std::vector<ScoredPrediction> &scored) {
  std::set<double, std::greater<>> thresholds;
  for (const auto &s : scored) thresholds.insert(s.score);
  double positives = 0, negatives = 0;
  for (const auto &s : scored) (s.positive ? positives : negatives) += 1;

  std::vector<RocPoint> out = {
      {std::numeric_limits<double>::infinity(), 0.0, 0.0}};
  for (double t : thresholds) {
    double tp = 0, fp = 0;
    for (const auto &s : scored) {
      if (s.score >= t) (s.positive ? tp : fp) += 1;
    }
    out.push_back({t, fp / negatives, tp / positives});
  }
  return out;
}

}  // namespace opinion_miner::oracle

#endif  // OPINION_MINER_TESTS_ORACLES_ROC_ORACLE_H_
