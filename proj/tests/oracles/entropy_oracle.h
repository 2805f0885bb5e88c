#ifndef OPINION_MINER_TESTS_ORACLES_ENTROPY_ORACLE_H_
#define OPINION_MINER_TESTS_ORACLES_ENTROPY_ORACLE_H_

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace opinion_miner::oracle {

// Information gain as mutual information,
//   sum_{v,c} p(v,c) * log2(p(v,c) / (p(v) p(c))),
// enumerated over the joint (value, class) table.
template <typename Value>
double mutual_information_bits(const std::vector<std::pair<Value, int>> &rows) {
  std::map<std::pair<Value, int>, double> joint;
  std::map<Value, double> value_marginal;
  std::map<int, double> class_marginal;
  const double n = static_cast<double>(rows.size());
  for (const auto &[value, cls] : rows) {
    joint[{value, cls}] += 1.0 / n;
    value_marginal[value] += 1.0 / n;
    class_marginal[cls] += 1.0 / n;
  }
  double mi = 0.0;
  for (const auto &[key, p] : joint) {
    mi += p * std::log2(p / (value_marginal[key.first] *
                             class_marginal[key.second]));
  }
  return mi;
}

// Class entropy in bits by direct enumeration.
inline double class_entropy_bits(const std::vector<int> &classes) {
  std::map<int, double> p;
  for (int c : classes) p[c] += 1.0 / static_cast<double>(classes.size());
  double h = 0.0;
  for (const auto &[c, q] : p) h -= q * std::log2(q);
  return h;
}

}  // namespace opinion_miner::oracle

#endif  // OPINION_MINER_TESTS_ORACLES_ENTROPY_ORACLE_H_
