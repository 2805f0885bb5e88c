#ifndef OPINION_MINER_RELIABILITY_H_
#define OPINION_MINER_RELIABILITY_H_

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opinion_miner/rules.h"

namespace opinion_miner {

// Pairs (hubs) on one side, review documents (authorities) on the other.
// An edge (p, d) exists when pair p was extracted from document d; its
// weight is the number of extractions.
struct BipartiteGraph {
  struct Pair {
    std::string feature;  // case-folded
    std::string opinion;  // case-folded
  };
  struct Edge {
    int pair = 0;
    int document = 0;
    int weight = 1;
  };

  std::string category;
  std::vector<Pair> pairs;               // sorted by (feature, opinion)
  std::vector<std::string> documents;    // sorted doc ids
  std::vector<Edge> edges;               // sorted by (pair, document)
};

// Throws InvalidArgument when `triples` is empty.
BipartiteGraph build_graph(std::span<const Triple> triples,
                           std::string category);

struct HitsOptions {
  double eps = 1e-4;
  int max_iter = 1000;
  // Called after every rescaled round with (iteration, hubs, authorities).
  std::function<void(int, std::span<const double>, std::span<const double>)>
      observer;
};

struct HitsResult {
  std::vector<double> hubs;         // per pair, max-rescaled to 1
  std::vector<double> authorities;  // per document, max-rescaled to 1
  int iterations = 0;
  bool converged = false;
};

// Starts from all-ones, then per round: auth(d) = sum w * hub(p),
// hub(p) = sum w * auth(d), both vectors divided by their maximum. Stops
// once the largest absolute change of any score is below eps, or after
// max_iter rounds with converged = false.
HitsResult run_hits(const BipartiteGraph &g, const HitsOptions &options = {});

// Min-max scaling onto [0, 1]; all 1.0 when max == min.
std::vector<double> reliability_scores(std::span<const double> hub_scores);

struct PairScore {
  std::string category;
  std::string feature;
  std::string opinion;
  double initial_hub = 1.0;
  double final_hub = 0.0;
  double reliability = 0.0;
};

struct DocumentScore {
  std::string category;
  std::string doc_id;
  double initial_authority = 1.0;
  double final_authority = 0.0;
  double normalized_authority = 0.0;
};

struct ScoreTable {
  std::vector<PairScore> pairs;          // reliability desc, then name
  std::vector<DocumentScore> documents;  // normalized authority desc, then id
  int iterations = 0;
  bool converged = false;
};

// build_graph + run_hits + reliability_scores for one category.
ScoreTable score_category(std::span<const Triple> triples,
                          const std::string &category,
                          const HitsOptions &options = {});

struct FilterResult {
  std::vector<PairScore> kept;
  std::vector<PairScore> removed;
};

// Keeps pairs with reliability >= tau. Throws InvalidArgument unless
// 0 <= tau <= 1.
FilterResult filter_noisy(std::span<const PairScore> pairs, double tau);

// "category<TAB>feature<TAB>opinion<TAB>initial_hs<TAB>final_hs<TAB>
// reliability"
std::string format_pair_scores(std::span<const PairScore> pairs);
// "category<TAB>doc_id<TAB>initial_as<TAB>final_as<TAB>normalized_as"
std::string format_document_scores(std::span<const DocumentScore> docs);
std::vector<PairScore> parse_pair_scores(std::string_view content,
                                         const std::string &source);

}  // namespace opinion_miner

#endif  // OPINION_MINER_RELIABILITY_H_
