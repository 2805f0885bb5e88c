#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "opinion_miner/corpus.h"
#include "opinion_miner/features.h"
#include "opinion_miner/lexicons.h"
#include "opinion_miner/naive_bayes.h"
#include "opinion_miner/reliability.h"
#include "opinion_miner/rules.h"

namespace om = opinion_miner;

namespace {

om::Dataset random_dataset(size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 0.05);
  om::Dataset ds;
  ds.vectors.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    om::FeatureVector v;
    v.tf_idf = unit(rng);
    v.position = static_cast<int>(rng() % 3) - 1;
    v.pos_class = static_cast<om::PosClass>(rng() % om::kPosClassCount);
    v.seed = static_cast<om::Seed>(rng() % om::kSeedCount);
    v.negation = rng() % 2;
    v.modifier = rng() % 2;
    v.class_label = i % 2 ? om::Label::kSubjective : om::Label::kObjective;
    ds.vectors.push_back(v);
  }
  return ds;
}

std::vector<om::Triple> random_triples(int pairs, int docs, int count) {
  std::mt19937_64 rng(11);
  std::vector<om::Triple> triples;
  for (int i = 0; i < count; ++i) {
    om::Triple t;
    const int p = i < pairs ? i : static_cast<int>(rng() % pairs);
    t.doc_id = "d" + std::to_string(i < docs ? i : rng() % docs);
    t.feature = {"f" + std::to_string(p)};
    t.opinion = "o" + std::to_string(p);
    triples.push_back(t);
  }
  return triples;
}

const om::Corpus &mini_corpus() {
  static const om::Corpus corpus = [] {
    om::LoadOptions options;
    options.labels_path =
        std::filesystem::path(OPINION_MINER_FIXTURES) / "mini/labels.tsv";
    return om::load_corpus(
        std::filesystem::path(OPINION_MINER_FIXTURES) / "mini/corpus", options);
  }();
  return corpus;
}

void BM_TrainNaiveBayes(benchmark::State &state) {
  const om::Dataset ds = random_dataset(static_cast<size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(om::train(ds));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrainNaiveBayes)->Arg(1000)->Arg(30000);

void BM_PredictToken(benchmark::State &state) {
  const om::Dataset ds = random_dataset(4096);
  const om::NBModel model = om::train(ds);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(om::predict_token(model, ds.vectors[i++ & 4095]));
  }
}
BENCHMARK(BM_PredictToken);

void BM_Hits(benchmark::State &state) {
  const int pairs = static_cast<int>(state.range(0));
  const auto triples = random_triples(pairs, pairs / 2 + 1, pairs * 4);
  const om::BipartiteGraph g = om::build_graph(triples, "bench");
  for (auto _ : state) benchmark::DoNotOptimize(om::run_hits(g));
}
BENCHMARK(BM_Hits)->Arg(100)->Arg(2000);

void BM_BuildDataset(benchmark::State &state) {
  const om::Corpus &corpus = mini_corpus();
  const om::Lexicons lexicons = om::Lexicons::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        om::build_dataset(corpus, lexicons, om::DatasetMode::kLabeled));
  }
}
BENCHMARK(BM_BuildDataset);

void BM_ExtractTriples(benchmark::State &state) {
  const om::Corpus &corpus = mini_corpus();
  std::vector<om::ExtractionInput> inputs;
  for (const auto &doc : corpus.documents) {
    if (!doc.parses) continue;
    for (const auto &g : *doc.parses) {
      inputs.push_back({doc.doc_id, g.sentence_index, &g});
    }
  }
  const om::WordSet stop = om::Lexicons::defaults().stop_words;
  for (auto _ : state) benchmark::DoNotOptimize(om::extract_triples(inputs, stop));
}
BENCHMARK(BM_ExtractTriples);

}  // namespace
BENCHMARK_MAIN();
