#include "opinion_miner/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "opinion_miner/config.h"
#include "opinion_miner/corpus.h"
#include "opinion_miner/error.h"
#include "opinion_miner/evaluation.h"
#include "opinion_miner/features.h"
#include "opinion_miner/lexicons.h"
#include "opinion_miner/naive_bayes.h"
#include "opinion_miner/reliability.h"
#include "opinion_miner/rules.h"
#include "opinion_miner/text.h"

#ifndef OPINION_MINER_VERSION
#define OPINION_MINER_VERSION "0.0.0"
#endif

namespace opinion_miner {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string_view version() { return OPINION_MINER_VERSION; }

namespace {

constexpr const char *kConfigEnv = "OPINION_MINER_CONFIG";

class StageError : public std::runtime_error {
 public:
  StageError(int code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

// Reads stage inputs and writes stage outputs under the output directory,
// recording content hashes for the run manifest.
class StageRun {
 public:
  StageRun(std::string stage, const PipelineConfig &config, std::ostream &out)
      : stage_(std::move(stage)), config_(config), out_(out) {}

  const PipelineConfig &config() const { return config_; }
  fs::path dir() const { return config_.output; }
  std::ostream &log() { return out_; }

  void require(const fs::path &path) const {
    if (!fs::exists(path)) {
      throw StageError(kExitMissingInput,
                       "missing input " + path.string() +
                           " (run the previous stage first)");
    }
  }

  // Reads an artifact of an earlier stage.
  std::string read_artifact(const std::string &name) {
    const fs::path path = dir() / name;
    require(path);
    std::string content = read_file(path);
    inputs_[name] = hex64(fnv1a64(content));
    return content;
  }

  // Reads a user-supplied file named by a config key.
  std::string read_external(const std::string &key, const fs::path &path) {
    require(path);
    std::string content = read_file(path);
    inputs_[key] = hex64(fnv1a64(content));
    return content;
  }

  void record_input(const std::string &key, std::string_view content) {
    inputs_[key] = hex64(fnv1a64(content));
  }

  void write(const std::string &name, const std::string &content) {
    write_file(dir() / name, content);
    outputs_[name] = hex64(fnv1a64(content));
  }

  json &extra() { return extra_; }

  void finish() {
    json m;
    m["stage"] = stage_;
    m["version"] = std::string(version());
    m["config_hash"] = hex64(fnv1a64(config_.canonical()));
    m["inputs"] = inputs_;
    m["outputs"] = outputs_;
    for (auto it = extra_.begin(); it != extra_.end(); ++it) {
      m[it.key()] = it.value();
    }
    write_file(dir() / (stage_ + ".manifest.json"), m.dump(2) + "\n");
  }

 private:
  std::string stage_;
  const PipelineConfig &config_;
  std::ostream &out_;
  json inputs_ = json::object();
  json outputs_ = json::object();
  json extra_ = json::object();
};

Lexicons load_lexicons(StageRun &run) {
  const PipelineConfig &c = run.config();
  Lexicons lex = Lexicons::defaults();
  const std::tuple<const char *, const std::optional<fs::path> &,
                   std::set<std::string, std::less<>> &>
      lists[] = {
          {"positive_seeds", c.positive_seeds, lex.positive_seeds},
          {"negative_seeds", c.negative_seeds, lex.negative_seeds},
          {"negation_words", c.negation_words, lex.negation_words},
          {"modifier_words", c.modifier_words, lex.modifier_words},
          {"stop_words", c.stop_words, lex.stop_words},
      };
  for (const auto &[key, path, words] : lists) {
    if (!path) continue;
    run.read_external(key, *path);
    words = read_word_list(*path);
  }
  lex.validate();
  return lex;
}

LabelAliasMap load_aliases(StageRun &run) {
  LabelAliasMap aliases = LabelAliasMap::defaults();
  if (run.config().alias_map) {
    run.read_external("alias_map", *run.config().alias_map);
    aliases.load(*run.config().alias_map);
  }
  return aliases;
}

Corpus read_ingest(StageRun &run) {
  for (const char *name : {"documents.tsv", "sentences.tsv", "parses.dep"}) {
    run.read_artifact(name);
  }
  return read_ingest_export(run.dir());
}

std::map<std::string, std::string> read_doc_categories(StageRun &run) {
  const std::string content = run.read_artifact("documents.tsv");
  std::map<std::string, std::string> out;
  for (std::string_view line : split(content, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() >= 2) out[std::string(f[1])] = std::string(f[0]);
  }
  return out;
}

struct SentencePrediction {
  std::string doc_id;
  int sentence_index = 0;
  Label label = Label::kObjective;
  double probability = 0.0;
};

std::vector<SentencePrediction> parse_predictions(std::string_view content,
                                                  const std::string &source) {
  std::vector<SentencePrediction> out;
  int line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    auto label = f.size() == 4 ? parse_label(f[2]) : std::nullopt;
    if (!label) {
      throw ParseError(source, line_no,
                       "expected 'doc_id<TAB>sentence<TAB>S|O<TAB>prob'");
    }
    try {
      out.push_back({std::string(f[0]), static_cast<int>(parse_int(f[1])),
                     *label, parse_double(f[3])});
    } catch (const InvalidArgument &e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return out;
}

const char *kTripleHeader =
    "#doc_id\tsentence\tfeature\tmodifier\topinion\trule\n";
const char *kPairHeader =
    "#category\tfeature\topinion\tinitial_hs\tfinal_hs\treliability\n";
const char *kDocHeader =
    "#category\tdoc_id\tinitial_as\tfinal_as\tnormalized_as\n";

// ---------------------------------------------------------------- stages

void stage_ingest(StageRun &run) {
  const PipelineConfig &c = run.config();
  if (!c.corpus) throw StageError(kExitConfig, "no corpus configured");
  run.require(*c.corpus);
  if (!fs::is_directory(*c.corpus)) {
    throw StageError(kExitConfig,
                     "corpus is not a directory: " + c.corpus->string());
  }
  LoadOptions options;
  options.aliases = load_aliases(run);
  if (c.labels) {
    run.read_external("labels", *c.labels);
    options.labels_path = *c.labels;
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::recursive_directory_iterator(*c.corpus)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".txt" || ext == ".conllu")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const fs::path &f : files) {
    run.record_input(
        "corpus/" + fs::relative(f, *c.corpus).generic_string(),
        read_file(f));
  }

  Corpus corpus = load_corpus(*c.corpus, options);
  for (const std::string &w : corpus.warnings) {
    run.log() << "ingest: warning: " << w << '\n';
  }
  IngestExport exports = format_ingest_export(corpus);
  run.write("documents.tsv", exports.documents_tsv);
  run.write("sentences.tsv", exports.sentences_tsv);
  run.write("parses.dep", exports.parses);

  int sentences = 0;
  int parsed = 0;
  for (const ReviewDocument &d : corpus.documents) {
    sentences += static_cast<int>(d.sentences.size());
    parsed += d.parses ? 1 : 0;
  }
  run.extra()["documents"] = corpus.size();
  run.extra()["sentences"] = sentences;
  run.extra()["documents_with_parse"] = parsed;
  run.extra()["categories"] = corpus.categories;
  run.extra()["warnings"] = corpus.warnings;
  run.log() << "ingest: " << corpus.size() << " documents, " << sentences
            << " sentences, " << corpus.categories.size() << " categories\n";
}

void stage_featurize(StageRun &run) {
  Corpus corpus = read_ingest(run);
  Lexicons lex = load_lexicons(run);
  Dataset dataset = build_dataset(corpus, lex, DatasetMode::kAny);
  run.write("dataset.csv", format_dataset_csv(dataset));

  Dataset labeled;
  for (const FeatureVector &v : dataset.vectors) {
    if (v.class_label) labeled.vectors.push_back(v);
  }
  std::ostringstream ig;
  ig << "#attribute\tinfo_gain_bits\n";
  if (!labeled.vectors.empty()) {
    for (const auto &[attribute, gain] : rank_attributes(labeled, 10)) {
      ig << attribute_name(attribute) << '\t' << format_fixed(gain, 6) << '\n';
    }
  }
  run.write("info_gain.tsv", ig.str());
  run.extra()["vectors"] = dataset.vectors.size();
  run.extra()["labeled_vectors"] = labeled.vectors.size();
  run.log() << "featurize: " << dataset.vectors.size() << " vectors ("
            << labeled.vectors.size() << " labeled)\n";
}

std::array<ConfusionCounts, 2> token_confusion(const NBModel &model,
                                               const Dataset &data) {
  std::vector<std::pair<Label, Label>> pairs;
  for (const FeatureVector &v : data.vectors) {
    pairs.emplace_back(predict_token(model, v).label, *v.class_label);
  }
  return class_confusion(pairs);
}

void stage_train(StageRun &run) {
  const PipelineConfig &c = run.config();
  Dataset all = parse_dataset_csv(run.read_artifact("dataset.csv"),
                                  (run.dir() / "dataset.csv").string());
  Dataset labeled;
  for (const FeatureVector &v : all.vectors) {
    if (v.class_label) labeled.vectors.push_back(v);
  }
  if (labeled.vectors.empty()) {
    throw StageError(kExitConfig,
                     "dataset.csv has no labeled vectors (configure labels)");
  }
  Dataset train_set = labeled;
  std::optional<Dataset> test_set;
  if (c.holdout > 0.0) {
    auto [tr, te] = train_test_split(labeled, c.holdout, c.seed);
    train_set = std::move(tr);
    test_set = std::move(te);
  }
  TrainOptions options;
  options.variance_floor = c.variance_floor;
  options.tie_label = c.tie_label;
  NBModel model = train(train_set, options);
  run.write("model.txt", format_model(model));

  std::ostringstream report;
  auto section = [&](const std::string &title, const Dataset &data) {
    auto rows = class_report(token_confusion(model, data));
    report << title << " (" << data.vectors.size() << " token vectors)\n"
           << format_metric_table(rows) << '\n';
  };
  section("training set", train_set);
  if (test_set && !test_set->vectors.empty()) section("held-out set", *test_set);
  run.write("train_report.txt", report.str());
  run.extra()["train_vectors"] = train_set.vectors.size();
  run.extra()["test_vectors"] = test_set ? test_set->vectors.size() : 0;
  run.log() << "train: " << train_set.vectors.size() << " vectors\n";
}

void stage_classify(StageRun &run) {
  NBModel model = parse_model(run.read_artifact("model.txt"),
                              (run.dir() / "model.txt").string());
  Corpus corpus = read_ingest(run);
  Lexicons lex = load_lexicons(run);
  CorpusStats stats(corpus);

  std::ostringstream sentences;
  std::ostringstream tokens;
  sentences << "#doc_id\tsentence\tlabel\tp_subjective\n";
  tokens << "#doc_id\tsentence\ttoken\tsurface\tlabel\tp_subjective\n";
  std::vector<std::pair<Label, Label>> scored_pairs;
  std::vector<ScoredPrediction> scored;
  int subjective = 0;
  int total = 0;
  for (const ReviewDocument &doc : corpus.documents) {
    const auto features = featurize_document(doc, stats, lex);
    for (size_t s = 0; s < features.size(); ++s) {
      const SentenceFeatures &sf = features[s];
      SentenceVerdict verdict;  // no featurizable tokens: O with P(S) = 0
      if (!sf.vectors.empty()) verdict = classify_sentence(model, sf.vectors);
      sentences << doc.doc_id << '\t' << sf.sentence_index << '\t'
                << label_symbol(verdict.label) << '\t'
                << format_fixed(verdict.subjective_probability, 6) << '\n';
      for (size_t t = 0; t < verdict.tokens.size(); ++t) {
        const TokenPrediction &p = verdict.tokens[t];
        const Token &token =
            doc.sentences[s].tokens[static_cast<size_t>(sf.token_indices[t])];
        tokens << doc.doc_id << '\t' << sf.sentence_index << '\t'
               << sf.token_indices[t] << '\t' << token.surface << '\t'
               << label_symbol(p.label) << '\t'
               << format_fixed(p.p_subjective, 6) << '\n';
        if (doc.label) {
          scored_pairs.emplace_back(p.label, *doc.label);
          scored.push_back({p.p_subjective, *doc.label == Label::kSubjective});
        }
      }
      subjective += verdict.label == Label::kSubjective ? 1 : 0;
      ++total;
    }
  }
  run.write("predictions.tsv", sentences.str());
  run.write("token_predictions.tsv", tokens.str());

  if (!scored_pairs.empty()) {
    std::ostringstream report;
    report << "token-level, against document labels ("
           << scored_pairs.size() << " token vectors)\n"
           << format_metric_table(class_report(class_confusion(scored_pairs)));
    bool both = false;
    for (const ScoredPrediction &p : scored) both |= p.positive != scored[0].positive;
    if (both) {
      auto points = roc_points(scored);
      run.write("roc.csv", format_roc_csv(points));
      report << "# ROC area under curve: "
             << format_fixed(area_under_curve(points), 6) << '\n';
    } else {
      report << "# ROC not computed: only one class among labeled tokens\n";
    }
    run.write("classification_report.txt", report.str());
  }
  run.extra()["sentences"] = total;
  run.extra()["subjective_sentences"] = subjective;
  run.log() << "classify: " << subjective << " of " << total
            << " sentences subjective\n";
}

void stage_extract(StageRun &run) {
  const std::string pred_name = "predictions.tsv";
  auto predictions = parse_predictions(run.read_artifact(pred_name),
                                       (run.dir() / pred_name).string());
  Corpus corpus = read_ingest(run);
  Lexicons lex = load_lexicons(run);

  std::map<std::pair<std::string, int>, const DepGraph *> graphs;
  for (const ReviewDocument &d : corpus.documents) {
    if (!d.parses) continue;
    for (const DepGraph &g : *d.parses) {
      graphs[{d.doc_id, g.sentence_index}] = &g;
    }
  }
  std::vector<ExtractionInput> inputs;
  for (const SentencePrediction &p : predictions) {
    if (p.label != Label::kSubjective) continue;
    auto it = graphs.find({p.doc_id, p.sentence_index});
    inputs.push_back({p.doc_id, p.sentence_index,
                      it == graphs.end() ? nullptr : it->second});
  }
  ExtractionResult result = extract_triples(inputs, lex.stop_words);
  if (!run.config().include_secondary) {
    std::erase_if(result.triples, [](const Triple &t) { return t.secondary; });
  }
  run.write("triples.tsv", kTripleHeader + format_triples(result.triples));
  if (result.skipped_without_parse > 0) {
    run.log() << "extract: skipped " << result.skipped_without_parse
              << " subjective sentences without a dependency parse\n";
  }
  run.extra()["subjective_sentences"] = inputs.size();
  run.extra()["skipped_without_parse"] = result.skipped_without_parse;
  run.extra()["triples"] = result.triples.size();
  run.log() << "extract: " << result.triples.size() << " triples\n";
}

void stage_score(StageRun &run) {
  const PipelineConfig &c = run.config();
  std::vector<Triple> triples = parse_triples(
      run.read_artifact("triples.tsv"), (run.dir() / "triples.tsv").string());
  const auto categories = read_doc_categories(run);

  std::map<std::string, std::vector<Triple>> by_category;
  for (const Triple &t : triples) {
    auto it = categories.find(t.doc_id);
    if (it == categories.end()) {
      throw StageError(kExitConfig, "triples.tsv names unknown document '" +
                                        t.doc_id + "'");
    }
    by_category[it->second].push_back(t);
  }

  HitsOptions options;
  options.eps = c.hits_eps;
  options.max_iter = c.hits_max_iter;
  std::vector<PairScore> pairs;
  std::vector<PairScore> removed;
  std::vector<DocumentScore> docs;
  std::set<std::tuple<std::string, std::string, std::string>> kept;
  json per_category = json::object();
  bool converged = true;
  for (const auto &[category, group] : by_category) {
    ScoreTable table = score_category(group, category, options);
    FilterResult filtered = filter_noisy(table.pairs, c.tau);
    for (const PairScore &p : filtered.kept) {
      kept.emplace(category, p.feature, p.opinion);
    }
    pairs.insert(pairs.end(), table.pairs.begin(), table.pairs.end());
    removed.insert(removed.end(), filtered.removed.begin(),
                   filtered.removed.end());
    docs.insert(docs.end(), table.documents.begin(), table.documents.end());
    per_category[category] = {{"iterations", table.iterations},
                              {"converged", table.converged},
                              {"pairs", table.pairs.size()},
                              {"removed", filtered.removed.size()}};
    converged = converged && table.converged;
    if (!table.converged) {
      run.log() << "score: warning: category '" << category
                << "' did not converge within " << c.hits_max_iter
                << " iterations\n";
    }
  }

  std::vector<Triple> surviving;
  for (const Triple &t : triples) {
    if (kept.count({categories.at(t.doc_id), to_lower(t.feature_text()),
                    to_lower(t.opinion)})) {
      surviving.push_back(t);
    }
  }
  run.write("pair_scores.tsv", kPairHeader + format_pair_scores(pairs));
  run.write("document_scores.tsv", kDocHeader + format_document_scores(docs));
  run.write("removed_pairs.tsv", kPairHeader + format_pair_scores(removed));
  run.write("filtered_triples.tsv", kTripleHeader + format_triples(surviving));
  run.extra()["converged"] = converged;
  run.extra()["categories"] = per_category;
  run.log() << "score: " << pairs.size() << " pairs, " << removed.size()
            << " removed at tau " << format_double(c.tau) << '\n';
}

void stage_evaluate(StageRun &run) {
  const PipelineConfig &c = run.config();
  if (!c.gold) throw StageError(kExitConfig, "no gold pair file configured");
  const std::string gold_text = run.read_external("gold", *c.gold);
  const auto gold = parse_gold_pairs(gold_text, c.gold->string());
  if (gold.empty()) {
    throw StageError(kExitConfig, "no gold pairs in " + c.gold->string());
  }
  const auto categories = read_doc_categories(run);
  const auto raw = parse_triples(run.read_artifact("triples.tsv"),
                                 (run.dir() / "triples.tsv").string());
  const auto filtered =
      parse_triples(run.read_artifact("filtered_triples.tsv"),
                    (run.dir() / "filtered_triples.tsv").string());

  const auto filtered_rows = extraction_report(
      evaluate_extraction(filtered, gold, categories), c.macro_mode);
  const auto raw_rows = extraction_report(
      evaluate_extraction(raw, gold, categories), c.macro_mode);
  std::ostringstream text;
  const char *mode = c.macro_mode == MacroMode::kPooled ? "pooled" : "mean";
  text << "pair extraction after noise filtering (macro mode: " << mode
       << ")\n"
       << format_metric_table(filtered_rows) << '\n'
       << "pair extraction before noise filtering (macro mode: " << mode
       << ")\n"
       << format_metric_table(raw_rows);
  run.write("metrics.txt", text.str());
  run.write("metrics.tsv", format_metric_rows(filtered_rows));
  run.write("metrics_raw.tsv", format_metric_rows(raw_rows));
  const MetricRow &macro = filtered_rows.back().metrics;
  run.extra()["gold_pairs"] = gold.size();
  run.log() << "evaluate: macro P=" << format_fixed(macro.precision, 3)
            << " R=" << format_fixed(macro.recall, 3)
            << " F=" << format_fixed(macro.f_score, 3) << '\n';
}

using StageFn = void (*)(StageRun &);

const std::vector<std::pair<std::string, StageFn>> &stages() {
  static const std::vector<std::pair<std::string, StageFn>> list = {
      {"ingest", stage_ingest},   {"featurize", stage_featurize},
      {"train", stage_train},     {"classify", stage_classify},
      {"extract", stage_extract}, {"score", stage_score},
      {"evaluate", stage_evaluate},
  };
  return list;
}

int run_stage(const std::string &name, StageFn fn, const PipelineConfig &c,
              std::ostream &out, std::ostream &err) {
  try {
    StageRun run(name, c, out);
    fn(run);
    run.finish();
    return kExitOk;
  } catch (const StageError &e) {
    err << "error: " << name << ": " << e.what() << '\n';
    return e.code();
  } catch (const std::exception &e) {
    err << "error: " << name << ": " << e.what() << '\n';
    return kExitConfig;
  }
}

std::string flag_name(const std::string &key) {
  std::string s = "--" + key;
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

const std::map<std::string, std::string> &key_help() {
  static const std::map<std::string, std::string> help = {
      {"alias_map", "dependency label alias file (alias<TAB>canonical)"},
      {"corpus", "corpus root: <root>/<category>/<doc_id>.txt [+ .conllu]"},
      {"gold", "gold pairs (doc_id<TAB>feature<TAB>opinion)"},
      {"hits_eps", "hub/authority convergence threshold (default 0.0001)"},
      {"hits_max_iter", "hub/authority iteration cap (default 1000)"},
      {"holdout", "fraction of labeled vectors held out by train (default 0)"},
      {"include_secondary", "keep subject-side Rule 1 triples (default true)"},
      {"labels", "document labels (doc_id<TAB>S|O)"},
      {"macro_mode", "pooled or mean (default pooled)"},
      {"modifier_words", "modifier word list"},
      {"negation_words", "negation word list"},
      {"negative_seeds", "negative seed word list"},
      {"output", "directory for stage artifacts (default out)"},
      {"positive_seeds", "positive seed word list"},
      {"seed", "random seed for the held-out split (default 42)"},
      {"stop_words", "stop word list"},
      {"tau", "reliability threshold for noisy pairs (default 0.05)"},
      {"tie_label", "label on exact posterior ties, S or O (default O)"},
      {"variance_floor", "minimum tf-idf variance (default 1e-9)"},
  };
  return help;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Subjectivity classification, opinion triple extraction and "
               "reliability scoring for product reviews.",
               "opinion_miner"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  app.add_option("-c,--config", config_path,
                 std::string("key=value config file (fallback: $") +
                     kConfigEnv + ")");
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option *> options;
  for (const std::string &key : config_keys()) {
    std::string names = flag_name(key);
    if (key == "output") names = "-o," + names;
    options[key] = app.add_option(names, values[key], key_help().at(key));
  }

  std::map<std::string, CLI::App *> subcommands;
  const std::map<std::string, std::string> descriptions = {
      {"ingest", "load the corpus; write documents.tsv, sentences.tsv, "
                 "parses.dep"},
      {"featurize", "write dataset.csv and info_gain.tsv"},
      {"train", "train naive Bayes on dataset.csv; write model.txt"},
      {"classify", "label sentences S/O; write predictions.tsv"},
      {"extract", "apply the dependency rules to subjective sentences; write "
                  "triples.tsv"},
      {"score", "hub/authority reliability; write pair_scores.tsv, "
                "document_scores.tsv, removed_pairs.tsv"},
      {"evaluate", "score filtered triples against gold pairs; write "
                   "metrics.txt"},
      {"pipeline", "run every stage in order"},
  };
  for (const auto &[name, fn] : stages()) {
    (void)fn;
    subcommands[name] = app.add_subcommand(name, descriptions.at(name));
  }
  subcommands["pipeline"] =
      app.add_subcommand("pipeline", descriptions.at("pipeline"));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  // Precedence: flag > config file > built-in default.
  if (config_path.empty()) {
    if (const char *env = std::getenv(kConfigEnv); env && *env) {
      config_path = env;
    }
  }
  PipelineConfig config;
  std::vector<std::string> problems;
  if (!config_path.empty()) {
    if (!fs::exists(config_path)) {
      problems.push_back("config file not found: " + config_path);
    } else {
      ConfigFile file = read_config_file(config_path);
      config = file.config;
      problems = file.errors;
    }
  }
  for (const auto &[key, option] : options) {
    if (option->count() == 0) continue;
    if (auto e = config.set(key, values[key], fs::path())) {
      problems.push_back(flag_name(key) + ": " + *e);
    }
  }
  for (const std::string &v : config.violations()) problems.push_back(v);
  if (!problems.empty()) {
    for (const std::string &p : problems) err << "error: config: " << p << '\n';
    return kExitConfig;
  }

  std::string chosen;
  for (const auto &[name, sub] : subcommands) {
    if (sub->parsed()) chosen = name;
  }
  if (chosen != "pipeline") {
    for (const auto &[name, fn] : stages()) {
      if (name == chosen) return run_stage(name, fn, config, out, err);
    }
    return kExitConfig;
  }
  for (const auto &[name, fn] : stages()) {
    if (name == "evaluate" && !config.gold) {
      out << "evaluate: skipped, no gold pair file configured\n";
      continue;
    }
    if (int code = run_stage(name, fn, config, out, err); code != kExitOk) {
      err << "error: pipeline stopped at stage '" << name << "'\n";
      return code;
    }
  }
  return kExitOk;
}

int run_cli(int argc, const char *const *argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace opinion_miner
