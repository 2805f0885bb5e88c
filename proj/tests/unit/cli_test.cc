#include "opinion_miner/cli.h"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "opinion_miner/text.h"
#include "test_support.h"

namespace opinion_miner {
namespace {

namespace fs = std::filesystem;
using testing::fixture;
using testing::TempDir;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string mini_conf() { return fixture("mini/pipeline.conf").string(); }

// Stage exports compared byte for byte. Manifests are left out: their
// config hash covers absolute paths.
const std::vector<std::string> &golden_files() {
  static const std::vector<std::string> files = {
      "documents.tsv",    "sentences.tsv",      "parses.dep",
      "dataset.csv",      "info_gain.tsv",      "model.txt",
      "train_report.txt", "predictions.tsv",    "token_predictions.tsv",
      "classification_report.txt", "roc.csv",   "triples.tsv",
      "pair_scores.tsv",  "document_scores.tsv", "removed_pairs.tsv",
      "filtered_triples.tsv", "metrics.txt",    "metrics.tsv",
      "metrics_raw.tsv"};
  return files;
}

std::vector<std::string> produced_files(const fs::path &dir) {
  std::vector<std::string> out;
  for (const auto &e : fs::directory_iterator(dir)) {
    out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Cli, PipelineMatchesGoldenOutputs) {
  TempDir dir("pipeline");
  const auto start = std::chrono::steady_clock::now();
  CliRun r = cli({"pipeline", "--config", mini_conf(), "--output",
               dir.path().string()});
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LT(seconds, 5.0);
  for (const std::string &name : golden_files()) {
    ASSERT_TRUE(fs::exists(dir / name)) << name;
    EXPECT_EQ(read_file(dir / name), read_file(fixture("mini/golden/" + name)))
        << name;
  }
  const auto score = nlohmann::json::parse(read_file(dir / "score.manifest.json"));
  EXPECT_EQ(score["stage"], "score");
  EXPECT_EQ(score["converged"], true);
  for (const auto &[category, info] : score["categories"].items()) {
    EXPECT_EQ(info["converged"], true) << category;
    EXPECT_LT(info["iterations"].get<int>(), 200) << category;
  }
}

TEST(Cli, RunsAreReproducible) {
  TempDir a("repro_a");
  TempDir b("repro_b");
  ASSERT_EQ(cli({"pipeline", "-c", mini_conf(), "-o", a.path().string()}).code,
            kExitOk);
  ASSERT_EQ(cli({"pipeline", "-c", mini_conf(), "-o", b.path().string()}).code,
            kExitOk);
  ASSERT_EQ(produced_files(a.path()), produced_files(b.path()));
  for (const std::string &name : produced_files(a.path())) {
    if (name.find(".manifest.json") != std::string::npos) {
      auto ja = nlohmann::json::parse(read_file(a / name));
      auto jb = nlohmann::json::parse(read_file(b / name));
      EXPECT_EQ(ja["outputs"], jb["outputs"]) << name;
      continue;
    }
    EXPECT_EQ(read_file(a / name), read_file(b / name)) << name;
  }
}

TEST(Cli, StagesRerunFromTheirInputsAlone) {
  TempDir dir("isolation");
  ASSERT_EQ(cli({"pipeline", "-c", mini_conf(), "-o", dir.path().string()}).code,
            kExitOk);
  for (const char *stage : {"featurize", "train", "classify", "extract",
                            "score", "evaluate"}) {
    std::map<std::string, std::string> before;
    for (const std::string &name : produced_files(dir.path())) {
      before[name] = read_file(dir / name);
    }
    CliRun r = cli({stage, "-c", mini_conf(), "-o", dir.path().string()});
    ASSERT_EQ(r.code, kExitOk) << stage << ": " << r.err;
    for (const auto &[name, content] : before) {
      if (name.find(".manifest.json") != std::string::npos) continue;
      EXPECT_EQ(read_file(dir / name), content) << stage << " changed " << name;
    }
  }
}

TEST(Cli, MissingStageInputExitsTwo) {
  TempDir dir("missing");
  CliRun r = cli({"train", "-c", mini_conf(), "-o", dir.path().string()});
  EXPECT_EQ(r.code, kExitMissingInput);
  EXPECT_NE(r.err.find("dataset.csv"), std::string::npos) << r.err;
  CliRun score = cli({"score", "-o", dir.path().string()});
  EXPECT_EQ(score.code, kExitMissingInput);
  EXPECT_NE(score.err.find("triples.tsv"), std::string::npos) << score.err;
}

TEST(Cli, PipelineReportsTheFailingStage) {
  TempDir dir("nocorpus");
  CliRun r = cli({"pipeline", "-o", dir.path().string()});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_NE(r.err.find("pipeline stopped at stage 'ingest'"), std::string::npos)
      << r.err;
}

TEST(Cli, EmptyGoldFileIsAnError) {
  TempDir dir("gold");
  write_file(dir / "empty_gold.tsv", "# nothing here\n");
  ASSERT_EQ(cli({"pipeline", "-c", mini_conf(), "-o", dir.path().string()}).code,
            kExitOk);
  CliRun r = cli({"evaluate", "-c", mini_conf(), "-o", dir.path().string(),
               "--gold", (dir / "empty_gold.tsv").string()});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("no gold pairs"), std::string::npos) << r.err;
}

TEST(Cli, ConfigViolationsAreAllReported) {
  CliRun r = cli({"score", "--tau", "2", "--hits-eps", "0", "-o", "unused"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("tau must lie in [0, 1]"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("hits_eps must be > 0"), std::string::npos) << r.err;
  CliRun bad_value = cli({"score", "--tie-label", "maybe"});
  EXPECT_EQ(bad_value.code, kExitConfig);
  CliRun no_file = cli({"score", "--config", "/no/such/file.conf"});
  EXPECT_EQ(no_file.code, kExitConfig);
  EXPECT_NE(no_file.err.find("config file not found"), std::string::npos);
  EXPECT_EQ(cli({}).code, kExitConfig);
  EXPECT_EQ(cli({"nonsense"}).code, kExitConfig);
}

int removed_pairs(const fs::path &dir) {
  int n = 0;
  const std::string content = read_file(dir / "removed_pairs.tsv");
  for (auto line : split(content, '\n')) {
    n += !line.empty() && line.front() != '#';
  }
  return n;
}

TEST(Cli, FlagOverridesConfigOverridesDefault) {
  TempDir dir("precedence");
  fs::copy_file(fixture("noise/documents.tsv"), dir / "documents.tsv");
  fs::copy_file(fixture("noise/triples.tsv"), dir / "triples.tsv");
  write_file(dir / "strict.conf", "tau = 1.0\n");
  const std::string out = dir.path().string();
  const std::string conf = (dir / "strict.conf").string();

  ASSERT_EQ(cli({"score", "-o", out}).code, kExitOk);
  EXPECT_EQ(removed_pairs(dir.path()), 2);  // default tau 0.05
  ASSERT_EQ(cli({"score", "-o", out, "-c", conf}).code, kExitOk);
  EXPECT_EQ(removed_pairs(dir.path()), 5);  // config tau 1.0
  ASSERT_EQ(cli({"score", "-o", out, "-c", conf, "--tau", "0.05"}).code,
            kExitOk);
  EXPECT_EQ(removed_pairs(dir.path()), 2);  // flag wins

  ::setenv("OPINION_MINER_CONFIG", conf.c_str(), 1);
  CliRun env = cli({"score", "-o", out});
  ::unsetenv("OPINION_MINER_CONFIG");
  ASSERT_EQ(env.code, kExitOk) << env.err;
  EXPECT_EQ(removed_pairs(dir.path()), 5);  // config from the environment
}

TEST(Cli, NoiseFixtureKeepsMultiDocumentPairs) {
  TempDir dir("noise");
  fs::copy_file(fixture("noise/documents.tsv"), dir / "documents.tsv");
  fs::copy_file(fixture("noise/triples.tsv"), dir / "triples.tsv");
  ASSERT_EQ(cli({"score", "-o", dir.path().string()}).code, kExitOk);
  const std::string removed = read_file(dir / "removed_pairs.tsv");
  EXPECT_NE(removed.find("camera\tbox\tplastic"), std::string::npos);
  EXPECT_NE(removed.find("camera\tmanual\tthick"), std::string::npos);
  const std::string kept = read_file(dir / "filtered_triples.tsv");
  for (const char *feature : {"zoom", "battery", "screen", "lens"}) {
    EXPECT_NE(kept.find(feature), std::string::npos) << feature;
  }
  EXPECT_EQ(kept.find("box"), std::string::npos);
}

TEST(Cli, VersionAndHelp) {
  CliRun v = cli({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find(std::string(version())), std::string::npos);
  CliRun h = cli({"--help"});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("pipeline"), std::string::npos);
}

}  // namespace
}  // namespace opinion_miner
