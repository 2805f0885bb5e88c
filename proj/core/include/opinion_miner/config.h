#ifndef OPINION_MINER_CONFIG_H_
#define OPINION_MINER_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opinion_miner/evaluation.h"
#include "opinion_miner/tokens.h"

namespace opinion_miner {

// Settings shared by every pipeline stage. Read from a key=value file, then
// overridden key by key from the command line.
struct PipelineConfig {
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> labels;
  std::optional<std::filesystem::path> alias_map;
  std::optional<std::filesystem::path> stop_words;
  std::optional<std::filesystem::path> positive_seeds;
  std::optional<std::filesystem::path> negative_seeds;
  std::optional<std::filesystem::path> negation_words;
  std::optional<std::filesystem::path> modifier_words;
  std::optional<std::filesystem::path> gold;
  std::filesystem::path output = "out";

  double hits_eps = 1e-4;
  int hits_max_iter = 1000;
  double tau = 0.05;
  double variance_floor = 1e-9;
  Label tie_label = Label::kObjective;
  std::uint64_t seed = 42;
  double holdout = 0.0;  // fraction of vectors held out by `train`
  bool include_secondary = true;
  MacroMode macro_mode = MacroMode::kPooled;

  // Sets one key from its textual value. Relative paths are resolved
  // against `base_dir`. Returns an error message instead of throwing so
  // callers can collect every problem at once.
  std::optional<std::string> set(std::string_view key, std::string_view value,
                                 const std::filesystem::path &base_dir);

  // Range and path-existence checks; empty when the config is usable.
  std::vector<std::string> violations() const;

  // Canonical "key=value" listing of every setting, in key order.
  std::string canonical() const;
};

// All keys accepted by PipelineConfig::set, sorted.
const std::vector<std::string> &config_keys();

struct ConfigFile {
  PipelineConfig config;
  std::vector<std::string> errors;  // "path:line: message"
};

// Parses key=value lines ('#' comments, blank lines ignored) on top of the
// defaults. Relative paths resolve against the file's directory.
ConfigFile read_config_file(const std::filesystem::path &path);
ConfigFile parse_config(std::string_view content, const std::string &source,
                        const std::filesystem::path &base_dir);

}  // namespace opinion_miner

#endif  // OPINION_MINER_CONFIG_H_
