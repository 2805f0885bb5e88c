#include "opinion_miner/config.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"

namespace opinion_miner {

namespace fs = std::filesystem;

namespace {

using PathField = std::optional<fs::path> PipelineConfig::*;

const std::map<std::string, PathField, std::less<>> &path_fields() {
  static const std::map<std::string, PathField, std::less<>> fields = {
      {"alias_map", &PipelineConfig::alias_map},
      {"corpus", &PipelineConfig::corpus},
      {"gold", &PipelineConfig::gold},
      {"labels", &PipelineConfig::labels},
      {"modifier_words", &PipelineConfig::modifier_words},
      {"negation_words", &PipelineConfig::negation_words},
      {"negative_seeds", &PipelineConfig::negative_seeds},
      {"positive_seeds", &PipelineConfig::positive_seeds},
      {"stop_words", &PipelineConfig::stop_words},
  };
  return fields;
}

fs::path resolve(std::string_view value, const fs::path &base_dir) {
  fs::path p{std::string(value)};
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p.lexically_normal();
}

std::optional<bool> parse_bool(std::string_view v) {
  const std::string s = to_lower(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  return std::nullopt;
}

}  // namespace

const std::vector<std::string> &config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto &[name, field] : path_fields()) k.push_back(name);
    for (const char *name :
         {"hits_eps", "hits_max_iter", "holdout", "include_secondary",
          "macro_mode", "output", "seed", "tau", "tie_label",
          "variance_floor"}) {
      k.emplace_back(name);
    }
    std::sort(k.begin(), k.end());
    return k;
  }();
  return keys;
}

std::optional<std::string> PipelineConfig::set(std::string_view key,
                                               std::string_view raw,
                                               const fs::path &base_dir) {
  const std::string_view value = trim(raw);
  auto it = path_fields().find(key);
  if (it != path_fields().end()) {
    if (value.empty()) {
      this->*(it->second) = std::nullopt;
    } else {
      this->*(it->second) = resolve(value, base_dir);
    }
    return std::nullopt;
  }
  try {
    if (key == "output") {
      if (value.empty()) return "output must not be empty";
      output = resolve(value, base_dir);
    } else if (key == "hits_eps") {
      hits_eps = parse_double(value);
    } else if (key == "hits_max_iter") {
      hits_max_iter = static_cast<int>(parse_int(value));
    } else if (key == "tau") {
      tau = parse_double(value);
    } else if (key == "variance_floor") {
      variance_floor = parse_double(value);
    } else if (key == "holdout") {
      holdout = parse_double(value);
    } else if (key == "seed") {
      const long long s = parse_int(value);
      if (s < 0) return "seed must be non-negative";
      seed = static_cast<std::uint64_t>(s);
    } else if (key == "tie_label") {
      auto label = parse_label(value);
      if (!label) return "tie_label must be S or O, got '" +
                         std::string(value) + "'";
      tie_label = *label;
    } else if (key == "include_secondary") {
      auto b = parse_bool(value);
      if (!b) return "include_secondary must be true or false";
      include_secondary = *b;
    } else if (key == "macro_mode") {
      if (value == "pooled") {
        macro_mode = MacroMode::kPooled;
      } else if (value == "mean") {
        macro_mode = MacroMode::kMean;
      } else {
        return "macro_mode must be 'pooled' or 'mean', got '" +
               std::string(value) + "'";
      }
    } else {
      return "unknown key '" + std::string(key) + "'";
    }
  } catch (const InvalidArgument &e) {
    return std::string(key) + ": " + e.what();
  }
  return std::nullopt;
}

std::vector<std::string> PipelineConfig::violations() const {
  std::vector<std::string> out;
  if (!(hits_eps > 0.0)) out.push_back("hits_eps must be > 0");
  if (hits_max_iter < 1) out.push_back("hits_max_iter must be >= 1");
  if (!(tau >= 0.0 && tau <= 1.0)) out.push_back("tau must lie in [0, 1]");
  if (!(variance_floor > 0.0)) out.push_back("variance_floor must be > 0");
  if (!(holdout >= 0.0 && holdout < 1.0)) {
    out.push_back("holdout must lie in [0, 1)");
  }
  for (const auto &[name, field] : path_fields()) {
    const auto &p = this->*field;
    if (p && !fs::exists(*p)) {
      out.push_back(name + ": no such file or directory: " + p->string());
    }
  }
  return out;
}

std::string PipelineConfig::canonical() const {
  std::ostringstream out;
  std::map<std::string, std::string> values;
  for (const auto &[name, field] : path_fields()) {
    const auto &p = this->*field;
    values[name] = p ? p->string() : "";
  }
  values["hits_eps"] = format_double(hits_eps);
  values["hits_max_iter"] = std::to_string(hits_max_iter);
  values["holdout"] = format_double(holdout);
  values["include_secondary"] = include_secondary ? "true" : "false";
  values["macro_mode"] = macro_mode == MacroMode::kPooled ? "pooled" : "mean";
  values["output"] = output.string();
  values["seed"] = std::to_string(seed);
  values["tau"] = format_double(tau);
  values["tie_label"] = std::string(1, label_symbol(tie_label));
  values["variance_floor"] = format_double(variance_floor);
  for (const auto &[k, v] : values) out << k << '=' << v << '\n';
  return out.str();
}

ConfigFile parse_config(std::string_view content, const std::string &source,
                        const fs::path &base_dir) {
  ConfigFile file;
  int line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      file.errors.push_back(source + ":" + std::to_string(line_no) +
                            ": expected key=value");
      continue;
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (auto err = file.config.set(key, line.substr(eq + 1), base_dir)) {
      file.errors.push_back(source + ":" + std::to_string(line_no) + ": " +
                            *err);
    }
  }
  return file;
}

ConfigFile read_config_file(const fs::path &path) {
  return parse_config(read_file(path), path.string(),
                      fs::absolute(path).parent_path());
}

}  // namespace opinion_miner
