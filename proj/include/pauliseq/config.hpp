#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pauliseq/experiments.hpp"

namespace pauliseq {

/// Configuration problems carry exit-code semantics (usage/config = 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat dotted-key/value document ("key = value", '#' comments, UTF-8).
/// Unknown keys are rejected by name; numeric parses are locale-independent.
struct ConfigDocument {
  std::map<std::string, std::string> entries;

  static ConfigDocument parse_string(const std::string& text);
  static ConfigDocument parse_file(const std::string& path);
};

struct ResolvedExperiment {
  ExperimentConfig config;
  std::optional<SweepVariable> sweep_variable;
  std::vector<double> sweep_values;
  std::string output_path;
  std::string output_format = "csv";  // csv | json

  /// The canonical flat form (defaults materialized); embeds in JSON output
  /// and re-parses to an identical resolved config.
  FlatConfig resolved() const;
};

/// Validates keys and values and materializes defaults. Throws ConfigError
/// naming the offending key.
ResolvedExperiment resolve_config(const ConfigDocument& doc);

}  // namespace pauliseq
