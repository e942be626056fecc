#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gekg/harness.hpp"
#include "gekg/synthetic.hpp"

namespace gekg {

struct DatasetPaths {
  std::string name;
  std::filesystem::path series;
  std::filesystem::path probes;
};

/// Everything a command needs. Loaded from an INI file; every field has the default used
/// throughout the library, so an empty file is valid for commands that need no paths.
struct RunConfig {
  std::filesystem::path ontology;
  std::filesystem::path annotations;
  std::filesystem::path output_dir = "out";
  std::vector<DatasetPaths> datasets;
  /// Take ontology, annotations and datasets from the gen-synthetic output directory.
  bool synthetic_inputs = false;

  ExperimentConfig experiment;
  Setting setting = Setting::single;
  std::vector<Method> methods{Method::baseline_all, Method::baseline_overlap, Method::mlp_embed, Method::gcn};
  std::vector<AblationMode> ablations{AblationMode::random_features, AblationMode::unweighted_edges};

  SyntheticSpec synthetic;
  /// Where gen-synthetic writes; defaults to <output_dir>/synthetic.
  std::optional<std::filesystem::path> synthetic_dir;

  /// Patient ids to export; empty exports all.
  std::vector<std::string> export_patients;

  std::filesystem::path synthetic_path() const { return synthetic_dir.value_or(output_dir / "synthetic"); }
  /// Copy with input paths filled in when synthetic_inputs is set.
  RunConfig resolved() const;
  /// Cross-field checks; called by load_config and after command-line overrides.
  void validate() const;
};

/// Sections: [paths] [dataset.NAME] [kg] [walks] [embedding] [gcn] [mlp] [run] [synthetic]
/// [export]. Unknown sections or keys and malformed syntax are a ValidationError.
/// Relative paths resolve against the file's directory.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = ".",
                       const std::string& source = "<stream>");

std::vector<Method> parse_methods(std::string_view list);

}  // namespace gekg
