#pragma once

#include <filesystem>
#include <string>

#include "gekg/config.hpp"

namespace gekg {

enum class EmbedMode : std::uint8_t { pretrain, update };
EmbedMode parse_embed_mode(std::string_view s);

/// Output layout under RunConfig::output_dir.
namespace layout {
std::filesystem::path profiles(const RunConfig& c, const std::string& dataset);
std::filesystem::path domain_kg(const RunConfig& c);
std::filesystem::path full_kg(const RunConfig& c);
std::filesystem::path links(const RunConfig& c);
std::filesystem::path stats(const RunConfig& c);
std::filesystem::path domain_model(const RunConfig& c);
std::filesystem::path full_model(const RunConfig& c);
std::filesystem::path folds(const RunConfig& c, const std::string& dataset);
std::filesystem::path report(const RunConfig& c, const std::string& stem, const std::string& ext);
std::filesystem::path patient_embeddings(const RunConfig& c);
}  // namespace layout

/// Each command checks its inputs before doing any work, logs "stage=... duration_s=..."
/// lines at info level, and returns the seconds it took.
double cmd_preprocess(const RunConfig& config);
double cmd_build_kg(const RunConfig& config);
double cmd_embed(const RunConfig& config, EmbedMode mode);
double cmd_evaluate(const RunConfig& config);
double cmd_ablate(const RunConfig& config);
double cmd_gen_synthetic(const RunConfig& config);
double cmd_export_embeddings(const RunConfig& config);

/// 0 success, 1 ValidationError, 2 any other error.
int exit_code_for(const std::exception& e);

}  // namespace gekg
