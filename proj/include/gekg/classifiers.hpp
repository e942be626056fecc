#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gekg/common.hpp"
#include "gekg/embedder.hpp"
#include "gekg/expression.hpp"
#include "gekg/training.hpp"

namespace gekg {

enum class FeatureSpace : std::uint8_t { embedding, expression_all, expression_overlap, random };
std::string_view to_string(FeatureSpace s);

struct FeatureDataset {
  std::vector<std::string> patient_ids;
  /// One row per patient.
  Eigen::MatrixXd features;
  std::vector<int> labels;
  FeatureSpace space = FeatureSpace::embedding;
  /// Gene symbols for the expression spaces, empty otherwise.
  std::vector<std::string> columns;

  std::size_t size() const { return patient_ids.size(); }
  std::size_t width() const { return static_cast<std::size_t>(features.cols()); }
  /// Rows `idx` in the given order.
  FeatureDataset subset(std::span<const std::size_t> idx) const;
};

enum class BaselineMode : std::uint8_t { all, overlap };

/// Raw z-profiles of every patient of `datasets`, in dataset order. `all` uses the union of
/// gene sets with absent genes set to 0; `overlap` the intersection, and throws DataError
/// ("no common genes") when it is empty.
FeatureDataset make_baseline_features(std::span<const Dataset> datasets, BaselineMode mode);

/// Input vectors of the patient tokens from an embedding model.
FeatureDataset make_embedding_features(const EmbeddingModel& model, std::span<const std::string> patient_ids,
                                       std::span<const std::string> tokens, std::span<const int> labels);

enum class Activation : std::uint8_t { relu, tanh };
enum class Solver : std::uint8_t { sgd, adam };
enum class LrSchedule : std::uint8_t { constant, adaptive };
std::string_view to_string(Activation a);
std::string_view to_string(Solver s);
std::string_view to_string(LrSchedule s);
Activation parse_activation(std::string_view s);
Solver parse_solver(std::string_view s);
LrSchedule parse_schedule(std::string_view s);
/// "100", "50,50", "30,20,10".
std::vector<std::size_t> parse_hidden_sizes(std::string_view s);

struct MlpParams {
  std::vector<std::size_t> hidden{100};
  Activation activation = Activation::relu;
  Solver solver = Solver::adam;
  double alpha = 1e-4;
  LrSchedule schedule = LrSchedule::constant;
  double learning_rate_init = 1e-3;
  std::size_t epochs = 200;
  std::size_t batch_size = 200;
  /// Used by sgd only.
  double momentum = 0.9;

  /// Layer sizes, activation, solver, alpha and schedule must come from the tuning grid.
  void validate() const;
  bool operator==(const MlpParams&) const = default;
};

struct MlpModel {
  MlpParams params;
  std::uint64_t seed = 0;
  /// weights[l] is in_l x out_l; the last layer has 2 outputs.
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::RowVectorXd> biases;
  std::vector<double> epoch_losses;

  std::size_t in_width() const { return weights.empty() ? 0 : static_cast<std::size_t>(weights.front().rows()); }
  bool operator==(const MlpModel&) const = default;
};

/// Glorot-uniform weights and biases.
MlpModel init_mlp(std::size_t in_width, const MlpParams& params, std::uint64_t seed);

Eigen::MatrixXd mlp_forward(const MlpModel& model, const Eigen::MatrixXd& x);

struct MlpGradients {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::RowVectorXd> biases;
};

/// Mean cross-entropy over rows with label >= 0 plus alpha / (2 n) times the squared weight
/// norm, n being the labelled row count.
double mlp_loss(const MlpModel& model, const Eigen::MatrixXd& x, std::span<const int> labels, MlpGradients* grads);

/// Mini-batch training over rows with label >= 0. Needs at least two of them.
MlpModel train_mlp(const Eigen::MatrixXd& x, std::span<const int> labels, const MlpParams& params, std::uint64_t seed);
inline MlpModel train_mlp(const FeatureDataset& train, const MlpParams& params, std::uint64_t seed) {
  return train_mlp(train.features, train.labels, params, seed);
}

Prediction predict_mlp(const MlpModel& model, const Eigen::MatrixXd& x);

void save_mlp(const MlpModel& model, std::ostream& out);
void save_mlp(const MlpModel& model, const std::filesystem::path& path);
MlpModel load_mlp(std::istream& in);
MlpModel load_mlp(const std::filesystem::path& path);

}  // namespace gekg
