#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gekg/common.hpp"
#include "gekg/kg.hpp"
#include "gekg/training.hpp"

namespace gekg {

enum class Aggregation : std::uint8_t { avg, max };
std::string_view to_string(Aggregation a);
Aggregation parse_aggregation(std::string_view s);

struct GcnParams {
  std::size_t hidden = 16;
  std::size_t layers = 2;
  double learning_rate = 0.01;
  double dropout = 0.5;
  Aggregation aggregation = Aggregation::avg;
  std::size_t epochs = 1000;

  /// Hidden width, layer count, learning rate and dropout must come from the tuning grid.
  void validate() const;
  bool operator==(const GcnParams&) const = default;
};

struct WeightedEdge {
  std::uint32_t u, v;
  double w;
};

/// Undirected weighted graph in CSR form. Row u lists N(u) in ascending order, u itself
/// included with weight 1. degree(u) is |N(u)| in the graph the rows were built from; it
/// survives restrict() so normalization does not change when far nodes are dropped.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Merges repeated and reversed edges (the largest weight wins) and adds self-loops.
  WeightedGraph(std::size_t n, std::span<const WeightedEdge> edges);

  std::size_t node_count() const { return degree_.size(); }
  std::span<const std::uint32_t> neighbors(std::uint32_t u) const {
    return std::span(cols_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
  }
  std::span<const double> weights(std::uint32_t u) const {
    return std::span(weights_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
  }
  double degree(std::uint32_t u) const { return degree_[u]; }
  /// Edges with u < v, self-loops left out.
  std::vector<WeightedEdge> edges() const;
  /// e_uj / sqrt(|N(u)| |N(j)|) as a sparse matrix.
  const Eigen::SparseMatrix<double, Eigen::RowMajor>& normalized() const { return norm_; }

  /// Subgraph of nodes within `hops` edges of `seeds`. Rows of `features`, `tokens` and
  /// `patients` are carried over. `kept` receives old indices in new order.
  WeightedGraph restrict(std::span<const std::uint32_t> seeds, std::size_t hops,
                         std::vector<std::uint32_t>* kept = nullptr) const;

  /// node_count x in_channels.
  Eigen::MatrixXd features;
  /// Node names, parallel to rows; may be empty in hand-built graphs.
  std::vector<std::string> tokens;
  /// Nodes whose logits are reported, in report order.
  std::vector<std::uint32_t> patients;

 private:
  void finish();

  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<double> weights_;
  std::vector<double> degree_;
  Eigen::SparseMatrix<double, Eigen::RowMajor> norm_;
};

/// Fills `out` with the feature vector for a node token; false if there is none.
using FeatureSource = std::function<bool(const std::string& token, std::span<double> out)>;

struct GraphOptions {
  bool unweighted = false;
  /// Keep only nodes this many hops from a patient (0 keeps everything). Patient logits
  /// are unchanged as long as this is at least the layer count.
  std::size_t receptive_hops = 0;
};

/// One untyped undirected edge per triple with a non-literal object. Patient-gene edges
/// carry the stored z-value, everything else weight 1.
WeightedGraph build_weighted_graph(const KnowledgeGraph& kg, std::span<const NodeId> patients,
                                   std::size_t feature_dim, const FeatureSource& features,
                                   const GraphOptions& options = {});

/// Deterministic features for the random-feature ablation, keyed by token.
FeatureSource random_features(std::uint64_t seed);

struct GcnModel {
  GcnParams params;
  std::uint64_t seed = 0;
  /// weights[l] is in_l x out_l; the last layer has 2 outputs.
  std::vector<Eigen::MatrixXd> weights;
  std::vector<double> epoch_losses;

  std::size_t in_channels() const { return weights.empty() ? 0 : static_cast<std::size_t>(weights.front().rows()); }
  bool operator==(const GcnModel&) const = default;
};

/// Glorot-uniform weights, no bias.
GcnModel init_gcn(std::size_t in_channels, const GcnParams& params, std::uint64_t seed);

/// Logits for g.patients. Dropout hits hidden activations only, and only when `dropout_rng`
/// is given.
Eigen::MatrixXd gcn_forward(const GcnModel& model, const WeightedGraph& g, const Eigen::MatrixXd& features,
                            Rng* dropout_rng = nullptr);
inline Eigen::MatrixXd gcn_forward(const GcnModel& model, const WeightedGraph& g) {
  return gcn_forward(model, g, g.features);
}

/// Cross-entropy over patients with label >= 0 (labels parallel to g.patients), and its
/// gradient per weight matrix when `grads` is set.
double gcn_loss(const GcnModel& model, const WeightedGraph& g, const Eigen::MatrixXd& features,
                std::span<const int> labels, std::vector<Eigen::MatrixXd>* grads, Rng* dropout_rng = nullptr);

/// Full-batch gradient descent. Labels are parallel to g.patients; -1 marks patients
/// that are not trained on.
GcnModel train_gcn(const WeightedGraph& g, std::span<const int> labels, const GcnParams& params,
                   std::uint64_t seed);

/// Argmax labels and softmax scores for every patient of g, dropout off.
Prediction predict_gcn(const GcnModel& model, const WeightedGraph& g);

void save_gcn(const GcnModel& model, std::ostream& out);
void save_gcn(const GcnModel& model, const std::filesystem::path& path);
GcnModel load_gcn(std::istream& in);
GcnModel load_gcn(const std::filesystem::path& path);

}  // namespace gekg
