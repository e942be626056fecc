#pragma once

// Pieces shared by the GCN and MLP classifiers.

#include <Eigen/Dense>

#include <filesystem>
#include <ostream>
#include <span>
#include <vector>

namespace gekg {

/// Labels plus per-class probabilities, one row per scored sample.
struct Prediction {
  std::vector<int> labels;
  Eigen::MatrixXd scores;
};

/// Row-wise softmax, shifted by the row max.
Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& logits);

/// Row-wise argmax; ties go to the lowest column.
std::vector<int> argmax_rows(const Eigen::MatrixXd& m);

Prediction make_prediction(const Eigen::MatrixXd& logits);

/// Mean softmax cross-entropy over rows with label >= 0, and the gradient w.r.t. the
/// logits (rows without a label get zero gradient). Throws DataError if no row is labelled.
double cross_entropy(const Eigen::MatrixXd& logits, std::span<const int> labels, Eigen::MatrixXd* grad);

/// "epoch,loss" CSV, epochs numbered from 1.
void write_loss_log(std::ostream& out, std::span<const double> losses);
void write_loss_log(const std::filesystem::path& path, std::span<const double> losses);

}  // namespace gekg
