#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gekg/common.hpp"
#include "gekg/walker.hpp"

namespace gekg {

struct SkipGramParams {
  std::size_t dimension = 500;
  std::size_t window = 5;
  std::size_t epochs = 5;
  std::size_t negatives = 5;
  double learning_rate = 0.025;
  double min_learning_rate_fraction = 1e-4;
  std::size_t min_count = 1;

  void validate() const;
  bool operator==(const SkipGramParams&) const = default;
};

class Vocabulary {
 public:
  /// Adds `count` occurrences, creating the token if needed. Returns its index.
  std::uint32_t add(std::string_view token, std::uint64_t count = 1);
  std::optional<std::uint32_t> find(std::string_view token) const;
  const std::string& token(std::uint32_t i) const { return tokens_[i]; }
  std::uint64_t count(std::uint32_t i) const { return counts_[i]; }
  std::size_t size() const { return tokens_.size(); }

  bool operator==(const Vocabulary& o) const { return tokens_ == o.tokens_ && counts_ == o.counts_; }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Skip-gram with negative sampling. `input` rows are the embeddings; `output` rows are
/// the context vectors. Both are |V| x d, row-major float.
class EmbeddingModel;
using EpochCallback = std::function<void(std::size_t epoch, const EmbeddingModel& model)>;

class EmbeddingModel {
 public:
  EmbeddingModel() = default;
  explicit EmbeddingModel(SkipGramParams params) : params_(params) {}

  const SkipGramParams& params() const { return params_; }
  SkipGramParams& params() { return params_; }
  const Vocabulary& vocabulary() const { return vocab_; }
  std::size_t dimension() const { return params_.dimension; }
  std::size_t size() const { return vocab_.size(); }

  std::span<const float> input_row(std::uint32_t i) const {
    return std::span(input_).subspan(i * dimension(), dimension());
  }
  std::span<const float> output_row(std::uint32_t i) const {
    return std::span(output_).subspan(i * dimension(), dimension());
  }
  /// Input vector of a token; throws DataError when the token is unknown.
  std::span<const float> embedding(std::string_view token) const;
  bool contains(std::string_view token) const { return vocab_.find(token).has_value(); }

  /// Mean per-pair loss of every epoch trained so far, across pretraining and updates.
  const std::vector<double>& epoch_losses() const { return epoch_losses_; }
  const std::string& rng_state() const { return rng_state_; }

  bool operator==(const EmbeddingModel& o) const {
    return params_ == o.params_ && vocab_ == o.vocab_ && input_ == o.input_ && output_ == o.output_ &&
           epoch_losses_ == o.epoch_losses_ && rng_state_ == o.rng_state_;
  }

 private:
  friend EmbeddingModel train_skipgram(const WalkCorpus&, const SkipGramParams&, std::uint64_t,
                                       const EpochCallback&);
  friend EmbeddingModel update_model(EmbeddingModel, const WalkCorpus&, std::uint64_t);
  friend void save_model(const EmbeddingModel&, std::ostream&);
  friend EmbeddingModel load_model(std::istream&);
  friend class SkipGramTrainer;

  std::uint32_t add_token(std::string_view token, std::uint64_t count, Rng& rng);

  SkipGramParams params_;
  Vocabulary vocab_;
  std::vector<float> input_;
  std::vector<float> output_;
  std::vector<double> epoch_losses_;
  std::string rng_state_;
};

/// Loss of one (center, context) pair with k negatives:
///   -log s(u_o . v) - sum_k log s(-u_k . v)
/// and its gradient w.r.t. v, u_o, and each u_k (grad_negatives is k x d, row-major).
template <class Real>
Real sgns_loss_and_grad(std::span<const Real> center, std::span<const Real> context,
                        std::span<const Real* const> negatives, std::span<Real> grad_center,
                        std::span<Real> grad_context, std::span<Real> grad_negatives) {
  const std::size_t d = center.size();
  using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  const auto n = static_cast<Eigen::Index>(d);
  auto dot = [n](const Real* a, const Real* b) { return Eigen::Map<const Vec>(a, n).dot(Eigen::Map<const Vec>(b, n)); };
  // log s(x) computed stably
  auto log_sigmoid = [](Real x) { return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x)); };
  auto sigmoid = [](Real x) { return x >= 0 ? Real(1) / (Real(1) + std::exp(-x)) : std::exp(x) / (Real(1) + std::exp(x)); };

  for (std::size_t i = 0; i < d; ++i) grad_center[i] = 0;
  const Real sp = dot(context.data(), center.data());
  Real loss = -log_sigmoid(sp);
  const Real gp = sigmoid(sp) - Real(1);  // dL/d(sp)
  for (std::size_t i = 0; i < d; ++i) {
    grad_center[i] += gp * context[i];
    grad_context[i] = gp * center[i];
  }
  for (std::size_t k = 0; k < negatives.size(); ++k) {
    const Real* u = negatives[k];
    const Real sn = dot(u, center.data());
    loss -= log_sigmoid(-sn);
    const Real gn = sigmoid(sn);  // dL/d(sn)
    Real* gu = grad_negatives.data() + k * d;
    for (std::size_t i = 0; i < d; ++i) {
      grad_center[i] += gn * u[i];
      gu[i] = gn * center[i];
    }
  }
  return loss;
}

/// Trains a fresh model on `corpus`. Single-threaded and bit-reproducible for a given seed.
EmbeddingModel train_skipgram(const WalkCorpus& corpus, const SkipGramParams& params, std::uint64_t seed,
                              const EpochCallback& on_epoch = {});

/// Mean per-pair objective over the whole corpus with negatives drawn from a generator
/// seeded by `seed`. The same seed gives the same negatives, so values are comparable
/// between checkpoints of one training run.
double evaluate_objective(const EmbeddingModel& model, const WalkCorpus& corpus, std::uint64_t seed);

/// Appends unseen tokens and continues training on `corpus` only. Negative samples are
/// drawn from the tokens of `corpus`, so rows of tokens absent from it stay bit-identical.
EmbeddingModel update_model(EmbeddingModel model, const WalkCorpus& corpus, std::uint64_t seed);

void save_model(const EmbeddingModel& model, std::ostream& out);
void save_model(const EmbeddingModel& model, const std::filesystem::path& path);
EmbeddingModel load_model(std::istream& in);
EmbeddingModel load_model(const std::filesystem::path& path);

/// "token\tv1\t...\tvd" per line. An empty filter exports every token.
void export_embeddings(const EmbeddingModel& model, std::ostream& out,
                       std::span<const std::string> tokens = {});

double cosine_similarity(std::span<const float> a, std::span<const float> b);

}  // namespace gekg
