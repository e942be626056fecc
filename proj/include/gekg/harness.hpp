#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gekg/classifiers.hpp"
#include "gekg/embedder.hpp"
#include "gekg/expression.hpp"
#include "gekg/gnn.hpp"
#include "gekg/kg.hpp"
#include "gekg/walker.hpp"

namespace gekg {

// ---- folds ----

struct FoldSplit {
  std::string dataset;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  /// Fold index of every sample.
  std::vector<std::size_t> fold_of;

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
  bool operator==(const FoldSplit&) const = default;
};

/// Shuffles each class and deals it round-robin over the folds, carrying the deal position
/// from one class to the next. Warns when a class has fewer than k samples.
FoldSplit stratified_kfold(std::span<const int> labels, std::size_t k, std::uint64_t seed,
                           const std::string& dataset = "", Warnings* warnings = nullptr);

void write_folds(std::ostream& out, const FoldSplit& split);
FoldSplit read_folds(std::istream& in, const std::string& source = "<stream>");

// ---- metrics ----

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionCounts&) const = default;
};

ConfusionCounts confusion(std::span<const int> truth, std::span<const int> predicted);

struct Metrics {
  double precision = 0, recall = 0, f1 = 0, waf = 0;
};

/// Precision, recall and F1 of the positive class (0 on an empty denominator), and the
/// support-weighted mean of both classes' F1.
Metrics compute_metrics(const ConfusionCounts& c);

/// True when every prediction is the same label.
bool detect_degenerate(std::span<const int> predictions);

// ---- reports ----

enum class Setting : std::uint8_t { single, multi, transfer };
enum class Method : std::uint8_t { baseline_all, baseline_overlap, mlp_embed, gcn };
enum class AblationMode : std::uint8_t { random_features, unweighted_edges };
std::string_view to_string(Setting s);
std::string_view to_string(Method m);
std::string_view to_string(AblationMode m);
Setting parse_setting(std::string_view s);
Method parse_method(std::string_view s);
AblationMode parse_ablation(std::string_view s);

struct FoldResult {
  /// "1".."k", or "all" when the whole dataset is the test set.
  std::string fold;
  ConfusionCounts counts;
  Metrics metrics;
  bool degenerate = false;
  std::vector<std::string> patient_ids;
  std::vector<int> predictions;
};

struct EvalReport {
  std::string setting;
  std::string method;
  std::string dataset;
  std::vector<FoldResult> folds;
  /// Set when the run could not produce results (e.g. no common genes).
  std::optional<std::string> error;
  /// Labels read to train the models, per dataset name.
  std::map<std::string, std::size_t> training_label_reads;

  Metrics mean() const;
  /// Population standard deviation over folds.
  Metrics stddev() const;
  bool any_degenerate() const;
};

/// Columns setting, method, dataset, fold, precision, recall, f1, waf, degenerate; one row
/// per fold, then "mean" and "std" rows. A failed run is a single row with fold
/// "error: <message>" and empty metric fields.
void write_report_csv(std::ostream& out, std::span<const EvalReport> reports);
/// Mean ± std per report; an asterisk marks runs with a constant-prediction fold.
void write_report_table(std::ostream& out, std::span<const EvalReport> reports);

// ---- experiment ----

/// The only way label values reach the training code. Counts reads per dataset so tests
/// can prove a dataset's labels were never used for training.
class LabelLedger {
 public:
  LabelLedger() = default;
  explicit LabelLedger(std::span<const Dataset> datasets);

  int for_training(std::size_t dataset, std::size_t patient);
  int for_evaluation(std::size_t dataset, std::size_t patient);
  std::size_t training_reads(std::size_t dataset) const { return training_[dataset]->load(); }
  std::size_t evaluation_reads(std::size_t dataset) const { return evaluation_[dataset]->load(); }

 private:
  std::vector<std::vector<int>> labels_;
  std::vector<std::unique_ptr<std::atomic<std::size_t>>> training_, evaluation_;
};

struct ExperimentConfig {
  KgConfig kg;
  WalkOptions walks;
  SkipGramParams embedding;
  GcnParams gcn;
  MlpParams mlp;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t folds = 5;
};

/// Walks from every non-literal node of the domain graph.
WalkCorpus domain_walks(const KnowledgeGraph& domain, const ExperimentConfig& config);
EmbeddingModel pretrain_domain_model(const KnowledgeGraph& domain, const ExperimentConfig& config);
/// Links the dataset's patients into a copy of `domain` and walks from the patient nodes.
WalkCorpus patient_walks(const KnowledgeGraph& domain, const Dataset& dataset, const ExperimentConfig& config);
/// Domain model updated with each dataset's patient walks, in order.
EmbeddingModel update_with_datasets(EmbeddingModel model, const KnowledgeGraph& domain,
                                    std::span<const Dataset> datasets, const ExperimentConfig& config);

/// Holds the inputs of one study and runs the three settings plus ablations. Graphs,
/// walk corpora and updated embedding models are built once and reused across folds and
/// methods. Not safe to call from several threads at once; folds run in parallel inside.
class Experiment {
 public:
  Experiment(std::vector<Triple> ontology, std::vector<Annotation> annotations, std::vector<Dataset> datasets,
             ExperimentConfig config, Warnings* warnings = nullptr);

  const ExperimentConfig& config() const { return config_; }
  std::size_t dataset_count() const { return datasets_.size(); }
  const std::string& dataset_name(std::size_t i) const { return datasets_[i].name; }
  std::size_t dataset_index(std::string_view name) const;

  const KnowledgeGraph& domain_kg() const { return domain_; }
  /// Pretrains on walks from every non-literal domain node unless a model was supplied.
  const EmbeddingModel& base_model();
  void set_base_model(EmbeddingModel model);
  /// Base model updated with the patient walks of `datasets`, in that order.
  const EmbeddingModel& updated_model(std::span<const std::size_t> datasets);

  const FoldSplit& folds(std::size_t dataset);
  /// Supplied splits must match the dataset's size.
  void set_folds(std::size_t dataset, FoldSplit split);

  EvalReport run_single(std::size_t dataset, Method method);
  EvalReport run_multi(std::size_t target, std::span<const std::size_t> siblings, Method method);
  EvalReport run_transfer(std::size_t test, std::span<const std::size_t> train, Method method);
  EvalReport run_ablation(std::size_t dataset, AblationMode mode);

  LabelLedger& ledger() { return ledger_; }

 private:
  struct Arm;
  struct Split;
  EvalReport run(const Arm& arm, const std::vector<Split>& splits);
  const WalkCorpus& patient_corpus(std::size_t dataset);
  const WeightedGraph& graph(std::span<const std::size_t> datasets, bool random_features, bool unweighted);

  ExperimentConfig config_;
  std::vector<Dataset> datasets_;
  std::vector<Triple> ontology_;
  std::vector<Annotation> annotations_;
  KnowledgeGraph domain_;
  LabelLedger ledger_;
  std::optional<EmbeddingModel> base_;
  std::map<std::size_t, WalkCorpus> corpora_;
  std::map<std::vector<std::size_t>, EmbeddingModel> updated_;
  std::map<std::tuple<std::vector<std::size_t>, bool, bool>, WeightedGraph> graphs_;
  std::map<std::size_t, FoldSplit> folds_;
};

}  // namespace gekg
