#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gekg/common.hpp"

namespace gekg {

/// Probe id -> gene symbol. A probe without a symbol is unannotated.
class ProbeTable {
 public:
  void add(std::string probe_id, std::optional<std::string> gene_symbol);
  /// nullptr when the probe is unknown; pointer to an empty optional when unannotated.
  const std::optional<std::string>* find(const std::string& probe_id) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t annotated_count() const;
  const auto& rows() const { return rows_; }

 private:
  std::vector<std::pair<std::string, std::optional<std::string>>> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Genes (or probes, before mapping) x patients.
struct ExpressionMatrix {
  std::vector<std::string> row_ids;
  std::vector<std::string> patient_ids;
  Eigen::MatrixXd values;  // rows x patients
  std::vector<int> labels;  // aligned with patient_ids, each 0 or 1

  std::size_t rows() const { return row_ids.size(); }
  std::size_t cols() const { return patient_ids.size(); }
  int label_of(const std::string& patient_id) const;

  bool operator==(const ExpressionMatrix& o) const {
    return row_ids == o.row_ids && patient_ids == o.patient_ids && labels == o.labels &&
           values.rows() == o.values.rows() && values.cols() == o.values.cols() &&
           values == o.values;
  }
};

struct PatientProfile {
  std::string patient_id;
  std::map<std::string, double> z_values;  // gene -> z-score
  int label = 0;
  bool degenerate = false;  // constant input column, all z set to 0
};

/// A named, pre-processed dataset.
struct Dataset {
  std::string name;
  std::vector<PatientProfile> profiles;

  std::vector<int> labels() const;
};

ExpressionMatrix parse_series_matrix(std::istream& in, const std::string& source = "<stream>");
ExpressionMatrix parse_series_matrix(const std::filesystem::path& path);
void write_series_matrix(std::ostream& out, const ExpressionMatrix& m,
                         const std::string& corner = "ID_REF");

ProbeTable parse_probe_table(std::istream& in, const std::string& source = "<stream>");
ProbeTable parse_probe_table(const std::filesystem::path& path);
void write_probe_table(std::ostream& out, const ProbeTable& table);

/// Drops unannotated probes and re-keys the remaining rows by gene symbol.
ExpressionMatrix map_probes_to_genes(const ExpressionMatrix& m, const ProbeTable& table);

/// One row per gene, values averaged over the gene's probe rows. Genes come out sorted,
/// and each mean is summed in sorted order, so the result ignores input row order.
ExpressionMatrix average_duplicate_probes(const ExpressionMatrix& m);

/// Per-patient z-score with the population standard deviation.
std::vector<PatientProfile> zscore_normalize(const ExpressionMatrix& m, Warnings* warnings = nullptr);

/// probes -> genes -> averaged -> normalized.
Dataset preprocess_dataset(const std::string& name, const ExpressionMatrix& probe_matrix,
                           const ProbeTable& probes, Warnings* warnings = nullptr);

/// Profiles are stored in the series-matrix dialect, keyed by gene.
void write_profiles(std::ostream& out, std::span<const PatientProfile> profiles);
std::vector<PatientProfile> read_profiles(std::istream& in, const std::string& source = "<stream>");
std::vector<PatientProfile> read_profiles(const std::filesystem::path& path);

}  // namespace gekg
