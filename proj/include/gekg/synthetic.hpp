#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gekg/expression.hpp"
#include "gekg/kg.hpp"

namespace gekg {

/// Sizes and signal strength for a generated ontology plus expression datasets.
struct SyntheticSpec {
  std::size_t n_classes = 300;
  /// Ontology classes forming the disease module.
  std::size_t module_size = 12;
  std::size_t n_genes_per_dataset = 200;
  std::size_t n_patients = 60;
  /// Mean shift of module genes in positive patients, in units of the noise sd.
  double signal_shift = 2.0;
  /// Fraction of each dataset's genes drawn from a pool shared by all datasets.
  double overlap_fraction = 0.5;
  std::uint64_t seed = 0;
  std::size_t n_datasets = 3;
  std::size_t annotations_per_gene = 2;
  /// Fraction of each dataset's genes annotated to a module class.
  double module_gene_fraction = 0.15;

  void validate() const;
};

struct SyntheticDataset {
  std::string name;
  ExpressionMatrix probes;
  ProbeTable probe_table;
  std::vector<std::string> genes;
  std::vector<std::string> module_genes;
  /// Accuracy of "mean module z-score above the midpoint of the class means".
  double rule_accuracy = 0.0;
};

struct SyntheticData {
  std::vector<Triple> ontology;
  /// Same pairs as `annotations`, with GO ids rather than IRIs.
  std::vector<std::pair<std::string, std::string>> annotation_ids;
  std::vector<Annotation> annotations;
  std::vector<std::string> module_classes;
  std::vector<SyntheticDataset> datasets;
};

/// Random GO-like DAG (subClassOf, rdf:type owl:Class, labels, a few blank-node
/// restrictions), gene annotations and probe-level expression matrices. Positive patients get
/// `signal_shift` added on genes annotated to the module. Throws ValidationError when the
/// spec cannot be met.
SyntheticData generate_synthetic(const SyntheticSpec& spec, const KgConfig& config = {});

/// Runs preprocess_dataset on every generated dataset.
std::vector<Dataset> preprocess_synthetic(const SyntheticData& data, Warnings* warnings = nullptr);

/// Files written, relative to `dir`.
struct SyntheticFiles {
  std::filesystem::path ontology = "ontology.nt";
  std::filesystem::path annotations = "annotations.tsv";
  /// (series, probes) per dataset.
  std::vector<std::pair<std::filesystem::path, std::filesystem::path>> datasets;
};

SyntheticFiles write_synthetic(const SyntheticData& data, const std::filesystem::path& dir);

}  // namespace gekg
