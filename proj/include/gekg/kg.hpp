#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gekg/common.hpp"
#include "gekg/expression.hpp"

namespace gekg {

enum class NodeKind : std::uint8_t { iri, blank, literal };
enum class NodeRole : std::uint8_t { other, patient, gene, ontology_class };

std::string_view to_string(NodeRole role);

/// An RDF term. For literals `value` holds the full lexical token including quotes and any
/// language tag or datatype suffix, so serialization is lossless.
struct Term {
  NodeKind kind = NodeKind::iri;
  std::string value;

  static Term iri(std::string v) { return {NodeKind::iri, std::move(v)}; }
  static Term blank(std::string v) { return {NodeKind::blank, std::move(v)}; }
  static Term literal(std::string v) { return {NodeKind::literal, std::move(v)}; }

  /// Walk token: IRIs as-is, blank nodes as "_:id".
  std::string token() const;
  std::string to_ntriples() const;

  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;
  std::string predicate;
  Term object;

  bool operator==(const Triple&) const = default;
};

namespace vocab {
inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdfs_subclass = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view rdfs_label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view owl_class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view owl_restriction = "http://www.w3.org/2002/07/owl#Restriction";
inline constexpr std::string_view owl_on_property = "http://www.w3.org/2002/07/owl#onProperty";
inline constexpr std::string_view owl_some_values = "http://www.w3.org/2002/07/owl#someValuesFrom";
}  // namespace vocab

/// IRI prefixes and predicates used when building the graph.
struct KgConfig {
  std::string go_prefix = "http://purl.obolibrary.org/obo/";
  std::string gene_prefix = "http://example.org/gekg/gene/";
  std::string patient_prefix = "http://example.org/gekg/patient/";
  std::string has_function = "http://example.org/gekg/hasFunction";
  std::string expresses = "http://example.org/gekg/expresses";
  double link_threshold = 1.0;

  std::string gene_iri(std::string_view symbol) const { return gene_prefix + std::string(symbol); }
  std::string patient_iri(std::string_view id) const { return patient_prefix + std::string(id); }
  /// "GO:0006915" -> "<go_prefix>GO_0006915". Throws ParseError on a malformed id.
  std::string go_iri(std::string_view go_id) const;
};

std::vector<Triple> parse_ntriples(std::istream& in, const std::string& source = "<stream>");
std::vector<Triple> parse_ntriples(const std::filesystem::path& path);
void write_ntriples(std::ostream& out, std::span<const Triple> triples);

struct Annotation {
  std::string gene_symbol;
  std::string class_iri;

  bool operator==(const Annotation&) const = default;
};

std::vector<Annotation> parse_annotations(std::istream& in, const KgConfig& config,
                                          const std::string& source = "<stream>");
std::vector<Annotation> parse_annotations(const std::filesystem::path& path, const KgConfig& config);

using NodeId = std::uint32_t;
using PredId = std::uint32_t;

struct Node {
  NodeKind kind;
  std::string value;
  NodeRole role = NodeRole::other;

  std::string token() const { return Term{kind, value}.token(); }
};

struct Edge {
  PredId predicate;
  NodeId target;
};

struct TripleIds {
  NodeId subject;
  PredId predicate;
  NodeId object;
};

/// Directed multigraph over interned nodes and predicates. Single writer during
/// construction, then read-only and safe to share between threads.
class KnowledgeGraph {
 public:
  NodeId add_node(const Term& term, NodeRole role = NodeRole::other);
  PredId intern_predicate(std::string_view iri);
  /// False when the triple already exists.
  bool add_triple(const Triple& t);
  bool add_triple(NodeId s, PredId p, NodeId o);

  std::optional<NodeId> find(const Term& term) const;
  std::optional<NodeId> find_token(std::string_view token) const;
  std::optional<PredId> find_predicate(std::string_view iri) const;
  bool has_edge(NodeId s, PredId p, NodeId o) const;

  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }
  void set_role(NodeId id, NodeRole role) { nodes_[id].role = role; }
  std::span<const Edge> out_edges(NodeId id) const { return adjacency_[id]; }
  const std::string& predicate(PredId id) const { return predicates_[id]; }
  std::size_t predicate_count() const { return predicates_.size(); }
  std::span<const TripleIds> triples() const { return triples_; }
  std::size_t triple_count() const { return triples_.size(); }

  std::vector<NodeId> nodes_with_role(NodeRole role) const;
  std::vector<Triple> to_triples() const;

  /// z-score behind each patient->gene link, kept out of the triple set.
  void set_link_weight(NodeId patient, NodeId gene, double z);
  std::optional<double> link_weight(NodeId patient, NodeId gene) const;
  std::size_t link_weight_count() const { return link_weights_.size(); }

 private:
  static std::uint64_t pair_key(NodeId a, NodeId b) { return (std::uint64_t{a} << 32) | b; }
  static std::string node_key(NodeKind kind, std::string_view value);

  struct TripleHash {
    std::size_t operator()(const TripleIds& t) const {
      std::uint64_t h = (std::uint64_t{t.subject} << 32) ^ (std::uint64_t{t.predicate} << 16) ^ t.object;
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      return static_cast<std::size_t>(h ^ (h >> 33));
    }
  };
  struct TripleEq {
    bool operator()(const TripleIds& a, const TripleIds& b) const {
      return a.subject == b.subject && a.predicate == b.predicate && a.object == b.object;
    }
  };

  std::vector<Node> nodes_;
  std::unordered_map<std::string, NodeId> node_index_;
  std::vector<std::string> predicates_;
  std::unordered_map<std::string, PredId> predicate_index_;
  std::vector<std::vector<Edge>> adjacency_;
  std::vector<TripleIds> triples_;
  std::unordered_set<TripleIds, TripleHash, TripleEq> triple_set_;
  std::unordered_map<std::uint64_t, double> link_weights_;
};

struct KgStats {
  std::size_t n_triples = 0;
  std::size_t n_relation_types = 0;
  std::size_t n_classes = 0;

  bool operator==(const KgStats&) const = default;
};

KgStats kg_stats(const KnowledgeGraph& kg);
/// "triples\t<n>\nrelation_types\t<n>\nclasses\t<n>\n"
std::string format_stats(const KgStats& stats);

/// Ontology triples plus one gene -hasFunction-> class triple per annotation.
KnowledgeGraph build_domain_kg(std::span<const Triple> ontology, std::span<const Annotation> annotations,
                               const KgConfig& config, Warnings* warnings = nullptr);

struct LinkReport {
  std::size_t patients = 0;
  std::size_t edges_added = 0;
  std::size_t unresolved_genes = 0;  // distinct gene ids without a gene node
};

/// Adds patient -expresses-> gene for every z strictly above the threshold.
LinkReport link_patients(KnowledgeGraph& kg, std::span<const PatientProfile> profiles, const KgConfig& config);

}  // namespace gekg
