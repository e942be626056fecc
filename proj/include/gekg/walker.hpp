#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gekg/kg.hpp"

namespace gekg {

struct WalkOptions {
  std::size_t max_walks = 500;
  std::size_t max_depth = 4;  // edge traversals
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// Walks stored as interned token ids. Token sequence alternates node, predicate, node, ...
class WalkCorpus {
 public:
  std::uint32_t intern(std::string_view token);
  void add_walk(std::span<const std::uint32_t> token_ids);
  void add_walk_tokens(std::span<const std::string> tokens);
  /// Appends another corpus, re-interning its tokens.
  void append(const WalkCorpus& other);

  std::size_t walk_count() const { return offsets_.size() - 1; }
  std::span<const std::uint32_t> walk(std::size_t i) const {
    return std::span(ids_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }
  std::vector<std::string> walk_tokens(std::size_t i) const;
  const std::string& token(std::uint32_t id) const { return dictionary_[id]; }
  std::size_t dictionary_size() const { return dictionary_.size(); }
  std::size_t token_count() const { return ids_.size(); }
  bool empty() const { return walk_count() == 0; }

  /// Walks per root token, in first-seen root order.
  std::vector<std::pair<std::string, std::size_t>> per_root_counts() const;

  std::size_t max_walks = 0;
  std::size_t max_depth = 0;

  /// One walk per line, tokens separated by single spaces.
  void write(std::ostream& out) const;
  static WalkCorpus read(std::istream& in);

  bool operator==(const WalkCorpus& o) const;

 private:
  std::vector<std::string> dictionary_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> ids_;
  std::vector<std::size_t> offsets_{0};
};

/// Directed depth-first walks from each root. If a root has at most max_walks distinct
/// maximal walks they are all emitted once, otherwise max_walks distinct ones are drawn
/// uniformly. Each root draws from its own generator seeded by (seed, root token), so the
/// corpus is identical for any `jobs` value. Literal objects are never traversed.
WalkCorpus extract_walks(const KnowledgeGraph& kg, std::span<const NodeId> roots, const WalkOptions& options);
WalkCorpus extract_walks(const KnowledgeGraph& kg, std::span<const std::string> root_tokens,
                         const WalkOptions& options);

/// Re-checks every walk against the graph; returns one message per violation.
std::vector<std::string> validate_corpus(const KnowledgeGraph& kg, const WalkCorpus& corpus);

/// Number of maximal walks of at most `depth` edges starting at `root`, saturating at 2^64-1.
std::uint64_t count_walks(const KnowledgeGraph& kg, NodeId root, std::size_t depth);

}  // namespace gekg
