#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace honkit {

/// Dense index of an interned node token.
using NodeIndex = std::uint32_t;

/// Bijection between node tokens and dense indices. Indices are assigned in
/// order of first appearance. Immutable once handed to a PathCorpus.
class Vocabulary {
 public:
  /// Returns the index of `token`, interning it if new. Throws ArgumentError
  /// for tokens that are empty or contain whitespace or commas.
  NodeIndex intern(std::string_view token);

  std::optional<NodeIndex> find(std::string_view token) const;
  const std::string& token(NodeIndex index) const { return tokens_.at(index); }
  std::size_t size() const noexcept { return tokens_.size(); }

  static bool valid_token(std::string_view token) noexcept;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, NodeIndex> index_;
};

struct Path {
  std::vector<NodeIndex> nodes;
  std::uint64_t multiplicity = 1;

  std::size_t transitions() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// Multiset of paths over a shared vocabulary. Paths keep their input order,
/// which is what makes seeded splitting reproducible.
class PathCorpus {
 public:
  /// Throws ArgumentError if a path is empty, has multiplicity 0 or refers to
  /// an index outside the vocabulary.
  PathCorpus(std::shared_ptr<const Vocabulary> vocabulary, std::vector<Path> paths);

  /// Builds a corpus from token sequences; each entry is (tokens, multiplicity).
  static PathCorpus from_tokens(
      const std::vector<std::pair<std::vector<std::string>, std::uint64_t>>& paths);

  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const std::shared_ptr<const Vocabulary>& shared_vocabulary() const noexcept { return vocabulary_; }
  std::span<const Path> paths() const noexcept { return paths_; }

  /// Sorted indices of nodes that occur in at least one path.
  std::span<const NodeIndex> universe() const noexcept { return universe_; }
  /// Universe as tokens, sorted lexicographically.
  std::vector<std::string> universe_tokens() const;

  /// Σ multiplicities.
  std::uint64_t instance_count() const noexcept { return instance_count_; }
  /// Σ multiplicity·(length−1).
  std::uint64_t transition_count() const noexcept { return transition_count_; }

  std::vector<std::string> tokens(const Path& path) const;

  /// Sorted (tokens → total multiplicity) view; equal for corpora holding the
  /// same multiset regardless of vocabulary numbering or path order.
  std::map<std::vector<std::string>, std::uint64_t> canonical() const;

  friend bool operator==(const PathCorpus& a, const PathCorpus& b) {
    return a.canonical() == b.canonical() && a.universe_tokens() == b.universe_tokens();
  }

 private:
  std::shared_ptr<const Vocabulary> vocabulary_;
  std::vector<Path> paths_;
  std::vector<NodeIndex> universe_;
  std::uint64_t instance_count_ = 0;
  std::uint64_t transition_count_ = 0;
};

enum class PathFormat { lines, ngram };

PathFormat parse_path_format(std::string_view name);

/// Reads a path file. `lines`: one comma-separated path per line. `ngram`:
/// same, with a trailing integer multiplicity field. Blank lines and lines
/// beginning with '#' are skipped.
PathCorpus parse_paths(std::istream& input, PathFormat format);
PathCorpus parse_paths(std::string_view text, PathFormat format);

/// Writes one line per path in the given format.
void write_paths(const PathCorpus& corpus, std::ostream& out, PathFormat format);

struct PathStats {
  std::uint64_t path_count = 0;
  std::map<std::size_t, std::uint64_t> length_histogram;  // nodes per path → instances
  double mean_length = 0.0;
  double mean_transitions = 0.0;
};

PathStats path_stats(const PathCorpus& corpus);

/// Multiplicity-weighted node occurrences keyed by token. Every universe node
/// is present.
std::map<std::string, std::uint64_t> visit_counts(const PathCorpus& corpus);

/// Path-level Bernoulli split of every path instance. Train and test share
/// the input's vocabulary so models built on one can score the other.
std::pair<PathCorpus, PathCorpus> split_corpus(const PathCorpus& corpus, double test_fraction,
                                               std::uint64_t seed);

}  // namespace honkit
