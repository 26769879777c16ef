#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "honkit/corpus.hpp"
#include "honkit/graph.hpp"

namespace honkit {

/// Markov source of known memory order m over a random out-regular base
/// topology. Every length-m context (a walk in the base topology) has its
/// own distribution over the successors of its last node.
class PlantedChain {
 public:
  struct Continuation {
    NodeIndex node;
    double probability;
  };

  int order() const noexcept { return order_; }
  std::size_t node_count() const noexcept { return successors_.size(); }
  int branching() const noexcept { return branching_; }
  double determinism() const noexcept { return determinism_; }
  std::uint64_t seed() const noexcept { return seed_; }

  const std::shared_ptr<const Vocabulary>& vocabulary() const noexcept { return vocabulary_; }
  std::span<const NodeIndex> successors(NodeIndex node) const { return successors_.at(node); }

  std::size_t context_count() const noexcept { return transitions_.size(); }
  std::span<const NodeIndex> context(std::size_t i) const {
    return std::span<const NodeIndex>(contexts_).subspan(i * static_cast<std::size_t>(order_), order_);
  }
  /// Continuations with positive probability, sorted by node.
  std::span<const Continuation> transitions(std::size_t context_index) const {
    return transitions_.at(context_index);
  }
  /// Index of `context` (length m), or npos.
  std::size_t find_context(std::span<const NodeIndex> context) const;
  /// P(next | context); 0 for unknown contexts or continuations.
  double probability(std::span<const NodeIndex> context, NodeIndex next) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend PlantedChain random_planted_chain(std::size_t, int, int, double, std::uint64_t);

  int order_ = 1;
  int branching_ = 2;
  double determinism_ = 1.0;
  std::uint64_t seed_ = 0;
  std::shared_ptr<const Vocabulary> vocabulary_;
  std::vector<std::vector<NodeIndex>> successors_;
  std::vector<NodeIndex> contexts_;
  std::vector<std::vector<Continuation>> transitions_;
  std::unordered_map<std::string, std::size_t> context_index_;
};

/// Each context puts `determinism` on a preferred successor and spreads the
/// rest evenly. For m >= 2 the contexts sharing a length-(m−1) suffix never
/// all prefer the same successor, so the full context carries information
/// beyond any shorter one. Throws ConstructionError for infeasible
/// parameters (node_count <= branching, branching < 2, m < 1, too many
/// contexts).
PlantedChain random_planted_chain(std::size_t node_count, int order, int branching, double determinism,
                                  std::uint64_t seed);

/// Paths start from a uniformly drawn context; lengths are uniform in
/// [min_len, max_len] nodes.
PathCorpus generate_corpus(const PlantedChain& chain, std::size_t n_paths, std::size_t min_len,
                           std::size_t max_len, std::uint64_t seed);

/// Routes between uniformly drawn ordered node pairs at least `min_hops`
/// apart, each a uniformly chosen shortest (hop-count) path in `graph`.
/// Mimics equilibrium-style routing on a fixed road topology.
PathCorpus shortest_route_corpus(const Graph& graph, std::size_t n_paths, std::size_t min_hops,
                                 std::uint64_t seed);

}  // namespace honkit
