#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <vector>

#include "honkit/corpus.hpp"

namespace honkit {

struct WeightedEdge {
  NodeIndex from;
  NodeIndex to;
  std::uint64_t count;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// First-order directed graph over vocabulary indices. Edges are unique,
/// sorted by (from, to), and carry aggregated observation counts.
class Graph {
 public:
  Graph(std::shared_ptr<const Vocabulary> vocabulary, std::vector<NodeIndex> nodes,
        std::vector<WeightedEdge> edges);

  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const std::shared_ptr<const Vocabulary>& shared_vocabulary() const noexcept { return vocabulary_; }

  std::span<const NodeIndex> nodes() const noexcept { return nodes_; }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Out-edges of `node`, sorted by target.
  std::span<const WeightedEdge> out_edges(NodeIndex node) const;

 private:
  std::shared_ptr<const Vocabulary> vocabulary_;
  std::vector<NodeIndex> nodes_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::size_t> offsets_;  // CSR over vocabulary indices
};

/// Transitions observed in the corpus, multiplicity-weighted. Nodes are the
/// corpus universe.
Graph first_order_graph(const PathCorpus& corpus);

/// Reads an edge list of `u,v` or `u,v,count` lines ('#' comments allowed).
/// Repeated edges aggregate their counts.
Graph read_edge_list(std::istream& input);

/// Walk statistics of the binarized adjacency matrix raised to power i.
struct AdjPowerStats {
  int order = 0;
  std::uint64_t path_count = 0;     // Σ entries of A^i
  std::uint64_t nonzero_rows = 0;   // rows of A^i with positive sum
};

/// Throws ArgumentError for i < 1 and OverflowError if a walk count
/// exceeds 64 bits.
AdjPowerStats adj_power_stats(const Graph& graph, int i);

/// Stats for every power 1..max_i, sharing one walk-count recurrence.
std::vector<AdjPowerStats> adj_power_stats_upto(const Graph& graph, int max_i);

}  // namespace honkit
