#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "honkit/corpus.hpp"
#include "honkit/graph.hpp"

namespace honkit {

using HonIndex = std::uint32_t;

/// Marks a token that the model's vocabulary has never seen.
inline constexpr NodeIndex kUnknownNode = std::numeric_limits<NodeIndex>::max();

struct HonEdge {
  HonIndex from;
  HonIndex to;
  std::uint64_t count;
  double probability;
};

/// Directed graph whose nodes are length-k node sequences. An edge joins
/// (v1..vk) to (v2..vk+1) and carries the empirical conditional probability
/// of vk+1 given the k-node context.
class HigherOrderNetwork {
 public:
  /// `states` holds node_count·order indices, one state after another.
  /// `edges` need only from/to/count; duplicates aggregate and probabilities
  /// are recomputed from the counts.
  HigherOrderNetwork(std::shared_ptr<const Vocabulary> vocabulary, int order,
                     std::vector<NodeIndex> states, std::vector<HonEdge> edges);

  /// Order-1 network with the graph's nodes and counted edges.
  static HigherOrderNetwork from_graph(const Graph& graph);

  int order() const noexcept { return order_; }
  std::size_t node_count() const noexcept { return order_ ? states_.size() / order_ : 0; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const std::shared_ptr<const Vocabulary>& shared_vocabulary() const noexcept { return vocabulary_; }

  std::span<const NodeIndex> state(HonIndex node) const {
    return std::span<const NodeIndex>(states_).subspan(std::size_t{node} * order_, order_);
  }
  NodeIndex last_node(HonIndex node) const { return states_[std::size_t{node} * order_ + order_ - 1]; }
  std::optional<HonIndex> find(std::span<const NodeIndex> state) const;

  /// Sorted by (from, to).
  std::span<const HonEdge> edges() const noexcept { return edges_; }
  std::span<const HonEdge> out_edges(HonIndex node) const {
    return std::span<const HonEdge>(edges_).subspan(offsets_[node], offsets_[node + 1] - offsets_[node]);
  }
  std::uint64_t out_total(HonIndex node) const { return out_totals_[node]; }

  /// State tokens joined with `separator`.
  std::string label(HonIndex node, char separator = '|') const;

  /// Edges whose target state does not continue the source state by one step.
  std::size_t overlap_violations() const;

 private:
  struct KeyHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view key) const noexcept {
      return std::hash<std::string_view>{}(key);
    }
  };

  static std::string_view key_of(std::span<const NodeIndex> state) noexcept {
    return {reinterpret_cast<const char*>(state.data()), state.size_bytes()};
  }

  std::shared_ptr<const Vocabulary> vocabulary_;
  int order_;
  std::vector<NodeIndex> states_;
  std::vector<HonEdge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint64_t> out_totals_;
  std::unordered_map<std::string, HonIndex, KeyHash, std::equal_to<>> index_;
};

/// Slides a window of k+1 nodes over every path. Nodes are the distinct
/// k-node subpaths; paths shorter than k contribute nothing.
HigherOrderNetwork build_hon(const PathCorpus& corpus, int k);

/// Writes `from_state|...,to_state|...` style CSV rows:
/// `from,to,count,probability`, states joined with '|', rows sorted by labels.
void write_hon_csv(const HigherOrderNetwork& hon, std::ostream& out);

/// Layers of orders 1..K over one corpus plus the empirical start-node
/// distribution (the order-0 component).
class MultiOrderModel {
 public:
  MultiOrderModel(std::vector<HigherOrderNetwork> layers, std::vector<std::uint64_t> start_counts,
                  Graph topology);

  int max_order() const noexcept { return static_cast<int>(layers_.size()); }
  const HigherOrderNetwork& layer(int k) const;

  const Vocabulary& vocabulary() const noexcept { return topology_.vocabulary(); }
  const std::shared_ptr<const Vocabulary>& shared_vocabulary() const noexcept {
    return topology_.shared_vocabulary();
  }
  const Graph& first_order_topology() const noexcept { return topology_; }

  double start_probability(NodeIndex node) const;
  /// Start distribution keyed by token.
  std::map<std::string, double> start_distribution() const;

 private:
  std::vector<HigherOrderNetwork> layers_;
  std::vector<std::uint64_t> start_counts_;
  std::uint64_t start_total_ = 0;
  Graph topology_;
};

MultiOrderModel build_multi_order(const PathCorpus& corpus, int max_k);

/// Probability of `next` after `history` using the layer of order
/// min(k, |history|); 0 when the context or continuation is unobserved.
double transition_prob(const MultiOrderModel& model, std::span<const NodeIndex> history,
                       NodeIndex next, int k);
double transition_prob(const MultiOrderModel& model, const std::vector<std::string>& history,
                       std::string_view next, int k);

/// Maps each node of `path` into `target`'s index space. Tokens missing
/// from `target` become kUnknownNode.
std::vector<NodeIndex> translate(const Path& path, const Vocabulary& source,
                                 const Vocabulary& target);

}  // namespace honkit
