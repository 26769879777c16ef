#include "honkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "honkit/errors.hpp"

namespace honkit {

Graph::Graph(std::shared_ptr<const Vocabulary> vocabulary, std::vector<NodeIndex> nodes,
             std::vector<WeightedEdge> edges)
    : vocabulary_(std::move(vocabulary)), nodes_(std::move(nodes)) {
  if (!vocabulary_) throw ArgumentError("graph requires a vocabulary");
  const std::size_t n = vocabulary_->size();
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::vector<char> member(n, 0);
  for (NodeIndex v : nodes_) {
    if (v >= n) throw ArgumentError("graph node outside vocabulary");
    member[v] = 1;
  }

  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n || !member[e.from] || !member[e.to]) {
      throw ArgumentError("edge endpoint is not a graph node");
    }
    if (e.count == 0) throw ArgumentError("edge count must be >= 1");
    if (!edges_.empty() && edges_.back().from == e.from && edges_.back().to == e.to) {
      edges_.back().count += e.count;
    } else {
      edges_.push_back(e);
    }
  }

  offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) ++offsets_[e.from + 1];
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

std::span<const WeightedEdge> Graph::out_edges(NodeIndex node) const {
  if (node + 1 >= offsets_.size()) return {};
  return std::span<const WeightedEdge>(edges_).subspan(offsets_[node],
                                                       offsets_[node + 1] - offsets_[node]);
}

Graph first_order_graph(const PathCorpus& corpus) {
  std::vector<WeightedEdge> edges;
  for (const auto& p : corpus.paths()) {
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
      edges.push_back({p.nodes[i], p.nodes[i + 1], p.multiplicity});
    }
  }
  auto universe = corpus.universe();
  return Graph(corpus.shared_vocabulary(), {universe.begin(), universe.end()}, std::move(edges));
}

Graph read_edge_list(std::istream& input) {
  auto vocab = std::make_shared<Vocabulary>();
  std::vector<WeightedEdge> edges;
  std::vector<NodeIndex> nodes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
    while (!view.empty() && view.front() == ' ') view.remove_prefix(1);
    if (view.empty() || view.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t pos; (pos = view.find(',', start)) != std::string_view::npos; start = pos + 1) {
      fields.push_back(view.substr(start, pos - start));
    }
    fields.push_back(view.substr(start));
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(line_no, "edge line must be 'u,v' or 'u,v,count'");
    }
    std::uint64_t count = 1;
    if (fields.size() == 3) {
      auto f = fields[2];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), count);
      if (ec != std::errc() || ptr != f.data() + f.size() || count < 1) {
        throw ParseError(line_no, "malformed edge count '" + std::string(f) + "'");
      }
    }
    if (!Vocabulary::valid_token(fields[0]) || !Vocabulary::valid_token(fields[1])) {
      throw ParseError(line_no, "invalid node token");
    }
    NodeIndex u = vocab->intern(fields[0]);
    NodeIndex v = vocab->intern(fields[1]);
    nodes.push_back(u);
    nodes.push_back(v);
    edges.push_back({u, v, count});
  }
  if (edges.empty()) throw EmptyInputError("no edges in input");
  return Graph(std::move(vocab), std::move(nodes), std::move(edges));
}

std::vector<AdjPowerStats> adj_power_stats_upto(const Graph& graph, int max_i) {
  if (max_i < 1) throw ArgumentError("adjacency power must be >= 1");
  // walks[v] = number of walks of length i starting at v = row sum of A^i.
  const std::size_t n = graph.vocabulary().size();
  std::vector<std::uint64_t> walks(n, 0);
  std::vector<std::uint64_t> next(n, 0);
  for (NodeIndex v : graph.nodes()) walks[v] = 1;

  std::vector<AdjPowerStats> out;
  out.reserve(static_cast<std::size_t>(max_i));
  for (int i = 1; i <= max_i; ++i) {
    AdjPowerStats stats{i, 0, 0};
    for (NodeIndex v : graph.nodes()) {
      std::uint64_t sum = 0;
      for (const auto& e : graph.out_edges(v)) {
        if (__builtin_add_overflow(sum, walks[e.to], &sum)) {
          throw OverflowError("walk count of length " + std::to_string(i) + " exceeds 64 bits");
        }
      }
      next[v] = sum;
      if (sum > 0) ++stats.nonzero_rows;
      if (__builtin_add_overflow(stats.path_count, sum, &stats.path_count)) {
        throw OverflowError("total walk count of length " + std::to_string(i) +
                            " exceeds 64 bits");
      }
    }
    walks.swap(next);
    out.push_back(stats);
  }
  return out;
}

AdjPowerStats adj_power_stats(const Graph& graph, int i) {
  return adj_power_stats_upto(graph, i).back();
}

}  // namespace honkit
