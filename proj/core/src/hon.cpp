#include "honkit/hon.hpp"

#include <algorithm>
#include <numeric>

#include "honkit/errors.hpp"

namespace honkit {

HigherOrderNetwork::HigherOrderNetwork(std::shared_ptr<const Vocabulary> vocabulary, int order,
                                       std::vector<NodeIndex> states, std::vector<HonEdge> edges)
    : vocabulary_(std::move(vocabulary)), order_(order), states_(std::move(states)) {
  if (!vocabulary_) throw ArgumentError("network requires a vocabulary");
  if (order_ < 1) throw ArgumentError("network order must be >= 1");
  if (states_.size() % static_cast<std::size_t>(order_) != 0) {
    throw ArgumentError("state buffer is not a multiple of the order");
  }
  const std::size_t n = node_count();
  index_.reserve(n);
  for (HonIndex i = 0; i < n; ++i) {
    auto s = state(i);
    for (NodeIndex v : s) {
      if (v >= vocabulary_->size()) throw ArgumentError("state node outside vocabulary");
    }
    if (!index_.emplace(std::string(key_of(s)), i).second) {
      throw ArgumentError("duplicate state '" + label(i) + "'");
    }
  }

  std::sort(edges.begin(), edges.end(), [](const HonEdge& a, const HonEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) throw ArgumentError("edge endpoint outside network");
    if (e.count == 0) throw ArgumentError("edge count must be >= 1");
    if (!edges_.empty() && edges_.back().from == e.from && edges_.back().to == e.to) {
      edges_.back().count += e.count;
    } else {
      edges_.push_back({e.from, e.to, e.count, 0.0});
    }
  }

  offsets_.assign(n + 1, 0);
  out_totals_.assign(n, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.from + 1];
    out_totals_[e.from] += e.count;
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  for (auto& e : edges_) {
    e.probability = static_cast<double>(e.count) / static_cast<double>(out_totals_[e.from]);
  }
}

HigherOrderNetwork HigherOrderNetwork::from_graph(const Graph& graph) {
  std::vector<NodeIndex> states(graph.nodes().begin(), graph.nodes().end());
  std::vector<HonIndex> position(graph.vocabulary().size(), 0);
  for (HonIndex i = 0; i < states.size(); ++i) position[states[i]] = i;
  std::vector<HonEdge> edges;
  edges.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) edges.push_back({position[e.from], position[e.to], e.count, 0.0});
  return HigherOrderNetwork(graph.shared_vocabulary(), 1, std::move(states), std::move(edges));
}

std::optional<HonIndex> HigherOrderNetwork::find(std::span<const NodeIndex> state) const {
  if (state.size() != static_cast<std::size_t>(order_)) return std::nullopt;
  auto it = index_.find(key_of(state));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string HigherOrderNetwork::label(HonIndex node, char separator) const {
  std::string out;
  auto s = state(node);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += separator;
    out += vocabulary_->token(s[i]);
  }
  return out;
}

std::size_t HigherOrderNetwork::overlap_violations() const {
  std::size_t bad = 0;
  for (const auto& e : edges_) {
    auto from = state(e.from);
    auto to = state(e.to);
    if (!std::equal(from.begin() + 1, from.end(), to.begin(), to.end() - 1)) ++bad;
  }
  return bad;
}

HigherOrderNetwork build_hon(const PathCorpus& corpus, int k) {
  if (k < 1) throw ArgumentError("order must be >= 1");
  const auto order = static_cast<std::size_t>(k);

  std::vector<NodeIndex> states;
  std::unordered_map<std::string, HonIndex> ids;
  std::unordered_map<std::uint64_t, std::uint64_t> edge_counts;
  std::vector<HonIndex> window_ids;

  auto intern = [&](std::span<const NodeIndex> s) {
    std::string key(reinterpret_cast<const char*>(s.data()), s.size_bytes());
    auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<HonIndex>(ids.size()));
    if (inserted) states.insert(states.end(), s.begin(), s.end());
    return it->second;
  };

  for (const auto& path : corpus.paths()) {
    if (path.nodes.size() < order) continue;
    std::span<const NodeIndex> nodes(path.nodes);
    window_ids.clear();
    for (std::size_t i = 0; i + order <= nodes.size(); ++i) {
      window_ids.push_back(intern(nodes.subspan(i, order)));
    }
    for (std::size_t i = 0; i + 1 < window_ids.size(); ++i) {
      std::uint64_t key = (std::uint64_t{window_ids[i]} << 32) | window_ids[i + 1];
      edge_counts[key] += path.multiplicity;
    }
  }

  std::vector<HonEdge> edges;
  edges.reserve(edge_counts.size());
  for (const auto& [key, count] : edge_counts) {
    edges.push_back({static_cast<HonIndex>(key >> 32), static_cast<HonIndex>(key & 0xffffffffu),
                     count, 0.0});
  }
  return HigherOrderNetwork(corpus.shared_vocabulary(), k, std::move(states), std::move(edges));
}

void write_hon_csv(const HigherOrderNetwork& hon, std::ostream& out) {
  struct Row {
    std::string from;
    std::string to;
    std::uint64_t count;
    double probability;
  };
  std::vector<Row> rows;
  rows.reserve(hon.edge_count());
  for (const auto& e : hon.edges()) rows.push_back({hon.label(e.from), hon.label(e.to), e.count, e.probability});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  out << "from,to,count,probability\n";
  const auto old_precision = out.precision(17);
  for (const auto& r : rows) out << r.from << ',' << r.to << ',' << r.count << ',' << r.probability << '\n';
  out.precision(old_precision);
}

MultiOrderModel::MultiOrderModel(std::vector<HigherOrderNetwork> layers,
                                 std::vector<std::uint64_t> start_counts, Graph topology)
    : layers_(std::move(layers)), start_counts_(std::move(start_counts)), topology_(std::move(topology)) {
  if (layers_.empty()) throw ArgumentError("model needs at least one layer");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i].order() != static_cast<int>(i) + 1) throw ArgumentError("layers must be orders 1..K");
  }
  start_total_ = std::accumulate(start_counts_.begin(), start_counts_.end(), std::uint64_t{0});
  if (start_total_ == 0) throw ArgumentError("model needs a non-empty start distribution");
}

const HigherOrderNetwork& MultiOrderModel::layer(int k) const {
  if (k < 1 || k > max_order()) {
    throw ArgumentError("order " + std::to_string(k) + " outside model range 1.." +
                        std::to_string(max_order()));
  }
  return layers_[static_cast<std::size_t>(k) - 1];
}

double MultiOrderModel::start_probability(NodeIndex node) const {
  if (node >= start_counts_.size()) return 0.0;
  return static_cast<double>(start_counts_[node]) / static_cast<double>(start_total_);
}

std::map<std::string, double> MultiOrderModel::start_distribution() const {
  std::map<std::string, double> out;
  for (NodeIndex v = 0; v < start_counts_.size(); ++v) {
    if (start_counts_[v] > 0) out.emplace(vocabulary().token(v), start_probability(v));
  }
  return out;
}

MultiOrderModel build_multi_order(const PathCorpus& corpus, int max_k) {
  if (max_k < 1) throw ArgumentError("max order must be >= 1");
  if (corpus.instance_count() == 0) throw ArgumentError("cannot build a model from an empty corpus");
  std::vector<HigherOrderNetwork> layers;
  layers.reserve(static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k) layers.push_back(build_hon(corpus, k));
  std::vector<std::uint64_t> starts(corpus.vocabulary().size(), 0);
  for (const auto& p : corpus.paths()) starts[p.nodes.front()] += p.multiplicity;
  return MultiOrderModel(std::move(layers), std::move(starts), first_order_graph(corpus));
}

double transition_prob(const MultiOrderModel& model, std::span<const NodeIndex> history,
                       NodeIndex next, int k) {
  if (history.empty()) throw ArgumentError("history must be non-empty");
  if (k < 1 || k > model.max_order()) throw ArgumentError("order outside model range");
  const std::size_t c = std::min(static_cast<std::size_t>(k), history.size());
  const auto& layer = model.layer(static_cast<int>(c));
  auto from = layer.find(history.last(c));
  if (!from) return 0.0;
  for (const auto& e : layer.out_edges(*from)) {
    if (layer.last_node(e.to) == next) return e.probability;
  }
  return 0.0;
}

double transition_prob(const MultiOrderModel& model, const std::vector<std::string>& history,
                       std::string_view next, int k) {
  std::vector<NodeIndex> ids;
  ids.reserve(history.size());
  for (const auto& t : history) ids.push_back(model.vocabulary().find(t).value_or(kUnknownNode));
  return transition_prob(model, ids, model.vocabulary().find(next).value_or(kUnknownNode), k);
}

std::vector<NodeIndex> translate(const Path& path, const Vocabulary& source,
                                 const Vocabulary& target) {
  if (&source == &target) return path.nodes;
  std::vector<NodeIndex> out;
  out.reserve(path.nodes.size());
  for (NodeIndex n : path.nodes) out.push_back(target.find(source.token(n)).value_or(kUnknownNode));
  return out;
}

}  // namespace honkit
