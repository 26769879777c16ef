#include "honkit/synth.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "honkit/errors.hpp"
#include "random.hpp"

namespace honkit {
namespace {

std::string_view key_of(std::span<const NodeIndex> s) {
  return {reinterpret_cast<const char*>(s.data()), s.size_bytes()};
}

}  // namespace

std::size_t PlantedChain::find_context(std::span<const NodeIndex> context) const {
  if (context.size() != static_cast<std::size_t>(order_)) return npos;
  auto it = context_index_.find(std::string(key_of(context)));
  return it == context_index_.end() ? npos : it->second;
}

double PlantedChain::probability(std::span<const NodeIndex> context, NodeIndex next) const {
  auto i = find_context(context);
  if (i == npos) return 0.0;
  for (const auto& c : transitions_[i]) {
    if (c.node == next) return c.probability;
  }
  return 0.0;
}

PlantedChain random_planted_chain(std::size_t node_count, int order, int branching, double determinism,
                                  std::uint64_t seed) {
  if (order < 1) throw ConstructionError("planted order must be >= 1");
  if (branching < 2) throw ConstructionError("branching must be >= 2");
  if (node_count <= static_cast<std::size_t>(branching)) {
    throw ConstructionError("need more nodes than branching to avoid self-loops");
  }
  if (!(determinism >= 0.0 && determinism <= 1.0)) throw ConstructionError("determinism must lie in [0, 1]");
  const auto b = static_cast<std::size_t>(branching);
  double contexts = static_cast<double>(node_count);
  for (int i = 1; i < order; ++i) contexts *= static_cast<double>(b);
  if (contexts > 5e6) throw ConstructionError("too many contexts for the requested order");

  detail::Rng rng(seed);
  PlantedChain chain;
  chain.order_ = order;
  chain.branching_ = branching;
  chain.determinism_ = determinism;
  chain.seed_ = seed;

  auto vocab = std::make_shared<Vocabulary>();
  const std::size_t width = std::to_string(node_count - 1).size();
  for (std::size_t i = 0; i < node_count; ++i) {
    auto digits = std::to_string(i);
    vocab->intern("v" + std::string(width - digits.size(), '0') + digits);
  }
  chain.vocabulary_ = vocab;

  // Circulant base topology with random distinct offsets, then relabelled.
  std::vector<std::size_t> offsets(node_count - 1);
  for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = i + 1;
  rng.shuffle(offsets);
  offsets.resize(b);
  std::vector<NodeIndex> relabel(node_count);
  for (std::size_t i = 0; i < node_count; ++i) relabel[i] = static_cast<NodeIndex>(i);
  rng.shuffle(relabel);
  chain.successors_.assign(node_count, {});
  for (std::size_t v = 0; v < node_count; ++v) {
    auto& succ = chain.successors_[relabel[v]];
    for (auto o : offsets) succ.push_back(relabel[(v + o) % node_count]);
    std::sort(succ.begin(), succ.end());
  }

  // Enumerate all length-m walks as contexts.
  std::vector<std::vector<NodeIndex>> walks;
  for (NodeIndex v = 0; v < node_count; ++v) walks.push_back({v});
  for (int len = 1; len < order; ++len) {
    std::vector<std::vector<NodeIndex>> longer;
    longer.reserve(walks.size() * b);
    for (const auto& w : walks) {
      for (NodeIndex s : chain.successors_[w.back()]) {
        auto ext = w;
        ext.push_back(s);
        longer.push_back(std::move(ext));
      }
    }
    walks.swap(longer);
  }

  std::vector<NodeIndex> preferred(walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const auto& succ = chain.successors_[walks[i].back()];
    preferred[i] = succ[rng.index(succ.size())];
  }
  if (order >= 2) {
    // Contexts sharing a suffix must disagree somewhere.
    std::map<std::vector<NodeIndex>, std::vector<std::size_t>> by_suffix;
    for (std::size_t i = 0; i < walks.size(); ++i) {
      by_suffix[std::vector<NodeIndex>(walks[i].begin() + 1, walks[i].end())].push_back(i);
    }
    for (const auto& [suffix, members] : by_suffix) {
      if (members.size() < 2) continue;
      const bool uniform = std::all_of(members.begin(), members.end(),
                                       [&](std::size_t i) { return preferred[i] == preferred[members.front()]; });
      if (!uniform) continue;
      const auto& succ = chain.successors_[suffix.back()];
      const std::size_t last = members.back();
      auto pos = std::find(succ.begin(), succ.end(), preferred[last]) - succ.begin();
      const std::size_t shift = 1 + rng.index(succ.size() - 1);
      preferred[last] = succ[(static_cast<std::size_t>(pos) + shift) % succ.size()];
    }
  }

  const double rest = b > 1 ? (1.0 - determinism) / static_cast<double>(b - 1) : 0.0;
  chain.contexts_.reserve(walks.size() * static_cast<std::size_t>(order));
  chain.transitions_.reserve(walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    chain.context_index_.emplace(std::string(key_of(walks[i])), i);
    chain.contexts_.insert(chain.contexts_.end(), walks[i].begin(), walks[i].end());
    std::vector<PlantedChain::Continuation> dist;
    for (NodeIndex s : chain.successors_[walks[i].back()]) {
      const double p = s == preferred[i] ? determinism : rest;
      if (p > 0.0) dist.push_back({s, p});
    }
    chain.transitions_.push_back(std::move(dist));
  }
  return chain;
}

PathCorpus generate_corpus(const PlantedChain& chain, std::size_t n_paths, std::size_t min_len,
                           std::size_t max_len, std::uint64_t seed) {
  const auto m = static_cast<std::size_t>(chain.order());
  if (n_paths < 1) throw ArgumentError("n_paths must be >= 1");
  if (min_len < m || max_len < min_len) throw ArgumentError("need order <= min_len <= max_len");

  detail::Rng rng(seed);
  std::vector<Path> paths;
  paths.reserve(n_paths);
  for (std::size_t p = 0; p < n_paths; ++p) {
    const std::size_t len = min_len + rng.index(max_len - min_len + 1);
    Path path;
    path.nodes.reserve(len);
    auto start = chain.context(rng.index(chain.context_count()));
    path.nodes.assign(start.begin(), start.end());
    while (path.nodes.size() < len) {
      auto ctx = std::span<const NodeIndex>(path.nodes).last(m);
      const auto dist = chain.transitions(chain.find_context(ctx));
      double u = rng.unit();
      NodeIndex next = dist.back().node;
      for (const auto& c : dist) {
        if (u < c.probability) {
          next = c.node;
          break;
        }
        u -= c.probability;
      }
      path.nodes.push_back(next);
    }
    paths.push_back(std::move(path));
  }
  return PathCorpus(chain.vocabulary(), std::move(paths));
}

PathCorpus shortest_route_corpus(const Graph& graph, std::size_t n_paths, std::size_t min_hops,
                                 std::uint64_t seed) {
  if (n_paths < 1) throw ArgumentError("n_paths must be >= 1");
  const std::size_t n = graph.vocabulary().size();
  constexpr auto unreachable = std::numeric_limits<std::uint32_t>::max();

  // Reverse adjacency for walking shortest-path DAGs backwards.
  std::vector<std::vector<NodeIndex>> preds(n);
  for (const auto& e : graph.edges()) preds[e.to].push_back(e.from);

  struct Tree {
    std::vector<std::uint32_t> dist;
    std::vector<double> sigma;  // number of shortest paths from the source
  };
  std::vector<Tree> trees(n);
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (NodeIndex s : graph.nodes()) {
    Tree t{std::vector<std::uint32_t>(n, unreachable), std::vector<double>(n, 0.0)};
    std::vector<NodeIndex> queue{s};
    t.dist[s] = 0;
    t.sigma[s] = 1.0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeIndex u = queue[head];
      for (const auto& e : graph.out_edges(u)) {
        if (t.dist[e.to] == unreachable) {
          t.dist[e.to] = t.dist[u] + 1;
          queue.push_back(e.to);
        }
        if (t.dist[e.to] == t.dist[u] + 1) t.sigma[e.to] += t.sigma[u];
      }
    }
    for (NodeIndex d : graph.nodes()) {
      if (d != s && t.dist[d] != unreachable && t.dist[d] >= min_hops) pairs.emplace_back(s, d);
    }
    trees[s] = std::move(t);
  }
  if (pairs.empty()) throw ArgumentError("no node pairs at the requested hop distance");

  detail::Rng rng(seed);
  std::vector<Path> paths;
  paths.reserve(n_paths);
  for (std::size_t p = 0; p < n_paths; ++p) {
    const auto [s, d] = pairs[rng.index(pairs.size())];
    const auto& t = trees[s];
    std::vector<NodeIndex> route{d};
    NodeIndex cur = d;
    while (cur != s) {
      double u = rng.unit() * t.sigma[cur];
      NodeIndex chosen = unreachable;
      for (NodeIndex q : preds[cur]) {
        if (t.dist[q] + 1 != t.dist[cur]) continue;
        chosen = q;
        if (u < t.sigma[q]) break;
        u -= t.sigma[q];
      }
      route.push_back(chosen);
      cur = chosen;
    }
    std::reverse(route.begin(), route.end());
    paths.push_back(Path{std::move(route), 1});
  }
  return PathCorpus(graph.shared_vocabulary(), std::move(paths));
}

}  // namespace honkit
