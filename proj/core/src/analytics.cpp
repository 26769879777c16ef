#include "honkit/analytics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "honkit/errors.hpp"
#include "random.hpp"

namespace honkit {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

StructuralReport structural_report(const HigherOrderNetwork& hon, const ReportOptions& options) {
  StructuralReport r;
  r.order = hon.order();
  const std::size_t n = hon.node_count();
  r.node_count = n;
  r.edge_count = hon.edge_count();
  if (n == 0) return r;

  r.mean_in_degree = r.mean_out_degree = static_cast<double>(r.edge_count) / static_cast<double>(n);
  if (n >= 2) {
    r.density = static_cast<double>(r.edge_count) / (static_cast<double>(n) * static_cast<double>(n - 1));
  }

  DisjointSets sets(n);
  for (const auto& e : hon.edges()) sets.unite(e.from, e.to);
  // Largest component; ties go to the component holding the smallest node.
  std::size_t giant_root = sets.find(0);
  std::size_t giant_size = sets.size_of(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (sets.size_of(v) > giant_size) {
      giant_size = sets.size_of(v);
      giant_root = sets.find(v);
    }
  }
  r.gcc_ratio = static_cast<double>(giant_size) / static_cast<double>(n);

  std::vector<HonIndex> members;
  members.reserve(giant_size);
  for (std::size_t v = 0; v < n; ++v) {
    if (sets.find(v) == giant_root) members.push_back(static_cast<HonIndex>(v));
  }

  std::vector<HonIndex> sources = members;
  if (members.size() > options.exact_threshold && members.size() > options.sample_sources) {
    detail::Rng rng(options.seed);
    rng.shuffle(sources);
    sources.resize(options.sample_sources);
    std::sort(sources.begin(), sources.end());
    r.estimated = true;
  }

  std::vector<std::uint32_t> dist(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<HonIndex> queue;
  queue.reserve(n);
  std::uint64_t pair_count = 0;
  long double distance_sum = 0.0L;
  std::uint64_t diameter = 0;
  for (HonIndex s : sources) {
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const HonIndex u = queue[head];
      for (const auto& e : hon.out_edges(u)) {
        if (dist[e.to] == std::numeric_limits<std::uint32_t>::max()) {
          dist[e.to] = dist[u] + 1;
          queue.push_back(e.to);
        }
      }
    }
    for (std::size_t i = 1; i < queue.size(); ++i) {
      const auto d = dist[queue[i]];
      distance_sum += d;
      diameter = std::max<std::uint64_t>(diameter, d);
    }
    pair_count += queue.size() - 1;
    for (HonIndex v : queue) dist[v] = std::numeric_limits<std::uint32_t>::max();
  }
  r.diameter = diameter;
  r.avg_shortest_path = pair_count ? static_cast<double>(distance_sum / pair_count) : 0.0;
  return r;
}

std::vector<StructuralReport> multi_order_reports(const PathCorpus& corpus, int max_k,
                                                  const ReportOptions& options) {
  if (max_k < 1) throw ArgumentError("max order must be >= 1");
  std::vector<StructuralReport> out;
  out.reserve(static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k) out.push_back(structural_report(build_hon(corpus, k), options));
  return out;
}

DegreeDirection parse_degree_direction(std::string_view name) {
  if (name == "in") return DegreeDirection::in;
  if (name == "out") return DegreeDirection::out;
  if (name == "total") return DegreeDirection::total;
  throw ArgumentError("unknown degree direction '" + std::string(name) + "' (expected in|out|total)");
}

std::string_view to_string(DegreeDirection direction) {
  switch (direction) {
    case DegreeDirection::in: return "in";
    case DegreeDirection::out: return "out";
    case DegreeDirection::total: return "total";
  }
  return "out";
}

DegreeDistribution degree_distribution(const HigherOrderNetwork& hon, DegreeDirection direction) {
  const std::size_t n = hon.node_count();
  if (n == 0) throw ArgumentError("degree distribution of an empty network");
  std::vector<std::uint64_t> degree(n, 0);
  for (const auto& e : hon.edges()) {
    if (direction != DegreeDirection::in) ++degree[e.from];
    if (direction != DegreeDirection::out) ++degree[e.to];
  }
  std::map<std::uint64_t, std::uint64_t> census;
  for (auto d : degree) ++census[d];
  DegreeDistribution dist;
  dist.direction = direction;
  for (const auto& [d, c] : census) dist.pmf.emplace(d, static_cast<double>(c) / static_cast<double>(n));
  return dist;
}

}  // namespace honkit
