#include "honkit/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "honkit/errors.hpp"

namespace honkit {

HonScores hon_pagerank(const HigherOrderNetwork& hon, const PageRankOptions& options,
                       std::span<const double> initial) {
  const std::size_t n = hon.node_count();
  if (n == 0) throw ArgumentError("PageRank on an empty network");
  if (!(options.damping > 0.0 && options.damping < 1.0)) throw ArgumentError("damping must lie in (0, 1)");
  if (!(options.tolerance > 0.0)) throw ArgumentError("tolerance must be positive");
  if (options.max_iterations < 1) throw ArgumentError("max_iterations must be >= 1");

  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> x(n, uniform);
  if (!initial.empty()) {
    if (initial.size() != n) throw ArgumentError("initial vector has the wrong length");
    const double total = std::accumulate(initial.begin(), initial.end(), 0.0);
    if (!(total > 0.0) || std::any_of(initial.begin(), initial.end(), [](double v) { return v < 0.0; })) {
      throw ArgumentError("initial vector must be nonnegative with positive mass");
    }
    std::transform(initial.begin(), initial.end(), x.begin(), [total](double v) { return v / total; });
  }

  std::vector<bool> dangling(n);
  for (HonIndex v = 0; v < n; ++v) dangling[v] = hon.out_edges(v).empty();

  const double d = options.damping;
  std::vector<double> next(n);
  HonScores out;
  for (int it = 1; it <= options.max_iterations; ++it) {
    double dangling_mass = 0.0;
    for (HonIndex v = 0; v < n; ++v) {
      if (dangling[v]) dangling_mass += x[v];
    }
    const double base = (1.0 - d) * uniform + d * dangling_mass * uniform;
    std::fill(next.begin(), next.end(), base);
    for (const auto& e : hon.edges()) next[e.to] += d * x[e.from] * e.probability;

    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      change += std::fabs(next[i] - x[i]);
    }
    x.swap(next);
    out.iterations = it;
    out.residual = change;
    if (change < options.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.scores = std::move(x);
  return out;
}

NodeScores aggregate_pagerank(const HigherOrderNetwork& hon, std::span<const double> scores) {
  if (scores.size() != hon.node_count()) throw ArgumentError("score vector does not match network");
  std::vector<double> by_node(hon.vocabulary().size(), 0.0);
  std::vector<bool> present(by_node.size(), false);
  for (HonIndex v = 0; v < scores.size(); ++v) {
    const NodeIndex last = hon.last_node(v);
    by_node[last] += scores[v];
    present[last] = true;
  }
  NodeScores out;
  for (NodeIndex v = 0; v < by_node.size(); ++v) {
    if (present[v]) out.emplace(hon.vocabulary().token(v), by_node[v]);
  }
  return out;
}

namespace {

// Counts exchanges needed to sort `v` ascending (stable merge sort).
std::uint64_t count_inversions(std::vector<double>& v, std::vector<double>& buffer, std::size_t lo,
                               std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t swaps = count_inversions(v, buffer, lo, mid) + count_inversions(v, buffer, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += mid - i;
      buffer[k++] = v[j++];
    } else {
      buffer[k++] = v[i++];
    }
  }
  while (i < mid) buffer[k++] = v[i++];
  while (j < hi) buffer[k++] = v[j++];
  std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo), buffer.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

// Σ t(t−1)/2 over runs of equal values in a sorted range, using `same` to compare.
template <typename It, typename Same>
std::uint64_t tied_pairs(It first, It last, Same same) {
  std::uint64_t total = 0;
  while (first != last) {
    It run = first;
    std::uint64_t t = 0;
    while (run != last && same(*first, *run)) {
      ++run;
      ++t;
    }
    total += t * (t - 1) / 2;
    first = run;
  }
  return total;
}

}  // namespace

double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("kendall_tau_b needs equal-length samples");
  const std::size_t n = x.size();
  if (n < 2) throw ArgumentError("kendall_tau_b needs at least two pairs");

  std::vector<std::pair<double, double>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {x[i], y[i]};
  std::sort(pairs.begin(), pairs.end());

  const std::uint64_t total = std::uint64_t{n} * (n - 1) / 2;
  const std::uint64_t x_ties =
      tied_pairs(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first == b.first; });
  const std::uint64_t joint_ties =
      tied_pairs(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a == b; });

  std::vector<double> ys(n);
  std::transform(pairs.begin(), pairs.end(), ys.begin(), [](const auto& p) { return p.second; });
  std::vector<double> buffer(n);
  const std::uint64_t swaps = count_inversions(ys, buffer, 0, n);
  const std::uint64_t y_ties = tied_pairs(ys.begin(), ys.end(), std::equal_to<>{});

  const double denom = std::sqrt(static_cast<double>(total - x_ties) * static_cast<double>(total - y_ties));
  if (denom == 0.0) return 0.0;
  // concordant − discordant = total − x_ties − y_ties + joint_ties − 2·discordant
  const double numer = static_cast<double>(total) - static_cast<double>(x_ties) - static_cast<double>(y_ties) +
                       static_cast<double>(joint_ties) - 2.0 * static_cast<double>(swaps);
  return std::clamp(numer / denom, -1.0, 1.0);
}

double kendall_tau(const NodeScores& x, const NodeScores& y) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [key, value] : x) {
    auto it = y.find(key);
    if (it == y.end()) continue;
    xs.push_back(value);
    ys.push_back(it->second);
  }
  if (xs.size() < 2) throw ArgumentError("kendall_tau needs at least two shared keys");
  return kendall_tau_b(xs, ys);
}

std::vector<AlignmentPoint> pagerank_alignment(const PathCorpus& corpus, int max_k,
                                               const PageRankOptions& options) {
  if (max_k < 1) throw ArgumentError("max order must be >= 1");
  NodeScores visits;
  for (const auto& [token, count] : visit_counts(corpus)) visits.emplace(token, static_cast<double>(count));

  std::vector<AlignmentPoint> out;
  for (int k = 1; k <= max_k; ++k) {
    AlignmentPoint point;
    point.order = k;
    const auto layer = build_hon(corpus, k);
    if (layer.node_count() > 0) {
      const auto pr = hon_pagerank(layer, options);
      point.converged = pr.converged;
      point.iterations = pr.iterations;
      const auto aggregated = aggregate_pagerank(layer, pr.scores);
      std::size_t shared = 0;
      for (const auto& [key, value] : aggregated) shared += visits.count(key);
      if (shared >= 2) point.tau = kendall_tau(aggregated, visits);
    }
    out.push_back(point);
  }
  return out;
}

}  // namespace honkit
