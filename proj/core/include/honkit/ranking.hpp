#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "honkit/corpus.hpp"
#include "honkit/hon.hpp"

namespace honkit {

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-12;  // L1 change between iterates
  int max_iterations = 1000;
};

/// Stationary scores indexed by HonIndex.
struct HonScores {
  std::vector<double> scores;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;  // L1 change of the final iteration
};

/// Power iteration with uniform teleportation over HON nodes. Dangling nodes
/// spread their mass uniformly. `initial`, when given, must have one entry
/// per node; it is normalized before use.
HonScores hon_pagerank(const HigherOrderNetwork& hon, const PageRankOptions& options = {},
                       std::span<const double> initial = {});

using NodeScores = std::map<std::string, double>;

/// Sums the score of each HON node onto the last node of its state.
NodeScores aggregate_pagerank(const HigherOrderNetwork& hon, std::span<const double> scores);

/// Tie-corrected Kendall tau-b over paired samples, O(n log n). Returns 0 when
/// either side is entirely tied.
double kendall_tau_b(std::span<const double> x, std::span<const double> y);

/// tau-b over the keys present in both maps. Throws ArgumentError when
/// fewer than two keys are shared.
double kendall_tau(const NodeScores& x, const NodeScores& y);

struct AlignmentPoint {
  int order = 0;
  std::optional<double> tau;  // empty when the layer shares < 2 nodes with the corpus
  bool converged = false;
  int iterations = 0;
};

/// Per order: PageRank on the layer, aggregation, and tau-b against
/// multiplicity-weighted visit counts.
std::vector<AlignmentPoint> pagerank_alignment(const PathCorpus& corpus, int max_k,
                                               const PageRankOptions& options = {});

}  // namespace honkit
