#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "honkit/corpus.hpp"
#include "honkit/hon.hpp"

namespace honkit {

struct StructuralReport {
  int order = 0;
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
  double mean_in_degree = 0.0;
  double mean_out_degree = 0.0;
  std::uint64_t diameter = 0;       // hops
  double avg_shortest_path = 0.0;   // hops
  double density = 0.0;
  double gcc_ratio = 0.0;
  /// Diameter and average path length come from a source sample rather than
  /// all-pairs BFS.
  bool estimated = false;
};

struct ReportOptions {
  /// All-pairs BFS up to this many nodes; above it BFS runs from a sample.
  std::size_t exact_threshold = 20000;
  std::size_t sample_sources = 1000;
  std::uint64_t seed = 42;
};

/// Metrics on the unweighted directed graph of `hon`. Distances are directed
/// hop counts between ordered pairs inside the largest weakly connected
/// component; unreachable pairs are left out of both diameter and mean.
StructuralReport structural_report(const HigherOrderNetwork& hon, const ReportOptions& options = {});

/// Reports for orders 1..max_k, built from `corpus`.
std::vector<StructuralReport> multi_order_reports(const PathCorpus& corpus, int max_k,
                                                  const ReportOptions& options = {});

enum class DegreeDirection { in, out, total };

DegreeDirection parse_degree_direction(std::string_view name);
std::string_view to_string(DegreeDirection direction);

struct DegreeDistribution {
  DegreeDirection direction = DegreeDirection::out;
  std::map<std::uint64_t, double> pmf;
};

/// Fraction of nodes at each degree; isolated nodes count at degree 0.
DegreeDistribution degree_distribution(const HigherOrderNetwork& hon, DegreeDirection direction);

}  // namespace honkit
