#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "honkit/analytics.hpp"
#include "honkit/corpus.hpp"
#include "honkit/prediction.hpp"
#include "honkit/ranking.hpp"

namespace honkit {

/// KL(p‖q) in nats. Both pmfs are extended to their union support, every
/// mass gets `smoothing_epsilon` added, and both are renormalized.
double kl_divergence(const DegreeDistribution& p, const DegreeDistribution& q,
                     double smoothing_epsilon = 1e-10);

/// Metrics that make up the multi-order feature space, in report order.
inline constexpr std::string_view kFeatureMetrics[] = {"nodes",  "edges",   "diameter",
                                                       "avg_sp", "density", "gcc_ratio"};

struct FeatureVector {
  std::string metric_name;
  std::vector<double> values;  // index i holds order i + 1
};

/// One raw-valued vector per metric. Reports must cover orders 1..K in
/// sequence; any gap throws ArgumentError.
std::vector<FeatureVector> feature_vectors(std::span<const StructuralReport> reports);

/// dot(u, v) / (‖u‖·‖v‖). Throws ArgumentError on length mismatch, empty
/// input, or an all-zero vector.
double cosine_similarity(std::span<const double> u, std::span<const double> v);

struct ComparisonConfig {
  PageRankOptions pagerank;
  ReportOptions report;
  double kl_epsilon = 1e-10;
  DegreeDirection kl_direction = DegreeDirection::out;
};

struct ScenarioSummary {
  std::string label;
  std::vector<StructuralReport> reports;
  std::vector<AlignmentPoint> alignment;
  std::vector<std::optional<AccuracyResult>> accuracy;  // in-sample, empty when no transitions
};

struct MetricSimilarity {
  std::string metric;
  std::optional<double> cosine;  // empty when either vector is all zero
};

struct OrderComparison {
  int order = 0;
  std::optional<double> kl;              // empty when either layer has no nodes
  std::optional<double> tau_delta;       // a − b
  std::optional<double> accuracy_delta;  // a − b
};

struct ComparisonReport {
  ScenarioSummary a;
  ScenarioSummary b;
  std::vector<MetricSimilarity> cosine;
  std::vector<OrderComparison> orders;
};

/// Builds layers 1..max_k of both scenarios and compares them side by side.
ComparisonReport comparison_report(const PathCorpus& a, const PathCorpus& b, int max_k,
                                   const ComparisonConfig& config = {}, std::string label_a = "a",
                                   std::string label_b = "b");

}  // namespace honkit
