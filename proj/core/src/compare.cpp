#include "honkit/compare.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "honkit/errors.hpp"
#include "honkit/hon.hpp"

namespace honkit {

double kl_divergence(const DegreeDistribution& p, const DegreeDistribution& q, double smoothing_epsilon) {
  if (!(smoothing_epsilon > 0.0)) throw ArgumentError("smoothing epsilon must be positive");
  std::set<std::uint64_t> support;
  for (const auto& [d, mass] : p.pmf) support.insert(d);
  for (const auto& [d, mass] : q.pmf) support.insert(d);

  auto smoothed = [&](const DegreeDistribution& dist) {
    std::vector<double> out;
    out.reserve(support.size());
    double total = 0.0;
    for (auto d : support) {
      auto it = dist.pmf.find(d);
      const double mass = (it == dist.pmf.end() ? 0.0 : it->second) + smoothing_epsilon;
      out.push_back(mass);
      total += mass;
    }
    for (auto& m : out) m /= total;
    return out;
  };
  const auto ps = smoothed(p);
  const auto qs = smoothed(q);
  double kl = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) kl += ps[i] * std::log(ps[i] / qs[i]);
  return std::max(kl, 0.0);
}

std::vector<FeatureVector> feature_vectors(std::span<const StructuralReport> reports) {
  if (reports.empty()) throw ArgumentError("feature vectors need at least one report");
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].order != static_cast<int>(i) + 1) {
      throw ArgumentError("reports must cover orders 1..K without gaps");
    }
  }
  std::vector<FeatureVector> out;
  for (auto metric : kFeatureMetrics) out.push_back({std::string(metric), {}});
  for (const auto& r : reports) {
    out[0].values.push_back(static_cast<double>(r.node_count));
    out[1].values.push_back(static_cast<double>(r.edge_count));
    out[2].values.push_back(static_cast<double>(r.diameter));
    out[3].values.push_back(r.avg_shortest_path);
    out[4].values.push_back(r.density);
    out[5].values.push_back(r.gcc_ratio);
  }
  return out;
}

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size() || u.empty()) throw ArgumentError("cosine similarity needs equal non-empty vectors");
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) throw ArgumentError("cosine similarity of a zero vector");
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

namespace {

ScenarioSummary summarize(const PathCorpus& corpus, int max_k, const ComparisonConfig& config,
                          std::string label, std::vector<HigherOrderNetwork>& layers) {
  ScenarioSummary s;
  s.label = std::move(label);
  const auto model = build_multi_order(corpus, max_k);
  for (int k = 1; k <= max_k; ++k) {
    const auto& layer = model.layer(k);
    s.reports.push_back(structural_report(layer, config.report));
    layers.push_back(layer);
  }
  s.alignment = pagerank_alignment(corpus, max_k, config.pagerank);
  for (int k = 1; k <= max_k; ++k) {
    if (corpus.transition_count() == 0) {
      s.accuracy.emplace_back();
    } else {
      s.accuracy.emplace_back(prediction_accuracy(model, corpus, k));
    }
  }
  return s;
}

}  // namespace

ComparisonReport comparison_report(const PathCorpus& a, const PathCorpus& b, int max_k,
                                   const ComparisonConfig& config, std::string label_a,
                                   std::string label_b) {
  if (max_k < 1) throw ArgumentError("max order must be >= 1");
  if (a.instance_count() == 0 || b.instance_count() == 0) throw ArgumentError("comparison needs non-empty corpora");

  ComparisonReport report;
  std::vector<HigherOrderNetwork> layers_a;
  std::vector<HigherOrderNetwork> layers_b;
  report.a = summarize(a, max_k, config, std::move(label_a), layers_a);
  report.b = summarize(b, max_k, config, std::move(label_b), layers_b);

  const auto fa = feature_vectors(report.a.reports);
  const auto fb = feature_vectors(report.b.reports);
  for (std::size_t m = 0; m < fa.size(); ++m) {
    MetricSimilarity sim{fa[m].metric_name, std::nullopt};
    auto nonzero = [](const std::vector<double>& v) {
      return std::any_of(v.begin(), v.end(), [](double x) { return x != 0.0; });
    };
    if (nonzero(fa[m].values) && nonzero(fb[m].values)) sim.cosine = cosine_similarity(fa[m].values, fb[m].values);
    report.cosine.push_back(std::move(sim));
  }

  for (int k = 1; k <= max_k; ++k) {
    const auto i = static_cast<std::size_t>(k) - 1;
    OrderComparison oc;
    oc.order = k;
    if (layers_a[i].node_count() > 0 && layers_b[i].node_count() > 0) {
      oc.kl = kl_divergence(degree_distribution(layers_a[i], config.kl_direction),
                            degree_distribution(layers_b[i], config.kl_direction), config.kl_epsilon);
    }
    const auto& ta = report.a.alignment[i].tau;
    const auto& tb = report.b.alignment[i].tau;
    if (ta && tb) oc.tau_delta = *ta - *tb;
    const auto& aa = report.a.accuracy[i];
    const auto& ab = report.b.accuracy[i];
    if (aa && ab) oc.accuracy_delta = aa->accuracy - ab->accuracy;
    report.orders.push_back(oc);
  }
  return report;
}

}  // namespace honkit
