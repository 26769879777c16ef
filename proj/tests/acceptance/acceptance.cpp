// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace honkit;

namespace {

// Tolerances and limits.
constexpr double kDensityTol = 1e-4;
constexpr double kDegreeTol = 0.01;
constexpr double kAvgSpTol = 0.05;
constexpr double kNestingTol = 1e-9;
constexpr double kPValueTol = 1e-9;
constexpr double kPageRankL1Tol = 1e-8;
constexpr double kAggregateSumTol = 1e-10;
constexpr double kCosineTol = 1e-12;
constexpr double kSelfKlTol = 1e-10;
constexpr double kRouteMeanTransitions = 3.82;
constexpr double kRouteMeanTol = 0.15;
constexpr double kFragmentedGcc = 0.95;
constexpr double kEpsilon = 0.05;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Suite {
 public:
  void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed > limit_s) {
      o.pass = false;
      o.detail += " [time limit exceeded]";
    }
    std::printf("criterion %2d %s  %s (%.2fs of %.0fs)  %s\n", id, o.pass ? "PASS" : "FAIL", title, elapsed, limit_s,
                o.detail.c_str());
    std::fflush(stdout);
    failures_ += o.pass ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

Outcome sioux_falls_row() {
  const auto r = structural_report(HigherOrderNetwork::from_graph(fixtures::load_sioux_falls()));
  Outcome o;
  o.pass = r.node_count == 24 && r.edge_count == 76 && std::fabs(r.density - 0.13768) <= kDensityTol &&
           std::fabs(r.mean_in_degree - 3.17) <= kDegreeTol && std::fabs(r.mean_out_degree - 3.17) <= kDegreeTol &&
           r.diameter == 6 && std::fabs(r.avg_shortest_path - 3.01) <= kAvgSpTol && r.gcc_ratio == 1.0;
  o.detail = "density=" + fmt(r.density) + " degree=" + fmt(r.mean_out_degree) + " diameter=" +
             std::to_string(r.diameter) + " avg_sp=" + fmt(r.avg_shortest_path) + " gcc=" + fmt(r.gcc_ratio);
  return o;
}

Outcome layer_size_identity() {
  int corpora = 0, checks = 0, violations = 0;
  for (std::uint64_t seed = 1; corpora < 50; ++seed, ++corpora) {
    PathCorpus corpus = seed % 2 == 0
                            ? generate_corpus(random_planted_chain(6 + seed % 9, 1 + static_cast<int>(seed % 3), 2 + static_cast<int>(seed % 3), 0.8, seed),
                                              100 + 40 * seed, 3, 6 + seed % 10, seed + 500)
                            : fixtures::make_corpus(fixtures::random_token_corpus(seed, 5 + static_cast<int>(seed % 20),
                                                                                  20 + static_cast<int>(7 * seed), 1, 4 + static_cast<int>(seed % 12)));
    std::vector<HigherOrderNetwork> layers;
    for (int k = 1; k <= 5; ++k) layers.push_back(build_hon(corpus, k));
    for (int k = 1; k <= 4; ++k) {
      ++checks;
      if (layers[k].node_count() != layers[k - 1].edge_count()) ++violations;
    }
  }
  return {violations == 0, std::to_string(corpora) + " corpora, " + std::to_string(checks) + " layer pairs, " +
                               std::to_string(violations) + " violations"};
}

struct PlantedRun {
  int order = 0;
  int recovered = 0;
  int runs = 0;
  double worst_nesting = std::numeric_limits<double>::infinity();  // min of logL(k+1) - logL(k)
  double min_lambda = std::numeric_limits<double>::infinity();
  bool dof_monotone = true;
};

std::vector<PlantedRun> planted_runs;

Outcome planted_order_recovery() {
  planted_runs.clear();
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    PlantedRun run;
    run.order = m;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto chain = random_planted_chain(10, m, 3, 0.9, seed);
      const auto corpus = generate_corpus(chain, 10000, 8, 15, seed + 1000);
      const auto model = build_multi_order(corpus, 4);
      const auto sel = optimal_order(model, corpus, kEpsilon, 4);
      ++run.runs;
      if (sel.optimal_order == m) ++run.recovered;

      const auto ll = log_likelihoods(model, corpus, 4);
      for (std::size_t k = 0; k + 1 < ll.size(); ++k) run.worst_nesting = std::min(run.worst_nesting, ll[k + 1] - ll[k]);
      for (int k = 1; k < 4; ++k) {
        const auto r = lrt(model, corpus, k);
        run.min_lambda = std::min(run.min_lambda, r.lambda);
        run.dof_monotone = run.dof_monotone && degrees_of_freedom(model.first_order_topology(), k + 1) >=
                                                   degrees_of_freedom(model.first_order_topology(), k);
      }
    }
    o.pass = o.pass && run.recovered >= 18;
    o.detail += "m=" + std::to_string(m) + ": " + std::to_string(run.recovered) + "/20  ";
    planted_runs.push_back(run);
  }
  return o;
}

Outcome likelihood_nesting() {
  if (planted_runs.size() != 3) return {false, "criterion 3 corpora unavailable"};
  Outcome o;
  double worst = std::numeric_limits<double>::infinity();
  double min_lambda = worst;
  for (const auto& r : planted_runs) {
    worst = std::min(worst, r.worst_nesting);
    min_lambda = std::min(min_lambda, r.min_lambda);
    o.pass = o.pass && r.dof_monotone;
  }
  o.pass = o.pass && worst >= -kNestingTol && min_lambda >= 0.0;
  o.detail = "min logL(k+1)-logL(k)=" + fmt(worst) + " min lambda=" + fmt(min_lambda) + " delta_d>=0 on 180 tests";
  return o;
}

Outcome chi_square_oracle() {
  double worst = 0.0;
  int cases = 0;
  for (int dd = 1; dd <= 50; ++dd) {
    for (double lambda : {0.0, 0.5, 1.0, 2.0, 4.0, 10.0, 50.0, 200.0}) {
      const auto r = likelihood_ratio_test(1, -lambda / 2.0, 0.0, 10, 10 + static_cast<std::uint64_t>(dd));
      worst = std::max(worst, std::fabs(r.p_value - oracle::chi_square_survival(lambda, dd)));
      ++cases;
    }
  }
  return {worst <= kPValueTol, std::to_string(cases) + " cases, max |p - quadrature| = " + fmt(worst, 3)};
}

Outcome pagerank_oracle() {
  int networks = 0;
  double worst_l1 = 0.0, worst_sum = 0.0;
  std::mt19937_64 rng(2024);
  while (networks < 100) {
    const auto seed = rng();
    const int k = 1 + static_cast<int>(rng() % 3);
    auto corpus = fixtures::make_corpus(fixtures::random_token_corpus(seed, 4 + static_cast<int>(rng() % 20),
                                                                      3 + static_cast<int>(rng() % 15), 2, 9));
    const auto hon = build_hon(corpus, k);
    if (hon.node_count() == 0 || hon.node_count() > 50) continue;
    ++networks;
    const auto r = hon_pagerank(hon);
    std::vector<std::tuple<std::size_t, std::size_t, double>> w;
    for (const auto& e : hon.edges()) w.emplace_back(e.from, e.to, static_cast<double>(e.count));
    const auto expected = oracle::dense_pagerank(hon.node_count(), w, 0.85);
    double l1 = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) l1 += std::fabs(r.scores[i] - expected[i]);
    worst_l1 = std::max(worst_l1, l1);
    double total = 0.0;
    for (const auto& [node, s] : aggregate_pagerank(hon, r.scores)) total += s;
    worst_sum = std::max(worst_sum, std::fabs(total - 1.0));
  }
  return {worst_l1 <= kPageRankL1Tol && worst_sum <= kAggregateSumTol,
          std::to_string(networks) + " networks, max L1 = " + fmt(worst_l1, 3) + ", max |sum - 1| = " + fmt(worst_sum, 3)};
}

Outcome prediction_exactness() {
  Outcome o;
  auto det = fixtures::make_corpus({{{"a", "b", "c", "d", "e"}, 5}, {{"x", "y", "z"}, 2}});
  auto det_model = build_multi_order(det, 5);
  for (int k = 1; k <= 5; ++k) {
    const auto r = prediction_accuracy(det_model, det, k);
    o.pass = o.pass && r.accuracy == 1.0 && r.expected_accuracy == 1.0;
  }

  auto audit = fixtures::make_corpus({{{"a", "b", "c"}, 2}, {{"a", "b", "d"}, 1}});
  const auto a1 = prediction_accuracy(build_multi_order(audit, 1), audit, 1);
  // 7/9 is the mean probability of the observed continuation; the argmax hit
  // rate over the same six transitions is 5/6.
  o.pass = o.pass && a1.expected_accuracy == 7.0 / 9.0 && a1.accuracy == 5.0 / 6.0;

  auto disamb = fixtures::make_corpus({{{"x", "a", "c"}, 1}, {{"y", "a", "d"}, 1}});
  const auto dm = build_multi_order(disamb, 2);
  const auto d1 = prediction_accuracy(dm, disamb, 1);
  const auto d2 = prediction_accuracy(dm, disamb, 2);
  o.pass = o.pass && d1.accuracy == 0.75 && d2.accuracy == 1.0 && d1.expected_accuracy == 0.75 &&
           d2.expected_accuracy == 1.0;
  o.detail = "deterministic k=1..5: 1.0; audit corpus expected=" + fmt(a1.expected_accuracy) + " (7/9) argmax=" +
             fmt(a1.accuracy) + " (5/6); disambiguation k=1 " + fmt(d1.accuracy) + ", k=2 " + fmt(d2.accuracy);
  return o;
}

Outcome comparison_fixed_points() {
  Outcome o;
  double worst_cos = 0.0, worst_kl = 0.0;
  std::vector<PathCorpus> corpora;
  corpora.push_back(fixtures::make_corpus(fixtures::random_token_corpus(31, 15, 300, 3, 10)));
  corpora.push_back(generate_corpus(random_planted_chain(12, 2, 3, 0.85, 4), 2000, 5, 12, 5));
  corpora.push_back(shortest_route_corpus(fixtures::load_sioux_falls(), 1000, 3, 9));
  for (const auto& c : corpora) {
    const auto r = comparison_report(c, c, 5);
    for (const auto& m : r.cosine) {
      if (!m.cosine) {
        o.pass = false;
        continue;
      }
      worst_cos = std::max(worst_cos, std::fabs(*m.cosine - 1.0));
    }
    for (const auto& ord : r.orders) {
      if (!ord.kl) continue;  // both layers empty
      worst_kl = std::max(worst_kl, *ord.kl);
    }
  }
  std::vector<double> x(200), rev(200);
  std::iota(x.begin(), x.end(), 0.0);
  std::transform(x.begin(), x.end(), rev.begin(), [](double v) { return -3.0 * v; });
  NodeScores a, b;
  for (int i = 0; i < 200; ++i) {
    a["n" + std::to_string(i)] = x[static_cast<std::size_t>(i)];
    b["n" + std::to_string(i)] = rev[static_cast<std::size_t>(i)];
  }
  const double same = kendall_tau(a, a), opposite = kendall_tau(a, b);
  o.pass = o.pass && worst_cos <= kCosineTol && worst_kl <= kSelfKlTol && same == 1.0 && opposite == -1.0 &&
           kendall_tau_b(x, x) == 1.0 && kendall_tau_b(x, rev) == -1.0;
  o.detail = "max |cos - 1| = " + fmt(worst_cos, 3) + ", max self KL = " + fmt(worst_kl, 3) + ", tau = " + fmt(same) +
             " / " + fmt(opposite);
  return o;
}

Outcome fragmentation() {
  const auto corpus = shortest_route_corpus(fixtures::load_sioux_falls(), 2000, 3, 7);
  const double mean = path_stats(corpus).mean_transitions;
  const auto reports = multi_order_reports(corpus, 5);
  Outcome o;
  o.pass = std::fabs(mean - kRouteMeanTransitions) <= kRouteMeanTol;
  o.detail = "mean transitions " + fmt(mean, 4) + "; gcc by order:";
  for (const auto& r : reports) {
    o.detail += " " + fmt(r.gcc_ratio, 4);
    if (r.order <= 3) o.pass = o.pass && r.gcc_ratio == 1.0;
  }
  o.pass = o.pass && reports[4].gcc_ratio < kFragmentedGcc;
  return o;
}

Outcome figure_shaped_outputs() {
  // The published higher-order rows, cosine values, KL magnitudes and
  // tau/accuracy curves come from trajectory corpora that are not bundled;
  // what can be checked is that every figure-shaped quantity is produced.
  const auto sf = shortest_route_corpus(fixtures::load_sioux_falls(), 1500, 3, 11);
  const auto planted = generate_corpus(random_planted_chain(24, 3, 3, 0.9, 12), 3000, 5, 12, 13);
  const auto r = comparison_report(sf, planted, 5, {}, "routes", "planted");
  bool ok = r.a.reports.size() == 5 && r.b.reports.size() == 5 && r.cosine.size() == std::size(kFeatureMetrics) &&
            r.orders.size() == 5 && r.a.alignment.size() == 5 && r.a.accuracy.size() == 5;
  for (const auto& ord : r.orders) ok = ok && ord.kl.has_value();
  for (std::size_t k = 0; k + 1 < r.a.reports.size(); ++k) {
    ok = ok && r.a.reports[k + 1].node_count == r.a.reports[k].edge_count;
  }
  return {ok,
          "not reproducible without unbundled corpora: higher-order structure rows for Jinan, Shenzhen and extended "
          "Sioux Falls, cosine 0.99/0.86/0.89, KL magnitudes, tau 0.6449->0.2681 and accuracy curves; table, cosine, KL "
          "and curve outputs produced for 5 orders"};
}

}  // namespace

int main() {
  Suite suite;
  suite.run(1, "Sioux Falls order-1 row", 1.0, sioux_falls_row);
  suite.run(2, "layer-size identity", 30.0, layer_size_identity);
  suite.run(3, "planted-order recovery", 120.0, planted_order_recovery);
  suite.run(4, "likelihood nesting", 1.0, likelihood_nesting);
  suite.run(5, "chi-square p-value oracle", 5.0, chi_square_oracle);
  suite.run(6, "PageRank oracle equivalence", 10.0, pagerank_oracle);
  suite.run(7, "prediction exactness", 1.0, prediction_exactness);
  suite.run(8, "comparison fixed points", 10.0, comparison_fixed_points);
  suite.run(9, "route-corpus fragmentation", 60.0, fragmentation);
  suite.run(10, "figure outputs for unbundled data", 60.0, figure_shaped_outputs);
  std::printf("%d of 10 criteria failed\n", suite.failures());
  return suite.failures() == 0 ? 0 : 1;
}
