#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"

using namespace honkit;

namespace {

HigherOrderNetwork network(const std::string& edge_list) {
  std::istringstream in(edge_list);
  return HigherOrderNetwork::from_graph(read_edge_list(in));
}

std::vector<std::pair<std::size_t, std::size_t>> arcs(const HigherOrderNetwork& hon) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : hon.edges()) out.emplace_back(e.from, e.to);
  return out;
}

}  // namespace

TEST(StructuralReport, SiouxFallsFirstOrder) {
  auto r = structural_report(HigherOrderNetwork::from_graph(fixtures::load_sioux_falls()));
  EXPECT_EQ(r.order, 1);
  EXPECT_EQ(r.node_count, 24u);
  EXPECT_EQ(r.edge_count, 76u);
  EXPECT_NEAR(r.density, 76.0 / (24.0 * 23.0), 1e-15);
  EXPECT_NEAR(r.density, 0.13768, 1e-4);
  EXPECT_NEAR(r.mean_out_degree, 3.17, 0.01);
  EXPECT_NEAR(r.mean_in_degree, 3.17, 0.01);
  EXPECT_EQ(r.diameter, 6u);
  EXPECT_NEAR(r.avg_shortest_path, 3.01, 0.05);
  // Frozen from an independent all-pairs computation of the same topology.
  EXPECT_NEAR(r.avg_shortest_path, 1662.0 / 552.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.gcc_ratio, 1.0);
  EXPECT_FALSE(r.estimated);
}

TEST(StructuralReport, TwoCycle) {
  auto r = structural_report(network("a,b\nb,a\n"));
  EXPECT_DOUBLE_EQ(r.density, 1.0);
  EXPECT_EQ(r.diameter, 1u);
  EXPECT_DOUBLE_EQ(r.avg_shortest_path, 1.0);
  EXPECT_DOUBLE_EQ(r.gcc_ratio, 1.0);
}

TEST(StructuralReport, ChainUsesReachablePairs) {
  auto r = structural_report(network("a,b\nb,c\n"));
  EXPECT_DOUBLE_EQ(r.density, 1.0 / 3.0);
  EXPECT_EQ(r.diameter, 2u);
  EXPECT_NEAR(r.avg_shortest_path, 4.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(r.gcc_ratio, 1.0);
}

TEST(StructuralReport, EmptyLayerIsZero) {
  auto hon = build_hon(fixtures::make_corpus({{{"a", "b"}, 1}}), 3);
  auto r = structural_report(hon);
  EXPECT_EQ(r.order, 3);
  EXPECT_EQ(r.node_count, 0u);
  EXPECT_EQ(r.edge_count, 0u);
  EXPECT_EQ(r.diameter, 0u);
  EXPECT_EQ(r.gcc_ratio, 0.0);
}

TEST(StructuralReport, SinglePathLayers) {
  auto reports = multi_order_reports(fixtures::make_corpus({{{"a", "b", "c", "d"}, 1}}), 3);
  ASSERT_EQ(reports.size(), 3u);
  const std::uint64_t nodes[] = {4, 3, 2}, edges[] = {3, 2, 1};
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(reports[k].order, k + 1);
    EXPECT_EQ(reports[k].node_count, nodes[k]);
    EXPECT_EQ(reports[k].edge_count, edges[k]);
  }
}

TEST(StructuralReport, MatchesAllPairsOracle) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto corpus = fixtures::make_corpus(fixtures::random_token_corpus(seed, 12, 15, 2, 7));
    for (int k = 1; k <= 3; ++k) {
      auto hon = build_hon(corpus, k);
      if (hon.node_count() == 0 || hon.node_count() > 80) continue;
      auto r = structural_report(hon);
      auto o = oracle::structure(hon.node_count(), arcs(hon));
      EXPECT_EQ(r.diameter, o.diameter) << "seed " << seed << " k " << k;
      EXPECT_NEAR(r.avg_shortest_path, o.avg_shortest_path, 1e-12) << "seed " << seed << " k " << k;
      EXPECT_DOUBLE_EQ(r.gcc_ratio, o.gcc_ratio) << "seed " << seed << " k " << k;
    }
  }
}

TEST(StructuralReport, NextLayerNodesEqualEdges) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto reports = multi_order_reports(fixtures::make_corpus(fixtures::random_token_corpus(seed, 9, 40, 2, 10)), 5);
    for (std::size_t k = 0; k + 1 < reports.size(); ++k) EXPECT_EQ(reports[k + 1].node_count, reports[k].edge_count);
  }
}

TEST(StructuralReport, LargeLayersAreSampled) {
  auto corpus = fixtures::make_corpus(fixtures::random_token_corpus(2, 40, 200, 5, 12));
  auto hon = build_hon(corpus, 2);
  ASSERT_GT(hon.node_count(), 30u);
  ReportOptions exact;
  ReportOptions sampled;
  sampled.exact_threshold = 10;
  sampled.sample_sources = 10;
  auto e = structural_report(hon, exact);
  auto s = structural_report(hon, sampled);
  EXPECT_FALSE(e.estimated);
  EXPECT_TRUE(s.estimated);
  EXPECT_EQ(s.node_count, e.node_count);
  EXPECT_DOUBLE_EQ(s.gcc_ratio, e.gcc_ratio);
  EXPECT_LE(s.diameter, e.diameter);
  auto again = structural_report(hon, sampled);
  EXPECT_EQ(again.avg_shortest_path, s.avg_shortest_path);
}

TEST(DegreeDistribution, HandComputedCases) {
  using Pmf = std::map<std::uint64_t, double>;
  EXPECT_EQ(degree_distribution(network("a,b\nb,a\n"), DegreeDirection::out).pmf, (Pmf{{1, 1.0}}));
  EXPECT_EQ(degree_distribution(network("c,x\nc,y\nc,z\n"), DegreeDirection::out).pmf, (Pmf{{0, 0.75}, {3, 0.25}}));
  auto total = degree_distribution(network("a,b\nb,c\n"), DegreeDirection::total).pmf;
  ASSERT_EQ(total.size(), 2u);
  EXPECT_DOUBLE_EQ(total.at(1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(total.at(2), 1.0 / 3.0);
}

TEST(DegreeDistribution, MatchesCensus) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto hon = build_hon(fixtures::make_corpus(fixtures::random_token_corpus(seed, 15, 30, 2, 8)), 2);
    for (auto dir : {DegreeDirection::in, DegreeDirection::out, DegreeDirection::total}) {
      std::map<std::size_t, std::uint64_t> in, out;
      for (const auto& e : hon.edges()) {
        ++out[e.from];
        ++in[e.to];
      }
      std::map<std::uint64_t, double> pmf;
      const double n = static_cast<double>(hon.node_count());
      for (std::size_t v = 0; v < hon.node_count(); ++v) {
        std::uint64_t d = 0;
        if (dir != DegreeDirection::in) d += out[v];
        if (dir != DegreeDirection::out) d += in[v];
        pmf[d] += 1.0 / n;
      }
      auto dist = degree_distribution(hon, dir);
      ASSERT_EQ(dist.pmf.size(), pmf.size());
      double sum = 0.0;
      for (const auto& [d, p] : dist.pmf) {
        EXPECT_NEAR(p, pmf.at(d), 1e-12);
        sum += p;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(DegreeDistribution, DirectionNames) {
  EXPECT_EQ(parse_degree_direction("total"), DegreeDirection::total);
  EXPECT_EQ(to_string(DegreeDirection::in), "in");
  EXPECT_THROW(parse_degree_direction("both"), ArgumentError);
}
