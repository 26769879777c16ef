#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"

using namespace honkit;

namespace {

std::vector<std::string> state_tokens(const HigherOrderNetwork& hon, HonIndex v) {
  std::vector<std::string> out;
  for (auto n : hon.state(v)) out.push_back(hon.vocabulary().token(n));
  return out;
}

}  // namespace

TEST(Hon, SecondOrderOfSinglePath) {
  auto hon = build_hon(fixtures::make_corpus({{{"a", "b", "c"}, 1}}), 2);
  ASSERT_EQ(hon.node_count(), 2u);
  ASSERT_EQ(hon.edge_count(), 1u);
  const auto& e = hon.edges()[0];
  EXPECT_EQ(state_tokens(hon, e.from), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(state_tokens(hon, e.to), (std::vector<std::string>{"b", "c"}));
  EXPECT_DOUBLE_EQ(e.probability, 1.0);
  EXPECT_EQ(hon.label(e.from), "a|b");
}

TEST(Hon, FirstOrderProbabilities) {
  auto c = fixtures::make_corpus({{{"a", "b", "c"}, 2}, {{"a", "b", "d"}, 1}});
  auto hon = build_hon(c, 1);
  const auto b = *hon.find(std::vector<NodeIndex>{*c.vocabulary().find("b")});
  EXPECT_EQ(hon.out_total(b), 3u);
  std::map<std::string, double> probs;
  for (const auto& e : hon.out_edges(b)) probs[hon.label(e.to)] = e.probability;
  EXPECT_DOUBLE_EQ(probs.at("c"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(probs.at("d"), 1.0 / 3.0);
}

TEST(Hon, ShortPathsContributeNoWindow) {
  auto hon = build_hon(fixtures::make_corpus({{{"a", "b"}, 1}}), 3);
  EXPECT_EQ(hon.node_count(), 0u);
  EXPECT_EQ(hon.edge_count(), 0u);
  EXPECT_THROW(build_hon(fixtures::make_corpus({{{"a", "b"}, 1}}), 0), ArgumentError);
}

TEST(Hon, MatchesWindowCountingOracle) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto tokens = fixtures::random_token_corpus(seed, 8, 30, 1, 9);
    auto corpus = fixtures::make_corpus(tokens);
    for (int k = 1; k <= 4; ++k) {
      auto hon = build_hon(corpus, k);
      auto nodes = oracle::windows(tokens, static_cast<std::size_t>(k));
      auto layer = oracle::count_layer(tokens, static_cast<std::size_t>(k));
      ASSERT_EQ(hon.node_count(), nodes.size());
      ASSERT_EQ(hon.edge_count(), oracle::edge_total(layer));
      for (const auto& e : hon.edges()) {
        auto from = state_tokens(hon, e.from);
        auto to = state_tokens(hon, e.to);
        EXPECT_EQ(e.count, layer.at(from).at(to.back()));
        std::uint64_t total = 0;
        for (const auto& [next, n] : layer.at(from)) total += n;
        EXPECT_DOUBLE_EQ(e.probability, static_cast<double>(e.count) / static_cast<double>(total));
      }
    }
  }
}

TEST(Hon, LayerSizeIdentity) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto corpus = fixtures::make_corpus(fixtures::random_token_corpus(seed, 10, 50, 2, 12));
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(build_hon(corpus, k + 1).node_count(), build_hon(corpus, k).edge_count())
          << "seed " << seed << " k " << k;
    }
  }
}

TEST(Hon, RowsAreStochasticAndOverlapping) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto corpus = fixtures::make_corpus(fixtures::random_token_corpus(seed, 10, 50, 2, 12));
    for (int k = 1; k <= 4; ++k) {
      auto hon = build_hon(corpus, k);
      EXPECT_EQ(hon.overlap_violations(), 0u);
      for (HonIndex v = 0; v < hon.node_count(); ++v) {
        auto out = hon.out_edges(v);
        if (out.empty()) continue;
        double sum = 0.0;
        for (const auto& e : out) sum += e.probability;
        EXPECT_NEAR(sum, 1.0, 1e-12);
      }
    }
  }
}

TEST(Hon, CsvIsSortedAndStable) {
  auto c = fixtures::make_corpus({{{"b", "a", "c"}, 2}, {{"a", "b"}, 1}});
  std::ostringstream out;
  write_hon_csv(build_hon(c, 1), out);
  EXPECT_EQ(out.str(),
            "from,to,count,probability\n"
            "a,b,1,0.33333333333333331\n"
            "a,c,2,0.66666666666666663\n"
            "b,a,2,1\n");
}

TEST(Hon, StartDistribution) {
  using Dist = std::map<std::string, double>;
  auto m1 = build_multi_order(fixtures::make_corpus({{{"a", "b", "c"}, 1}}), 2);
  EXPECT_EQ(m1.max_order(), 2);
  EXPECT_EQ(m1.start_distribution(), (Dist{{"a", 1.0}}));
  EXPECT_EQ(m1.layer(2).order(), 2);
  EXPECT_THROW(m1.layer(3), ArgumentError);

  auto m2 = build_multi_order(fixtures::make_corpus({{{"a", "b"}, 1}, {{"c", "d"}, 1}}), 1);
  EXPECT_EQ(m2.start_distribution(), (Dist{{"a", 0.5}, {"c", 0.5}}));

  auto m3 = build_multi_order(fixtures::make_corpus({{{"a", "b", "c"}, 3}, {{"b", "c", "d"}, 1}}), 2);
  EXPECT_EQ(m3.start_distribution(), (Dist{{"a", 0.75}, {"b", 0.25}}));
}

TEST(Hon, TransitionProbability) {
  auto m = build_multi_order(fixtures::make_corpus({{{"a", "b", "c"}, 1}}), 2);
  EXPECT_DOUBLE_EQ(transition_prob(m, {"a", "b"}, "c", 2), 1.0);

  auto n = build_multi_order(fixtures::make_corpus({{{"a", "b", "c"}, 2}, {{"a", "b", "d"}, 1}}), 2);
  EXPECT_DOUBLE_EQ(transition_prob(n, {"b"}, "d", 1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(transition_prob(n, {"z"}, "c", 1), 0.0);
  EXPECT_DOUBLE_EQ(transition_prob(n, {"b"}, "z", 1), 0.0);
  // A history shorter than k falls back to its own length.
  EXPECT_DOUBLE_EQ(transition_prob(n, {"b"}, "c", 2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(transition_prob(n, {"a", "b"}, "c", 2), 2.0 / 3.0);
}

TEST(Hon, TranslateMapsUnknownTokens) {
  auto a = fixtures::make_corpus({{{"x", "y"}, 1}});
  auto b = fixtures::make_corpus({{{"y", "z"}, 1}});
  auto ids = translate(a.paths()[0], a.vocabulary(), b.vocabulary());
  ASSERT_EQ(ids.size(), 2u);
  EXPECT_EQ(ids[0], kUnknownNode);
  EXPECT_EQ(ids[1], *b.vocabulary().find("y"));
}
