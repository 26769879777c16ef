#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "honkit/honkit.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(HONKIT_DATA_DIR) + "/" + name; }

inline honkit::PathCorpus make_corpus(const oracle::TokenCorpus& paths) {
  return honkit::PathCorpus::from_tokens(paths);
}

inline oracle::TokenCorpus to_tokens(const honkit::PathCorpus& corpus) {
  oracle::TokenCorpus out;
  for (const auto& p : corpus.paths()) out.emplace_back(corpus.tokens(p), p.multiplicity);
  return out;
}

// Random walks on a random sparse digraph over `vocab` tokens n0..n{vocab-1}.
inline oracle::TokenCorpus random_token_corpus(std::uint64_t seed, int vocab, int n_paths, int min_len, int max_len) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> node(0, vocab - 1);
  std::uniform_int_distribution<int> out_degree(1, 3);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(vocab));
  for (auto& s : succ) {
    const int d = out_degree(rng);
    for (int i = 0; i < d; ++i) s.push_back(node(rng));
  }
  std::uniform_int_distribution<int> length(min_len, max_len);
  std::uniform_int_distribution<int> mult(1, 3);
  oracle::TokenCorpus out;
  for (int p = 0; p < n_paths; ++p) {
    oracle::Tokens path;
    int v = node(rng);
    const int len = length(rng);
    for (int i = 0; i < len; ++i) {
      path.push_back("n" + std::to_string(v));
      const auto& s = succ[static_cast<std::size_t>(v)];
      v = s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
    }
    out.emplace_back(std::move(path), static_cast<std::uint64_t>(mult(rng)));
  }
  return out;
}

inline honkit::Graph load_sioux_falls() {
  std::ifstream in(data_path("sioux_falls_classical.csv"));
  return honkit::read_edge_list(in);
}

}  // namespace fixtures
