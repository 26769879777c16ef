#pragma once

#include <cstdint>
#include <vector>

#include "honkit/corpus.hpp"
#include "honkit/graph.hpp"
#include "honkit/hon.hpp"

namespace honkit {

/// Natural-log likelihood of every path instance. The first node is scored
/// by the start distribution, each transition by the layer of order
/// min(k, available history). Throws DomainError naming the first path with
/// zero probability.
double log_likelihood(const MultiOrderModel& model, const PathCorpus& corpus, int k);

/// log_likelihood for k = 1..max_k, element i holding order i + 1.
std::vector<double> log_likelihoods(const MultiOrderModel& model, const PathCorpus& corpus,
                                    int max_k);

/// Effective parameter count of the order-k model on `topology`:
/// (|V| − 1) + Σ_{i=1..k} (walks of length i − nonzero rows of A^i).
std::uint64_t degrees_of_freedom(const Graph& topology, int k);

struct LrtResult {
  int null_order = 0;
  int alt_order = 0;
  double lambda = 0.0;
  std::uint64_t delta_d = 0;
  double p_value = 1.0;
};

/// Likelihood-ratio test from precomputed ingredients. Λ within 1e-9 below
/// zero is clamped to zero; a more negative Λ is passed through so callers
/// can see the non-nesting. Throws ConsistencyError when d_alt < d_null.
LrtResult likelihood_ratio_test(int null_order, double loglik_null, double loglik_alt,
                                std::uint64_t dof_null, std::uint64_t dof_alt);

/// Order k against order k + 1 on `corpus`.
LrtResult lrt(const MultiOrderModel& model, const PathCorpus& corpus, int k);

struct OrderSelection {
  int optimal_order = 1;
  std::vector<LrtResult> trace;
  double epsilon = 0.05;
  /// Every test up to max_k − 1 was significant; the true order may be higher.
  bool truncated = false;
};

/// Greedy forward search: test k vs k + 1 for k = 1, 2, ... and stop at the
/// first p-value >= epsilon.
OrderSelection optimal_order(const MultiOrderModel& model, const PathCorpus& corpus,
                             double epsilon, int max_k);

}  // namespace honkit
