#include "honkit/selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "honkit/errors.hpp"
#include "honkit/special_functions.hpp"

namespace honkit {
namespace {

std::string describe(const PathCorpus& corpus, const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    if (i) out += ',';
    out += corpus.vocabulary().token(path.nodes[i]);
  }
  return out;
}

}  // namespace

std::vector<double> log_likelihoods(const MultiOrderModel& model, const PathCorpus& corpus,
                                    int max_k) {
  if (max_k < 1 || max_k > model.max_order()) throw ArgumentError("order outside model range");
  std::vector<double> totals(static_cast<std::size_t>(max_k), 0.0);
  std::vector<double> path_ll(totals.size());
  for (const auto& path : corpus.paths()) {
    auto nodes = translate(path, corpus.vocabulary(), model.vocabulary());
    const double start = nodes.front() == kUnknownNode ? 0.0 : model.start_probability(nodes.front());
    if (start <= 0.0) {
      throw DomainError("path '" + describe(corpus, path) + "' starts at an unobserved node");
    }
    std::fill(path_ll.begin(), path_ll.end(), std::log(start));
    std::span<const NodeIndex> view(nodes);
    for (std::size_t t = 1; t < nodes.size(); ++t) {
      auto history = view.first(t);
      // Orders above the available history all reuse the same layer.
      double cached = 0.0;
      for (int k = 1; k <= max_k; ++k) {
        if (static_cast<std::size_t>(k) <= t) {
          const double p = transition_prob(model, history, nodes[t], k);
          if (p <= 0.0) {
            throw DomainError("path '" + describe(corpus, path) + "' has zero probability at order " +
                              std::to_string(k));
          }
          cached = std::log(p);
        }
        path_ll[static_cast<std::size_t>(k) - 1] += cached;
      }
    }
    const auto m = static_cast<double>(path.multiplicity);
    for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += m * path_ll[i];
  }
  return totals;
}

double log_likelihood(const MultiOrderModel& model, const PathCorpus& corpus, int k) {
  if (k < 1 || k > model.max_order()) throw ArgumentError("order outside model range");
  return log_likelihoods(model, corpus, k).back();
}

std::uint64_t degrees_of_freedom(const Graph& topology, int k) {
  if (topology.node_count() == 0) throw ArgumentError("degrees of freedom need a non-empty topology");
  if (k < 0) throw ArgumentError("order must be >= 0");
  std::uint64_t d = topology.node_count() - 1;
  if (k == 0) return d;
  for (const auto& s : adj_power_stats_upto(topology, k)) {
    if (__builtin_add_overflow(d, s.path_count - s.nonzero_rows, &d)) {
      throw OverflowError("degrees of freedom exceed 64 bits at order " + std::to_string(k));
    }
  }
  return d;
}

LrtResult likelihood_ratio_test(int null_order, double loglik_null, double loglik_alt,
                                std::uint64_t dof_null, std::uint64_t dof_alt) {
  if (dof_alt < dof_null) {
    throw ConsistencyError("degrees of freedom decrease from order " + std::to_string(null_order) +
                           " to " + std::to_string(null_order + 1));
  }
  LrtResult r;
  r.null_order = null_order;
  r.alt_order = null_order + 1;
  r.lambda = -2.0 * (loglik_null - loglik_alt);
  if (r.lambda < 0.0 && r.lambda >= -1e-9) r.lambda = 0.0;
  r.delta_d = dof_alt - dof_null;
  r.p_value = chi_square_survival(r.lambda, static_cast<double>(r.delta_d));
  return r;
}

LrtResult lrt(const MultiOrderModel& model, const PathCorpus& corpus, int k) {
  if (k < 1 || k + 1 > model.max_order()) throw ArgumentError("lrt needs k + 1 <= model max order");
  auto ll = log_likelihoods(model, corpus, k + 1);
  const auto& topo = model.first_order_topology();
  return likelihood_ratio_test(k, ll[static_cast<std::size_t>(k) - 1], ll[static_cast<std::size_t>(k)],
                               degrees_of_freedom(topo, k), degrees_of_freedom(topo, k + 1));
}

OrderSelection optimal_order(const MultiOrderModel& model, const PathCorpus& corpus,
                             double epsilon, int max_k) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ArgumentError("epsilon must lie in (0, 1)");
  if (max_k < 1 || max_k > model.max_order()) throw ArgumentError("max order outside model range");

  OrderSelection sel;
  sel.epsilon = epsilon;
  sel.optimal_order = 1;
  if (max_k == 1) {
    sel.truncated = true;
    return sel;
  }
  const auto ll = log_likelihoods(model, corpus, max_k);
  const auto& topo = model.first_order_topology();
  std::vector<std::uint64_t> dof(static_cast<std::size_t>(max_k) + 1);
  for (int k = 0; k <= max_k; ++k) dof[static_cast<std::size_t>(k)] = degrees_of_freedom(topo, k);

  for (int k = 1; k < max_k; ++k) {
    const auto i = static_cast<std::size_t>(k);
    auto r = likelihood_ratio_test(k, ll[i - 1], ll[i], dof[i], dof[i + 1]);
    sel.trace.push_back(r);
    if (!(r.p_value < epsilon)) return sel;
    sel.optimal_order = k + 1;
  }
  sel.truncated = true;
  return sel;
}

}  // namespace honkit
