#include "honkit/prediction.hpp"

#include <algorithm>

#include "honkit/errors.hpp"

namespace honkit {

Prediction predict_next(const MultiOrderModel& model, std::span<const NodeIndex> history, int k) {
  if (history.empty()) throw ArgumentError("history must be non-empty");
  if (k < 1 || k > model.max_order()) throw ArgumentError("order outside model range");
  const auto& vocab = model.vocabulary();
  for (std::size_t c = std::min(static_cast<std::size_t>(k), history.size()); c >= 1; --c) {
    const auto& layer = model.layer(static_cast<int>(c));
    auto from = layer.find(history.last(c));
    if (!from) continue;
    auto edges = layer.out_edges(*from);
    if (edges.empty()) continue;
    const HonEdge* best = nullptr;
    for (const auto& e : edges) {
      if (!best || e.count > best->count ||
          (e.count == best->count && vocab.token(layer.last_node(e.to)) < vocab.token(layer.last_node(best->to)))) {
        best = &e;
      }
    }
    return {layer.last_node(best->to), static_cast<int>(c)};
  }
  return {};
}

std::optional<std::string> predict_next(const MultiOrderModel& model, const std::vector<std::string>& history,
                                        int k) {
  std::vector<NodeIndex> ids;
  ids.reserve(history.size());
  for (const auto& t : history) ids.push_back(model.vocabulary().find(t).value_or(kUnknownNode));
  auto p = predict_next(model, ids, k);
  if (!p.node) return std::nullopt;
  return model.vocabulary().token(*p.node);
}

std::vector<PredictionOutcome> predict_path(const MultiOrderModel& model, std::span<const NodeIndex> path,
                                            int k) {
  std::vector<PredictionOutcome> out;
  for (std::size_t t = 1; t < path.size(); ++t) {
    auto p = predict_next(model, path.first(t), k);
    PredictionOutcome o;
    o.history.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(t));
    o.predicted = p.node;
    o.actual = path[t];
    o.used_order = p.used_order;
    o.correct = p.node && *p.node == path[t] && path[t] != kUnknownNode;
    out.push_back(std::move(o));
  }
  return out;
}

AccuracyResult prediction_accuracy(const MultiOrderModel& model, const PathCorpus& eval_corpus, int k) {
  if (k < 1 || k > model.max_order()) throw ArgumentError("order outside model range");
  if (eval_corpus.transition_count() == 0) throw ArgumentError("evaluation corpus has no transitions");
  AccuracyResult r;
  r.order = k;
  long double probability_mass = 0.0L;
  for (const auto& path : eval_corpus.paths()) {
    const auto nodes = translate(path, eval_corpus.vocabulary(), model.vocabulary());
    std::span<const NodeIndex> view(nodes);
    for (std::size_t t = 1; t < nodes.size(); ++t) {
      auto p = predict_next(model, view.first(t), k);
      r.evaluated_transitions += path.multiplicity;
      if (!p.node) {
        r.none_predictions += path.multiplicity;
        continue;
      }
      if (*p.node == nodes[t]) r.correct += path.multiplicity;
      const auto context = view.subspan(t - static_cast<std::size_t>(p.used_order), static_cast<std::size_t>(p.used_order));
      probability_mass += static_cast<long double>(path.multiplicity) *
                          transition_prob(model, context, nodes[t], p.used_order);
    }
  }
  const auto n = static_cast<long double>(r.evaluated_transitions);
  r.accuracy = static_cast<double>(r.correct) / static_cast<double>(r.evaluated_transitions);
  r.expected_accuracy = static_cast<double>(probability_mass / n);
  return r;
}

}  // namespace honkit
