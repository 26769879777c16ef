#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "honkit/corpus.hpp"
#include "honkit/hon.hpp"

namespace honkit {

struct Prediction {
  std::optional<NodeIndex> node;  // none when even the last node is an unseen context
  int used_order = 0;             // 0 when node is empty
};

/// Argmax continuation of the longest observed context of length
/// ≤ min(k, |history|). Ties go to the lexicographically smallest token.
Prediction predict_next(const MultiOrderModel& model, std::span<const NodeIndex> history, int k);

/// Token-level convenience; returns the predicted token, if any.
std::optional<std::string> predict_next(const MultiOrderModel& model,
                                        const std::vector<std::string>& history, int k);

struct PredictionOutcome {
  std::vector<NodeIndex> history;
  std::optional<NodeIndex> predicted;
  NodeIndex actual;
  int used_order = 0;
  bool correct = false;
};

struct AccuracyResult {
  int order = 0;
  double accuracy = 0.0;
  // Mean probability the model gives the observed next node, using the same
  // context as the prediction (0 where no prediction exists).
  double expected_accuracy = 0.0;
  std::uint64_t evaluated_transitions = 0;  // multiplicity-weighted
  std::uint64_t correct = 0;
  std::uint64_t none_predictions = 0;

  double none_rate() const noexcept {
    return evaluated_transitions ? static_cast<double>(none_predictions) / static_cast<double>(evaluated_transitions)
                                 : 0.0;
  }
};

/// Predicts every transition of every path in `eval_corpus` from its full
/// prefix. Unpredictable steps count as wrong. Throws ArgumentError when the
/// corpus holds no transitions.
AccuracyResult prediction_accuracy(const MultiOrderModel& model, const PathCorpus& eval_corpus, int k);

/// One outcome per transition position of `path` (multiplicity ignored).
std::vector<PredictionOutcome> predict_path(const MultiOrderModel& model, std::span<const NodeIndex> path,
                                            int k);

}  // namespace honkit
