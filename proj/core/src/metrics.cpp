#include "femafs/metrics.hpp"

#include <stdexcept>

#include "femafs/error.hpp"

namespace femafs {

ConfusionMatrix confusion(std::span<const int> predicted, std::span<const int> truth,
                          int positive) {
  if (predicted.size() != truth.size()) {
    throw std::invalid_argument("confusion: length mismatch");
  }
  if (predicted.empty()) throw std::invalid_argument("confusion: empty input");
  if (positive < 1) throw std::invalid_argument("confusion: positive label must be >= 1");

  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] < 1 || truth[i] < 1) {
      throw Error("confusion: label outside the valid class range");
    }
    const bool pred_pos = predicted[i] == positive;
    const bool true_pos = truth[i] == positive;
    if (pred_pos && true_pos) ++cm.tp;
    else if (pred_pos && !true_pos) ++cm.fp;
    else if (!pred_pos && true_pos) ++cm.fn;
    else ++cm.tn;
  }
  return cm;
}

MetricsReport metrics(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw std::invalid_argument("metrics: empty confusion matrix");
  const auto tp = static_cast<double>(cm.tp);
  const auto fp = static_cast<double>(cm.fp);
  const auto fn = static_cast<double>(cm.fn);
  const auto tn = static_cast<double>(cm.tn);

  MetricsReport r;
  r.accuracy = (tp + tn) / static_cast<double>(cm.total());

  if (2.0 * tp + fp + fn > 0.0) {
    r.f1 = 2.0 * tp / (2.0 * tp + fp + fn);
  } else {
    r.f1_undefined = true;
  }
  if (tp + fn > 0.0) {
    r.tpr = tp / (tp + fn);
  } else {
    r.tpr_undefined = true;
  }
  if (fp + tn > 0.0) {
    r.fpr = fp / (fp + tn);
  } else {
    r.fpr_undefined = true;
  }
  return r;
}

}  // namespace femafs
