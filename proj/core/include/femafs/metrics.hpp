#pragma once

#include <cstdint>
#include <span>

namespace femafs {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
};

// Derived rates in [0,1]. A rate whose denominator is zero is reported as 0
// with its flag set.
struct MetricsReport {
  double accuracy = 0.0;
  double f1 = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
  bool f1_undefined = false;
  bool tpr_undefined = false;
  bool fpr_undefined = false;
};

/// Binary confusion counts against the declared positive class; every other
/// class counts as negative.
ConfusionMatrix confusion(std::span<const int> predicted, std::span<const int> truth,
                          int positive);

MetricsReport metrics(const ConfusionMatrix& cm);

}  // namespace femafs
