#pragma once

#include <span>
#include <vector>

#include "femafs/basis.hpp"
#include "femafs/dataset.hpp"

namespace femafs {

// Per-class membership probabilities for one query; entries sum to 1.
using ClassProbabilities = std::vector<double>;

// Lazy interpolation classifier. Training stores the (normalized) sample
// matrix and a one-hot class-assignment matrix; all work happens at query
// time by accumulating basis weights per class.
class FemaModel {
 public:
  FemaModel(LabeledDataset train, SmoothnessParam k);

  ClassProbabilities class_probabilities(std::span<const double> query) const;

  /// Argmax class; ties resolve to the lowest class index.
  int predict(std::span<const double> query) const;

  /// Probability mass of the predicted class relative to the total mass.
  double certainty(std::span<const double> query) const;

  const LabeledDataset& train() const { return train_; }
  const Matrix& rho() const { return rho_; }
  SmoothnessParam smoothness() const { return k_; }

 private:
  LabeledDataset train_;
  Matrix rho_;  // m x c, one-hot rows
  SmoothnessParam k_;
};

/// Validates that the training data is normalized to [0,1] and every class is
/// populated, then builds the model.
FemaModel fema_train(LabeledDataset train, SmoothnessParam k);

}  // namespace femafs
