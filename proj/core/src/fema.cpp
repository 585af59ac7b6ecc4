#include "femafs/fema.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "femafs/error.hpp"

namespace femafs {

FemaModel::FemaModel(LabeledDataset train, SmoothnessParam k)
    : train_(std::move(train)), k_(k) {
  const std::size_t m = train_.sample_count();
  const auto c = static_cast<std::size_t>(train_.class_count);
  rho_ = Matrix(m, c);
  for (std::size_t j = 0; j < m; ++j) {
    rho_(j, static_cast<std::size_t>(train_.labels[j] - 1)) = 1.0;
  }
}

FemaModel fema_train(LabeledDataset train, SmoothnessParam k) {
  if (train.sample_count() == 0) throw Error("fema_train: empty training set");
  for (std::size_t r = 0; r < train.sample_count(); ++r) {
    for (std::size_t j = 0; j < train.feature_count(); ++j) {
      const double v = train.features(r, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error("fema_train: training data is not normalized to [0,1]");
      }
    }
  }
  std::vector<std::size_t> per_class(static_cast<std::size_t>(train.class_count), 0);
  for (int y : train.labels) {
    if (y < 1 || y > train.class_count) throw Error("fema_train: label out of range");
    ++per_class[static_cast<std::size_t>(y - 1)];
  }
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    if (per_class[c] == 0) {
      throw Error("fema_train: class " + std::to_string(c + 1) + " has no samples");
    }
  }
  return FemaModel(std::move(train), k);
}

ClassProbabilities FemaModel::class_probabilities(std::span<const double> query) const {
  if (query.size() != train_.feature_count()) {
    throw std::invalid_argument("FemaModel: query dimension mismatch");
  }
  const BasisWeights phi = shepard_basis(query, train_, k_);
  ClassProbabilities probs(static_cast<std::size_t>(train_.class_count), 0.0);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) acc += rho_(j, i) * phi[j];
    probs[i] = acc;
  }
  return probs;
}

int FemaModel::predict(std::span<const double> query) const {
  const ClassProbabilities probs = class_probabilities(query);
  const auto best = std::max_element(probs.begin(), probs.end());
  return static_cast<int>(best - probs.begin()) + 1;
}

double FemaModel::certainty(std::span<const double> query) const {
  const ClassProbabilities probs = class_probabilities(query);
  const auto best = std::max_element(probs.begin(), probs.end());
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  return *best / total;
}

}  // namespace femafs
