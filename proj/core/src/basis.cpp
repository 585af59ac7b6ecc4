#include "femafs/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "femafs/error.hpp"

namespace femafs {
namespace {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace

SmoothnessParam::SmoothnessParam(double k) : value(k) {
  if (!(k >= 1.0)) throw std::invalid_argument("SmoothnessParam: k must be >= 1");
}

std::optional<double> inverse_distance_weight(std::span<const double> a,
                                              std::span<const double> b,
                                              SmoothnessParam k) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inverse_distance_weight: shape mismatch");
  }
  const double d = euclidean(a, b);
  if (d < kCoincidenceDistance) return std::nullopt;
  return 1.0 / std::pow(d, k.value);
}

std::optional<double> inverse_distance_weight(double a, double b, SmoothnessParam k) {
  const double d = std::abs(a - b);
  if (d < kCoincidenceDistance) return std::nullopt;
  return 1.0 / std::pow(d, k.value);
}

BasisWeights shepard_from_distances(std::span<const double> distances, SmoothnessParam k) {
  const std::size_t m = distances.size();
  if (m == 0) throw Error("shepard basis: empty training set");

  BasisWeights weights(m, 0.0);

  std::size_t tied = 0;
  for (double d : distances) {
    if (d < kCoincidenceDistance) ++tied;
  }
  if (tied > 0) {
    const double share = 1.0 / static_cast<double>(tied);
    for (std::size_t i = 0; i < m; ++i) {
      if (distances[i] < kCoincidenceDistance) weights[i] = share;
    }
    return weights;
  }

  // Work with (d_min / d_i)^k instead of 1/d_i^k: the ratio lies in (0,1],
  // so the normalizing sum cannot overflow for small distances or large k.
  double d_min = distances[0];
  for (double d : distances) d_min = std::min(d_min, d);

  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    weights[i] = std::pow(d_min / distances[i], k.value);
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return weights;
}

BasisWeights shepard_basis(std::span<const double> query, const LabeledDataset& train,
                           SmoothnessParam k) {
  if (train.sample_count() == 0) throw Error("shepard_basis: empty training set");
  if (query.size() != train.feature_count()) {
    throw std::invalid_argument("shepard_basis: query dimension mismatch");
  }
  std::vector<double> d(train.sample_count());
  for (std::size_t i = 0; i < train.sample_count(); ++i) {
    d[i] = euclidean(query, train.features.row(i));
  }
  return shepard_from_distances(d, k);
}

BasisWeights shepard_basis_feature(double q, const LabeledDataset& train,
                                   std::size_t feature_index, SmoothnessParam k) {
  if (train.sample_count() == 0) throw Error("shepard_basis_feature: empty training set");
  if (feature_index >= train.feature_count()) {
    throw std::invalid_argument("shepard_basis_feature: feature index out of range");
  }
  std::vector<double> d(train.sample_count());
  for (std::size_t i = 0; i < train.sample_count(); ++i) {
    d[i] = std::abs(q - train.features(i, feature_index));
  }
  return shepard_from_distances(d, k);
}

}  // namespace femafs
