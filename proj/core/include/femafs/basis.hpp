#pragma once

#include <optional>
#include <span>
#include <vector>

#include "femafs/dataset.hpp"

namespace femafs {

// Exponent on the inverse distance; larger values concentrate weight on near
// neighbors.
struct SmoothnessParam {
  explicit SmoothnessParam(double k);
  double value;
};

// Normalized inverse-distance weights aligned with the training samples.
// Non-negative, summing to 1 (partition of unity).
using BasisWeights = std::vector<double>;

// Distances below this are treated as coincident; the reciprocal would
// overflow and the interpolation limit takes over.
inline constexpr double kCoincidenceDistance = 1e-12;

/// Raw weight 1 / d(a,b)^k. Returns nullopt when the points coincide
/// (the weight diverges and the basis resolves it as an exact hit).
std::optional<double> inverse_distance_weight(std::span<const double> a,
                                              std::span<const double> b,
                                              SmoothnessParam k);
std::optional<double> inverse_distance_weight(double a, double b, SmoothnessParam k);

/// Normalized weights of the query against every training sample (Euclidean
/// distance over the full feature vector). If the query coincides with one or
/// more training points, the unit mass is split equally among them.
BasisWeights shepard_basis(std::span<const double> query, const LabeledDataset& train,
                           SmoothnessParam k);

/// Same contract restricted to a single feature column, with scalar distances
/// |q - x_l[j]|.
BasisWeights shepard_basis_feature(double q, const LabeledDataset& train,
                                   std::size_t feature_index, SmoothnessParam k);

/// Shared kernel: normalized weights from precomputed distances.
BasisWeights shepard_from_distances(std::span<const double> distances, SmoothnessParam k);

}  // namespace femafs
