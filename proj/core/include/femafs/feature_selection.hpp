#pragma once

#include <span>
#include <vector>

#include "femafs/basis.hpp"
#include "femafs/dataset.hpp"
#include "femafs/matrix.hpp"

namespace femafs {

// Strictly increasing sample points over [0,1]; endpoints are always 0 and 1.
struct SamplingGrid {
  std::vector<double> points;
  std::size_t size() const { return points.size(); }
};

/// Uniform grid of p points, q_t = t / (p - 1). Requires p >= 2.
SamplingGrid build_grid(std::size_t p);

// Per-class probability curves of one feature sampled on the grid.
// curves is c x p; columns sum to 1 at every grid point.
struct FeatureManifold {
  std::size_t feature_index = 0;
  Matrix curves;
};

/// Evaluates the per-feature probability curves: entry (i,t) accumulates the
/// single-feature basis weights of grid point q_t over the class-i samples.
FeatureManifold feature_manifold(const LabeledDataset& train, std::size_t feature_index,
                                 const SamplingGrid& grid, SmoothnessParam k);

/// Mean over grid points of the pointwise minimum between the two curves of
/// each unordered class pair, averaged over pairs. Lower means the feature
/// separates the classes better; binary scores lie in [0, 0.5].
double overlap_score(const FeatureManifold& manifold);

struct RankedFeature {
  std::size_t index = 0;
  double score = 0.0;
  bool constant = false;
};

// Ascending by score (best feature first); constant features are flagged and
// forced to the back regardless of their nominal score.
struct FeatureRanking {
  std::vector<RankedFeature> entries;
};

/// Scores every feature on the grid and sorts ascending, ties broken toward
/// the lower feature index. Per-feature scores use a fixed summation order,
/// so the ranking is identical under any worker count.
FeatureRanking rank_features(const LabeledDataset& train, const SamplingGrid& grid,
                             SmoothnessParam k);

/// First ceil(n * percent / 100) entries of the ranking, in rank order.
/// Requires percent in (0, 100].
std::vector<std::size_t> select_top(const FeatureRanking& ranking, double percent);

/// Restricts the dataset to the given distinct feature columns, preserving
/// the subset order.
LabeledDataset project(const LabeledDataset& data, std::span<const std::size_t> subset);

}  // namespace femafs
