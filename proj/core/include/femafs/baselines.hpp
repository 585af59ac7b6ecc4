#pragma once

#include <span>
#include <vector>

#include "femafs/dataset.hpp"

namespace femafs {

enum class ScoreDirection { HigherIsBetter, LowerIsBetter };

// Per-feature filter scores. `degenerate` marks features whose statistic hit
// a division-by-zero case and carries a sentinel instead.
struct ScoreVector {
  std::vector<double> scores;
  ScoreDirection direction = ScoreDirection::HigherIsBetter;
  std::vector<bool> degenerate;
};

// Sentinel for an infinite F statistic (zero within-group variance with
// separated group means). Finite so rankings stay well ordered.
inline constexpr double kAnovaSentinel = 1e300;

/// Chi-squared filter statistic on non-negative feature values: the observed
/// table sums each feature over the samples of each class, the expected table
/// distributes the column total by class priors.
ScoreVector chi2_scores(const LabeledDataset& train);

/// One-way ANOVA F statistic per feature (between-group over within-group
/// mean square, df c-1 and m-c).
ScoreVector anova_f_scores(const LabeledDataset& train);

/// Majority label among the `neighbors` nearest training samples (Euclidean).
/// Distance ties keep the lower sample index; vote ties keep the lower class.
int knn_predict(const LabeledDataset& train, std::span<const double> query,
                std::size_t neighbors);

}  // namespace femafs
