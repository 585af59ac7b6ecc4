#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "femafs/matrix.hpp"

namespace femafs {

// Numeric feature matrix with 1-based integer class labels.
// Invariants: features.rows() == labels.size(), every label lies in
// {1..class_count} and every class id occurs at least once, all values finite.
struct LabeledDataset {
  Matrix features;
  std::vector<int> labels;
  std::vector<std::string> feature_names;
  std::vector<std::string> label_names;  // class id i+1 <-> label_names[i]; may be empty
  int class_count = 0;

  std::size_t sample_count() const { return labels.size(); }
  std::size_t feature_count() const { return features.cols(); }
};

// Per-feature training extrema backing min-max normalization.
struct NormalizationStats {
  std::vector<double> min;
  std::vector<double> max;

  std::size_t feature_count() const { return min.size(); }
  bool is_constant(std::size_t j) const { return min[j] == max[j]; }
};

/// Loads a comma-separated file with a header row. The label column is mapped
/// to class ids 1..c by sorted order of its distinct strings; each listed
/// categorical column is encoded ordinally (sorted distinct values -> 0,1,...);
/// every other column must parse as a finite real with '.' decimal separator.
LabeledDataset load_csv(const std::filesystem::path& path,
                        const std::string& label_column,
                        const std::vector<std::string>& categorical_columns = {});

/// Per-feature min/max over the training samples.
NormalizationStats fit_normalizer(const LabeledDataset& train);

/// Maps each value through (x - min) / (max - min), clamped to [0,1].
/// Constant features (max == min) map to 0.
LabeledDataset apply_normalizer(const NormalizationStats& stats, const LabeledDataset& data);

/// Deterministic stratified split; per-class test counts are
/// round(class_size * test_fraction) clamped so both partitions keep at least
/// one sample of every class. Requires every class to have >= 2 samples.
std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& data,
                                                           double test_fraction,
                                                           std::uint64_t seed);

}  // namespace femafs
