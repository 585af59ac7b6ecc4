#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "femafs/dataset.hpp"
#include "femafs/metrics.hpp"
#include "femafs/wilcoxon.hpp"

namespace femafs {

enum class Selector { FemaFS, Chi2, Anova, None, Random };
enum class ClassifierKind { Knn, Fema };

std::string to_string(Selector s);
std::string to_string(ClassifierKind c);
std::string to_string(Comparison c);
Selector selector_from_string(const std::string& name);
ClassifierKind classifier_from_string(const std::string& name);
Comparison comparison_from_string(const std::string& name);

/// Retention scenarios 10..60% in steps of 5.
std::vector<double> default_percents();

struct ExperimentConfig {
  std::string dataset_path;
  std::string label_column;
  std::vector<std::string> categorical_columns;
  double smoothness = 2.0;      // basis exponent k
  std::size_t grid_size = 101;  // sampling grid size p
  std::vector<double> percents = default_percents();
  std::size_t trials = 25;
  std::uint64_t seed = 1;
  std::vector<Selector> selectors;
  ClassifierKind classifier = ClassifierKind::Knn;
  std::size_t knn_neighbors = 1;
  double alpha = 0.05;
  double test_fraction = 0.3;
  int positive_label = 1;
  std::string output_dir;
};

// Per-trial scores of one method under one retention scenario, with their
// aggregates. Scores are fractions in [0,1].
struct TrialSeries {
  std::vector<double> f1;
  std::vector<double> accuracy;
  double f1_mean = 0.0;
  double f1_std = 0.0;
  double accuracy_mean = 0.0;
  double accuracy_std = 0.0;
};

struct ComparisonCell {
  double statistic = 0.0;
  double p_value = 1.0;
  Comparison decision = Comparison::Similar;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<std::string> methods;  // selector names, config order
  std::vector<double> percents;
  std::vector<std::vector<TrialSeries>> cells;          // [method][scenario]
  std::size_t reference = 0;                            // method index compared against
  std::vector<std::vector<ComparisonCell>> comparisons;  // [method][scenario], F1-based
};

// One train/test evaluation of a single selector + retention scenario.
struct EvaluationOutcome {
  std::vector<std::size_t> selected;  // original feature indices, rank order
  ConfusionMatrix cm;
  MetricsReport metrics;
};

/// First ceil(|order| * percent / 100) entries, at least one. Requires
/// percent in (0, 100].
std::vector<std::size_t> retain(const std::vector<std::size_t>& order, double percent);

/// Feature indices in selection-priority order for the given selector on a
/// normalized training set. `selector_seed` drives the random selector only.
std::vector<std::size_t> selector_order(const LabeledDataset& train_normalized,
                                        Selector selector, const ExperimentConfig& cfg,
                                        std::uint64_t selector_seed);

/// Normalizes (fit on train), selects features, classifies the test split and
/// scores it. Selector None keeps every feature regardless of percent.
EvaluationOutcome evaluate_split(const LabeledDataset& train, const LabeledDataset& test,
                                 Selector selector, double percent,
                                 const ExperimentConfig& cfg, std::uint64_t selector_seed);

/// Repeated-trials scenario sweep: per trial, resample a stratified split with
/// seed base+trial, evaluate every selector at every retention percentage, then
/// aggregate and run the signed-rank comparison of each method against the
/// reference (the first FEMa-FS entry, or the first method).
ExperimentReport run_experiment(const LabeledDataset& data, const ExperimentConfig& cfg);

/// Convenience overload loading the dataset from cfg.dataset_path.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace femafs
