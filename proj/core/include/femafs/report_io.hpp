#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "femafs/baselines.hpp"
#include "femafs/experiment.hpp"
#include "femafs/feature_selection.hpp"

namespace femafs {

/// One exported score row. `direction` tells the consumer how to read the
/// score column: "lower_is_better" (overlap ranking) or "higher_is_better"
/// (chi2 / ANOVA-F).
struct ScoreRow {
  std::size_t index = 0;
  std::string name;
  double score = 0.0;
  bool constant = false;
};

/// Builds export rows from an overlap ranking (already in rank order).
std::vector<ScoreRow> score_rows(const FeatureRanking& ranking,
                                 const std::vector<std::string>& feature_names);

/// Builds export rows from a baseline score vector, ordered best-first
/// (descending score, index ascending on ties).
std::vector<ScoreRow> score_rows(const ScoreVector& scores,
                                 const std::vector<std::string>& feature_names);

std::string ranking_to_json(const std::vector<ScoreRow>& rows, const std::string& direction);
std::string ranking_to_csv(const std::vector<ScoreRow>& rows, const std::string& direction);

/// Full experiment report as JSON, including per-trial series so the document
/// round-trips losslessly through report_from_json.
std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);

/// Wilcoxon decision table, methods x scenarios. Cells hold the comparison of
/// each method's per-trial F1 series against the reference method's:
/// "=" similar, "↑" method better, "↓" method worse, "?" inconclusive.
std::string decisions_to_csv(const ExperimentReport& report);

/// Mean/std table, one row per (method, scenario) cell.
std::string summary_to_csv(const ExperimentReport& report);

/// Self-contained grouped bar chart of mean F1 per scenario, one bar per
/// method. No external assets; plain SVG markup.
std::string report_to_svg(const ExperimentReport& report);

/// Single-split evaluation result (confusion matrix + metrics) as JSON.
std::string evaluation_to_json(const EvaluationOutcome& outcome, const std::string& selector,
                               double percent, const std::string& classifier,
                               const ExperimentConfig& cfg);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace femafs
