// femafs: feature ranking, selection and evaluation from the command line.
//
// Subcommands: rank, select, evaluate, compare, report.
// Exit codes: 0 success, 1 pipeline error, 2 usage error.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "femafs/baselines.hpp"
#include "femafs/basis.hpp"
#include "femafs/dataset.hpp"
#include "femafs/error.hpp"
#include "femafs/experiment.hpp"
#include "femafs/feature_selection.hpp"
#include "femafs/report_io.hpp"

namespace fs = std::filesystem;
using namespace femafs;

namespace {

const std::vector<std::string> kAllSelectors = {"femafs", "chi2", "anova", "none", "random"};
const std::vector<std::string> kRankSelectors = {"femafs", "chi2", "anova"};

std::string fmt(double value, const char* spec = "%.4f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, value);
  return buf;
}

int resolve_positive(const std::string& text, const LabeledDataset& data) {
  for (std::size_t i = 0; i < data.label_names.size(); ++i) {
    if (data.label_names[i] == text) return static_cast<int>(i + 1);
  }
  int id = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
  if (ec == std::errc() && ptr == text.data() + text.size() && id >= 1 &&
      id <= data.class_count) {
    return id;
  }
  std::string known;
  for (const auto& name : data.label_names) {
    if (!known.empty()) known += ", ";
    known += name;
  }
  throw Error("unknown positive label '" + text + "' (dataset labels: " + known + ")");
}

void emit(const fs::path& path, const std::string& content) {
  write_text_file(path, content);
  std::cout << "wrote " << path.string() << '\n';
}

// Rank order and export rows for one selector on normalized data.
std::pair<std::vector<ScoreRow>, std::string> ranked_rows(const LabeledDataset& norm,
                                                          const std::string& selector,
                                                          const ExperimentConfig& cfg) {
  if (selector == "femafs") {
    const FeatureRanking ranking =
        rank_features(norm, build_grid(cfg.grid_size), SmoothnessParam(cfg.smoothness));
    return {score_rows(ranking, norm.feature_names), "lower_is_better"};
  }
  const ScoreVector sv = selector == "chi2" ? chi2_scores(norm) : anova_f_scores(norm);
  return {score_rows(sv, norm.feature_names), "higher_is_better"};
}

int run_rank(const ExperimentConfig& cfg, const std::string& selector) {
  const LabeledDataset data =
      load_csv(cfg.dataset_path, cfg.label_column, cfg.categorical_columns);
  const LabeledDataset norm = apply_normalizer(fit_normalizer(data), data);
  const auto [rows, direction] = ranked_rows(norm, selector, cfg);

  const fs::path out(cfg.output_dir);
  emit(out / "ranking.json", ranking_to_json(rows, direction));
  emit(out / "ranking.csv", ranking_to_csv(rows, direction));
  std::cout << "ranked " << rows.size() << " features with " << selector << "; best: "
            << rows.front().name << " (score " << fmt(rows.front().score, "%.6g") << ")\n";
  return 0;
}

int run_select(const ExperimentConfig& cfg, const std::string& selector, double percent) {
  const LabeledDataset data =
      load_csv(cfg.dataset_path, cfg.label_column, cfg.categorical_columns);
  const LabeledDataset norm = apply_normalizer(fit_normalizer(data), data);
  const auto [rows, direction] = ranked_rows(norm, selector, cfg);

  std::vector<std::size_t> order;
  order.reserve(rows.size());
  for (const ScoreRow& row : rows) order.push_back(row.index);
  const std::vector<std::size_t> subset = retain(order, percent);

  std::ostringstream json;
  json << "{\n  \"selector\": \"" << selector << "\",\n  \"percent\": "
       << fmt(percent, "%.10g") << ",\n  \"direction\": \"" << direction
       << "\",\n  \"indices\": [";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    json << (i ? ", " : "") << subset[i];
  }
  json << "],\n  \"names\": [";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    json << (i ? ", " : "") << '"' << data.feature_names[subset[i]] << '"';
  }
  json << "]\n}\n";

  // reduced dataset keeps the original (unnormalized) values and labels
  const LabeledDataset reduced = project(data, subset);
  std::ostringstream csv;
  for (const auto& name : reduced.feature_names) csv << name << ',';
  csv << cfg.label_column << '\n';
  for (std::size_t r = 0; r < reduced.sample_count(); ++r) {
    for (std::size_t j = 0; j < reduced.feature_count(); ++j) {
      csv << nlohmann::json(reduced.features(r, j)).dump() << ',';
    }
    csv << reduced.label_names[static_cast<std::size_t>(reduced.labels[r] - 1)] << '\n';
  }

  const fs::path out(cfg.output_dir);
  emit(out / "selection.json", json.str());
  emit(out / "selected.csv", csv.str());
  std::cout << "kept " << subset.size() << " of " << order.size() << " features ("
            << selector << ", " << fmt(percent, "%.10g") << "%)\n";
  return 0;
}

int run_evaluate(ExperimentConfig cfg, const std::string& selector, double percent,
                 const std::string& test_path, const std::string& positive) {
  const LabeledDataset data =
      load_csv(cfg.dataset_path, cfg.label_column, cfg.categorical_columns);

  LabeledDataset train, test;
  if (!test_path.empty()) {
    train = data;
    test = load_csv(test_path, cfg.label_column, cfg.categorical_columns);
    if (test.feature_names != train.feature_names) {
      throw Error("test dataset columns differ from the training dataset");
    }
    if (test.label_names != train.label_names) {
      throw Error("test dataset labels differ from the training dataset");
    }
  } else {
    std::tie(train, test) = stratified_split(data, cfg.test_fraction, cfg.seed);
  }
  cfg.positive_label = resolve_positive(positive, data);

  const EvaluationOutcome outcome = evaluate_split(
      train, test, selector_from_string(selector), percent, cfg, cfg.seed);

  const fs::path out(cfg.output_dir);
  emit(out / "metrics.json",
       evaluation_to_json(outcome, selector, percent, to_string(cfg.classifier), cfg));
  std::cout << "confusion: tp=" << outcome.cm.tp << " fp=" << outcome.cm.fp
            << " fn=" << outcome.cm.fn << " tn=" << outcome.cm.tn << '\n'
            << "accuracy=" << fmt(outcome.metrics.accuracy)
            << " f1=" << fmt(outcome.metrics.f1) << " tpr=" << fmt(outcome.metrics.tpr)
            << " fpr=" << fmt(outcome.metrics.fpr) << '\n';
  return 0;
}

void print_decision_table(const ExperimentReport& report) {
  std::cout << "Wilcoxon vs " << report.methods[report.reference] << " (F1, alpha="
            << fmt(report.config.alpha, "%.10g") << ")\n";
  std::cout << "  " << std::string(10, ' ');
  for (double p : report.percents) {
    std::string head = fmt(p, "%.10g") + "%";
    std::cout << head << std::string(head.size() < 6 ? 6 - head.size() : 1, ' ');
  }
  std::cout << '\n';
  const char* symbols[] = {"=", "up", "down", "?"};
  for (std::size_t m = 0; m < report.methods.size(); ++m) {
    std::string name = report.methods[m];
    name.resize(12, ' ');
    std::cout << "  " << name.substr(0, 12);
    for (const ComparisonCell& cell : report.comparisons[m]) {
      const auto idx = static_cast<std::size_t>(cell.decision);
      std::cout << symbols[idx] << std::string(6 - std::string(symbols[idx]).size(), ' ');
    }
    std::cout << '\n';
  }
}

int run_compare(ExperimentConfig cfg, const std::vector<std::string>& selectors,
                const std::string& positive, bool svg) {
  if (selectors.size() < 2) {
    std::cerr << "compare needs at least two --selector values\n";
    return 2;
  }
  for (const auto& name : selectors) cfg.selectors.push_back(selector_from_string(name));

  const LabeledDataset data =
      load_csv(cfg.dataset_path, cfg.label_column, cfg.categorical_columns);
  cfg.positive_label = resolve_positive(positive, data);

  const ExperimentReport report = run_experiment(data, cfg);

  const fs::path out(cfg.output_dir);
  emit(out / "report.json", report_to_json(report));
  emit(out / "decisions.csv", decisions_to_csv(report));
  emit(out / "summary.csv", summary_to_csv(report));
  if (svg) emit(out / "chart.svg", report_to_svg(report));
  print_decision_table(report);
  return 0;
}

int run_report(const std::string& input, const std::string& output_dir, bool svg) {
  const ExperimentReport report = report_from_json(read_text_file(input));
  const fs::path out(output_dir);
  emit(out / "decisions.csv", decisions_to_csv(report));
  emit(out / "summary.csv", summary_to_csv(report));
  if (svg) emit(out / "chart.svg", report_to_svg(report));
  print_decision_table(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FEMa-FS: finite-element feature selection and classification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI/TOML file");

  ExperimentConfig cfg;
  std::string selector = "femafs";
  std::vector<std::string> selectors = {"femafs", "chi2", "anova"};
  double percent = 50.0;
  std::string test_path;
  std::string positive = "1";
  std::string report_input;
  bool svg = false;

  auto add_data_opts = [&](CLI::App* cmd) {
    cmd->add_option("--data", cfg.dataset_path, "input CSV (header row, comma separated)")
        ->required();
    cmd->add_option("--label", cfg.label_column, "name of the label column")->required();
    cmd->add_option("--categorical", cfg.categorical_columns,
                    "categorical feature columns (ordinal-encoded)");
    cmd->add_option("--out", cfg.output_dir, "output directory")
        ->capture_default_str();
  };
  auto add_model_opts = [&](CLI::App* cmd) {
    cmd->add_option("--k", cfg.smoothness, "basis smoothness exponent (>= 1)")
        ->capture_default_str()
        ->check(CLI::Range(1.0, 1e12));
    cmd->add_option("--grid", cfg.grid_size, "sampling grid size (>= 2)")
        ->capture_default_str()
        ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));
  };
  auto add_eval_opts = [&](CLI::App* cmd) {
    cmd->add_option("--classifier", cfg.classifier, "evaluation classifier")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ClassifierKind>{{"knn", ClassifierKind::Knn},
                                                  {"fema", ClassifierKind::Fema}}))
        ->default_str("knn");
    cmd->add_option("--knn", cfg.knn_neighbors, "neighbor count for the knn classifier")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "base random seed")->capture_default_str();
    cmd->add_option("--test-fraction", cfg.test_fraction,
                    "held-out fraction of each class")
        ->capture_default_str()
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    cmd->add_option("--positive", positive,
                    "positive class (label string or 1-based id)")
        ->capture_default_str();
  };

  cfg.output_dir = ".";

  CLI::App* rank = app.add_subcommand("rank", "score and rank every feature");
  add_data_opts(rank);
  add_model_opts(rank);
  rank->add_option("--selector", selector, "ranking method")
      ->check(CLI::IsMember(kRankSelectors))
      ->capture_default_str();

  CLI::App* select = app.add_subcommand("select", "rank and keep the top features");
  add_data_opts(select);
  add_model_opts(select);
  select->add_option("--selector", selector, "ranking method")
      ->check(CLI::IsMember(kRankSelectors))
      ->capture_default_str();
  select->add_option("--percent", percent, "percentage of features to keep")
      ->capture_default_str()
      ->check(CLI::Range(1e-9, 100.0));

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "train/test evaluation of one configuration");
  add_data_opts(evaluate);
  add_model_opts(evaluate);
  add_eval_opts(evaluate);
  evaluate->add_option("--selector", selector, "feature selector")
      ->check(CLI::IsMember(kAllSelectors))
      ->capture_default_str();
  evaluate->add_option("--percent", percent, "percentage of features to keep")
      ->capture_default_str()
      ->check(CLI::Range(1e-9, 100.0));
  evaluate->add_option("--test-data", test_path,
                       "separate test CSV (defaults to a stratified split)");

  CLI::App* compare =
      app.add_subcommand("compare", "repeated-trials scenario sweep with Wilcoxon tests");
  add_data_opts(compare);
  add_model_opts(compare);
  add_eval_opts(compare);
  compare->add_option("--selector", selectors, "two or more selectors; first femafs is the reference")
      ->check(CLI::IsMember(kAllSelectors))
      ->capture_default_str();
  compare->add_option("--percent", cfg.percents, "retention percentages")
      ->check(CLI::Range(1e-9, 100.0));
  compare->add_option("--trials", cfg.trials, "number of repeated trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  compare->add_option("--alpha", cfg.alpha, "significance level")
      ->capture_default_str()
      ->check(CLI::Range(1e-9, 1.0 - 1e-9));
  compare->add_flag("--svg", svg, "also write a bar chart of mean F1");

  CLI::App* report = app.add_subcommand("report", "re-derive tables from a report JSON");
  report->add_option("--in", report_input, "report.json produced by compare")->required();
  report->add_option("--out", cfg.output_dir, "output directory")->capture_default_str();
  report->add_flag("--svg", svg, "also write a bar chart of mean F1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rank->parsed()) return run_rank(cfg, selector);
    if (select->parsed()) return run_select(cfg, selector, percent);
    if (evaluate->parsed()) return run_evaluate(cfg, selector, percent, test_path, positive);
    if (compare->parsed()) return run_compare(cfg, selectors, positive, svg);
    if (report->parsed()) return run_report(report_input, cfg.output_dir, svg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
