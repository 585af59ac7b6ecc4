#include "femafs/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "femafs/baselines.hpp"
#include "femafs/error.hpp"
#include "femafs/feature_selection.hpp"
#include "femafs/fema.hpp"
#include "femafs/parallel.hpp"

namespace femafs {

std::string to_string(Selector s) {
  switch (s) {
    case Selector::FemaFS: return "femafs";
    case Selector::Chi2: return "chi2";
    case Selector::Anova: return "anova";
    case Selector::None: return "none";
    case Selector::Random: return "random";
  }
  return "unknown";
}

std::string to_string(ClassifierKind c) {
  return c == ClassifierKind::Knn ? "knn" : "fema";
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Similar: return "similar";
    case Comparison::FirstBetter: return "first_better";
    case Comparison::SecondBetter: return "second_better";
    case Comparison::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Selector selector_from_string(const std::string& name) {
  if (name == "femafs") return Selector::FemaFS;
  if (name == "chi2") return Selector::Chi2;
  if (name == "anova") return Selector::Anova;
  if (name == "none") return Selector::None;
  if (name == "random") return Selector::Random;
  throw std::invalid_argument("unknown selector: " + name);
}

ClassifierKind classifier_from_string(const std::string& name) {
  if (name == "knn") return ClassifierKind::Knn;
  if (name == "fema") return ClassifierKind::Fema;
  throw std::invalid_argument("unknown classifier: " + name);
}

Comparison comparison_from_string(const std::string& name) {
  if (name == "similar") return Comparison::Similar;
  if (name == "first_better") return Comparison::FirstBetter;
  if (name == "second_better") return Comparison::SecondBetter;
  if (name == "inconclusive") return Comparison::Inconclusive;
  throw std::invalid_argument("unknown comparison: " + name);
}

std::vector<double> default_percents() {
  std::vector<double> out;
  for (int p = 10; p <= 60; p += 5) out.push_back(static_cast<double>(p));
  return out;
}

std::vector<std::size_t> retain(const std::vector<std::size_t>& order, double percent) {
  if (!(percent > 0.0 && percent <= 100.0)) {
    throw std::invalid_argument("retention percent must be in (0, 100]");
  }
  const double exact = static_cast<double>(order.size()) * percent / 100.0;
  auto count = static_cast<std::size_t>(std::ceil(exact - 1e-9));
  count = std::clamp<std::size_t>(count, 1, order.size());
  return std::vector<std::size_t>(order.begin(),
                                  order.begin() + static_cast<std::ptrdiff_t>(count));
}

namespace {

std::vector<int> classify_all(const LabeledDataset& train, const LabeledDataset& test,
                              const ExperimentConfig& cfg) {
  std::vector<int> predicted(test.sample_count());
  if (cfg.classifier == ClassifierKind::Knn) {
    for (std::size_t i = 0; i < test.sample_count(); ++i) {
      predicted[i] = knn_predict(train, test.features.row(i), cfg.knn_neighbors);
    }
  } else {
    const FemaModel model = fema_train(train, SmoothnessParam(cfg.smoothness));
    for (std::size_t i = 0; i < test.sample_count(); ++i) {
      predicted[i] = model.predict(test.features.row(i));
    }
  }
  return predicted;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.selectors.empty()) throw std::invalid_argument("no selectors configured");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.percents.empty()) throw std::invalid_argument("no retention percentages configured");
  for (double p : cfg.percents) {
    if (!(p > 0.0 && p <= 100.0)) {
      throw std::invalid_argument("retention percent must be in (0, 100]");
    }
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw std::invalid_argument("alpha must be in (0,1)");
  }
  if (!(cfg.test_fraction > 0.0 && cfg.test_fraction < 1.0)) {
    throw std::invalid_argument("test fraction must be in (0,1)");
  }
  if (cfg.positive_label < 1) throw std::invalid_argument("positive label must be >= 1");
}

double sample_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

}  // namespace

std::vector<std::size_t> selector_order(const LabeledDataset& train_normalized,
                                        Selector selector, const ExperimentConfig& cfg,
                                        std::uint64_t selector_seed) {
  const std::size_t n = train_normalized.feature_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  switch (selector) {
    case Selector::FemaFS: {
      const FeatureRanking ranking = rank_features(
          train_normalized, build_grid(cfg.grid_size), SmoothnessParam(cfg.smoothness));
      for (std::size_t i = 0; i < n; ++i) order[i] = ranking.entries[i].index;
      return order;
    }
    case Selector::Chi2:
    case Selector::Anova: {
      const ScoreVector sv = selector == Selector::Chi2 ? chi2_scores(train_normalized)
                                                        : anova_f_scores(train_normalized);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sv.scores[a] != sv.scores[b]) return sv.scores[a] > sv.scores[b];
        return a < b;
      });
      return order;
    }
    case Selector::None:
      return order;
    case Selector::Random: {
      std::mt19937_64 rng(selector_seed);
      std::shuffle(order.begin(), order.end(), rng);
      return order;
    }
  }
  return order;
}

EvaluationOutcome evaluate_split(const LabeledDataset& train, const LabeledDataset& test,
                                 Selector selector, double percent,
                                 const ExperimentConfig& cfg, std::uint64_t selector_seed) {
  const NormalizationStats stats = fit_normalizer(train);
  const LabeledDataset train_n = apply_normalizer(stats, train);
  const LabeledDataset test_n = apply_normalizer(stats, test);

  EvaluationOutcome outcome;
  const std::vector<std::size_t> order =
      selector_order(train_n, selector, cfg, selector_seed);
  outcome.selected =
      selector == Selector::None ? order : retain(order, percent);

  const LabeledDataset train_p = project(train_n, outcome.selected);
  const LabeledDataset test_p = project(test_n, outcome.selected);
  const std::vector<int> predicted = classify_all(train_p, test_p, cfg);

  outcome.cm = confusion(predicted, test_p.labels, cfg.positive_label);
  outcome.metrics = metrics(outcome.cm);
  return outcome;
}

ExperimentReport run_experiment(const LabeledDataset& data, const ExperimentConfig& cfg) {
  validate_config(cfg);

  const std::size_t n_methods = cfg.selectors.size();
  const std::size_t n_scenarios = cfg.percents.size();
  const std::size_t n_trials = cfg.trials;

  struct TrialScores {
    std::vector<double> f1;        // [method * n_scenarios + scenario]
    std::vector<double> accuracy;
  };
  std::vector<TrialScores> per_trial(n_trials);

  parallel_for(n_trials, [&](std::size_t t) {
    TrialScores& slot = per_trial[t];
    slot.f1.assign(n_methods * n_scenarios, 0.0);
    slot.accuracy.assign(n_methods * n_scenarios, 0.0);

    const std::uint64_t trial_seed = cfg.seed + t;
    const auto [train, test] = stratified_split(data, cfg.test_fraction, trial_seed);
    const NormalizationStats stats = fit_normalizer(train);
    const LabeledDataset train_n = apply_normalizer(stats, train);
    const LabeledDataset test_n = apply_normalizer(stats, test);

    for (std::size_t m = 0; m < n_methods; ++m) {
      const Selector sel = cfg.selectors[m];
      // decorrelate random picks across methods sharing a trial
      const std::uint64_t sel_seed = trial_seed + 0x9E3779B97F4A7C15ULL * (m + 1);
      const std::vector<std::size_t> order = selector_order(train_n, sel, cfg, sel_seed);

      for (std::size_t s = 0; s < n_scenarios; ++s) {
        const std::vector<std::size_t> subset =
            sel == Selector::None ? order : retain(order, cfg.percents[s]);
        const LabeledDataset train_p = project(train_n, subset);
        const LabeledDataset test_p = project(test_n, subset);
        const std::vector<int> predicted = classify_all(train_p, test_p, cfg);
        const MetricsReport mr =
            metrics(confusion(predicted, test_p.labels, cfg.positive_label));
        slot.f1[m * n_scenarios + s] = mr.f1;
        slot.accuracy[m * n_scenarios + s] = mr.accuracy;
      }
    }
  });

  ExperimentReport report;
  report.config = cfg;
  report.percents = cfg.percents;
  for (Selector s : cfg.selectors) report.methods.push_back(to_string(s));

  report.cells.assign(n_methods, std::vector<TrialSeries>(n_scenarios));
  for (std::size_t m = 0; m < n_methods; ++m) {
    for (std::size_t s = 0; s < n_scenarios; ++s) {
      TrialSeries& cell = report.cells[m][s];
      cell.f1.resize(n_trials);
      cell.accuracy.resize(n_trials);
      for (std::size_t t = 0; t < n_trials; ++t) {
        cell.f1[t] = per_trial[t].f1[m * n_scenarios + s];
        cell.accuracy[t] = per_trial[t].accuracy[m * n_scenarios + s];
      }
      cell.f1_mean = std::accumulate(cell.f1.begin(), cell.f1.end(), 0.0) /
                     static_cast<double>(n_trials);
      cell.accuracy_mean =
          std::accumulate(cell.accuracy.begin(), cell.accuracy.end(), 0.0) /
          static_cast<double>(n_trials);
      cell.f1_std = sample_std(cell.f1, cell.f1_mean);
      cell.accuracy_std = sample_std(cell.accuracy, cell.accuracy_mean);
    }
  }

  report.reference = 0;
  for (std::size_t m = 0; m < n_methods; ++m) {
    if (cfg.selectors[m] == Selector::FemaFS) {
      report.reference = m;
      break;
    }
  }

  report.comparisons.assign(n_methods, std::vector<ComparisonCell>(n_scenarios));
  for (std::size_t m = 0; m < n_methods; ++m) {
    for (std::size_t s = 0; s < n_scenarios; ++s) {
      const WilcoxonResult wr = wilcoxon_signed_rank(
          report.cells[m][s].f1, report.cells[report.reference][s].f1, cfg.alpha);
      report.comparisons[m][s] = {wr.statistic, wr.p_value, wr.decision};
    }
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const LabeledDataset data =
      load_csv(cfg.dataset_path, cfg.label_column, cfg.categorical_columns);
  return run_experiment(data, cfg);
}

}  // namespace femafs
