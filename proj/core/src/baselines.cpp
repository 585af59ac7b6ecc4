#include "femafs/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "femafs/error.hpp"

namespace femafs {

ScoreVector chi2_scores(const LabeledDataset& train) {
  const std::size_t m = train.sample_count();
  const std::size_t n = train.feature_count();
  const auto c = static_cast<std::size_t>(train.class_count);
  if (m == 0) throw Error("chi2_scores: empty dataset");

  std::vector<double> class_prior(c, 0.0);
  for (int y : train.labels) class_prior[static_cast<std::size_t>(y - 1)] += 1.0;
  for (double& p : class_prior) p /= static_cast<double>(m);

  ScoreVector out;
  out.direction = ScoreDirection::HigherIsBetter;
  out.scores.assign(n, 0.0);
  out.degenerate.assign(n, false);

  std::vector<double> observed(c);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(observed.begin(), observed.end(), 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      const double v = train.features(r, j);
      if (v < 0.0) throw Error("chi2_scores: negative feature value");
      observed[static_cast<std::size_t>(train.labels[r] - 1)] += v;
    }
    double column_total = 0.0;
    for (double o : observed) column_total += o;

    double stat = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
      const double expected = class_prior[i] * column_total;
      if (expected > 0.0) {
        const double d = observed[i] - expected;
        stat += d * d / expected;
      }
    }
    out.scores[j] = stat;
  }
  return out;
}

ScoreVector anova_f_scores(const LabeledDataset& train) {
  const std::size_t m = train.sample_count();
  const std::size_t n = train.feature_count();
  const auto c = static_cast<std::size_t>(train.class_count);

  std::vector<std::size_t> class_size(c, 0);
  for (int y : train.labels) ++class_size[static_cast<std::size_t>(y - 1)];
  for (std::size_t i = 0; i < c; ++i) {
    if (class_size[i] < 2) {
      throw Error("anova_f_scores: class " + std::to_string(i + 1) +
                  " has fewer than 2 samples");
    }
  }
  if (m <= c) throw Error("anova_f_scores: need more samples than classes");

  ScoreVector out;
  out.direction = ScoreDirection::HigherIsBetter;
  out.scores.assign(n, 0.0);
  out.degenerate.assign(n, false);

  const double df_between = static_cast<double>(c) - 1.0;
  const double df_within = static_cast<double>(m - c);

  std::vector<double> group_mean(c);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(group_mean.begin(), group_mean.end(), 0.0);
    double grand_mean = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      group_mean[static_cast<std::size_t>(train.labels[r] - 1)] += train.features(r, j);
      grand_mean += train.features(r, j);
    }
    grand_mean /= static_cast<double>(m);
    for (std::size_t i = 0; i < c; ++i) group_mean[i] /= static_cast<double>(class_size[i]);

    double ss_between = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
      const double d = group_mean[i] - grand_mean;
      ss_between += static_cast<double>(class_size[i]) * d * d;
    }
    double ss_within = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double d =
          train.features(r, j) - group_mean[static_cast<std::size_t>(train.labels[r] - 1)];
      ss_within += d * d;
    }

    if (ss_within == 0.0) {
      // groups are internally constant: perfect separation or a constant feature
      out.degenerate[j] = true;
      out.scores[j] = ss_between == 0.0 ? 0.0 : kAnovaSentinel;
    } else {
      out.scores[j] = (ss_between / df_between) / (ss_within / df_within);
    }
  }
  return out;
}

int knn_predict(const LabeledDataset& train, std::span<const double> query,
                std::size_t neighbors) {
  const std::size_t m = train.sample_count();
  if (neighbors < 1) throw std::invalid_argument("knn_predict: neighbors must be >= 1");
  if (neighbors > m) throw Error("knn_predict: neighbors exceeds training size");
  if (query.size() != train.feature_count()) {
    throw std::invalid_argument("knn_predict: query dimension mismatch");
  }

  // squared distances preserve the ordering; ties resolve to the lower index
  std::vector<std::pair<double, std::size_t>> order(m);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = 0.0;
    const auto row = train.features.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double d = query[j] - row[j];
      acc += d * d;
    }
    order[i] = {acc, i};
  }
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(neighbors),
                    order.end());

  std::vector<std::size_t> votes(static_cast<std::size_t>(train.class_count), 0);
  for (std::size_t i = 0; i < neighbors; ++i) {
    ++votes[static_cast<std::size_t>(train.labels[order[i].second] - 1)];
  }
  const auto best = std::max_element(votes.begin(), votes.end());
  return static_cast<int>(best - votes.begin()) + 1;
}

}  // namespace femafs
