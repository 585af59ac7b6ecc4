#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {
constexpr double kCoincidence = 1e-12;

std::vector<double> normalize_distances(const std::vector<double>& d, double k) {
  std::vector<double> w(d.size(), 0.0);
  std::size_t tied = 0;
  for (double v : d) tied += v < kCoincidence ? 1 : 0;
  if (tied > 0) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < kCoincidence) w[i] = 1.0 / static_cast<double>(tied);
    }
    return w;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    w[i] = 1.0 / std::pow(d[i], k);
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}
}  // namespace

std::vector<double> shepard(const std::vector<double>& query, const Rows& rows, double k) {
  std::vector<double> d(rows.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < query.size(); ++j) {
      const double diff = query[j] - rows[i][j];
      acc += diff * diff;
    }
    d[i] = std::sqrt(acc);
  }
  return normalize_distances(d, k);
}

std::vector<double> shepard_feature(double q, const Rows& rows, std::size_t j, double k) {
  std::vector<double> d(rows.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) d[i] = std::fabs(q - rows[i][j]);
  return normalize_distances(d, k);
}

std::vector<double> class_probabilities(const std::vector<double>& query, const Rows& rows,
                                        const std::vector<int>& labels, int class_count,
                                        double k) {
  const std::vector<double> w = shepard(query, rows, k);
  std::vector<double> probs(static_cast<std::size_t>(class_count), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    probs[static_cast<std::size_t>(labels[i] - 1)] += w[i];
  }
  return probs;
}

std::vector<std::vector<double>> feature_curves(const Rows& rows,
                                                const std::vector<int>& labels,
                                                int class_count, std::size_t j,
                                                const std::vector<double>& grid, double k) {
  std::vector<std::vector<double>> curves(static_cast<std::size_t>(class_count),
                                          std::vector<double>(grid.size(), 0.0));
  for (std::size_t t = 0; t < grid.size(); ++t) {
    const std::vector<double> w = shepard_feature(grid[t], rows, j, k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      curves[static_cast<std::size_t>(labels[i] - 1)][t] += w[i];
    }
  }
  return curves;
}

double overlap(const Rows& rows, const std::vector<int>& labels, int class_count,
               std::size_t j, const std::vector<double>& grid, double k) {
  const auto curves = feature_curves(rows, labels, class_count, j, grid, k);
  double pair_sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      double acc = 0.0;
      for (std::size_t t = 0; t < grid.size(); ++t) {
        acc += std::min(curves[a][t], curves[b][t]);
      }
      pair_sum += acc / static_cast<double>(grid.size());
      ++pairs;
    }
  }
  return pair_sum / static_cast<double>(pairs);
}

std::vector<double> chi2(const Rows& rows, const std::vector<int>& labels, int class_count) {
  const std::size_t n = rows.front().size();
  const std::size_t m = rows.size();
  std::vector<double> class_sizes(static_cast<std::size_t>(class_count), 0.0);
  for (int y : labels) class_sizes[static_cast<std::size_t>(y - 1)] += 1.0;

  std::vector<double> scores(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> observed(static_cast<std::size_t>(class_count), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      observed[static_cast<std::size_t>(labels[i] - 1)] += rows[i][j];
      total += rows[i][j];
    }
    double stat = 0.0;
    for (int c = 0; c < class_count; ++c) {
      const double expected =
          class_sizes[static_cast<std::size_t>(c)] / static_cast<double>(m) * total;
      if (expected > 0.0) {
        const double diff = observed[static_cast<std::size_t>(c)] - expected;
        stat += diff * diff / expected;
      }
    }
    scores[j] = stat;
  }
  return scores;
}

std::vector<double> anova_f(const Rows& rows, const std::vector<int>& labels,
                            int class_count) {
  const std::size_t n = rows.front().size();
  const std::size_t m = rows.size();
  std::vector<double> scores(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> sum(static_cast<std::size_t>(class_count), 0.0);
    std::vector<double> count(static_cast<std::size_t>(class_count), 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      sum[static_cast<std::size_t>(labels[i] - 1)] += rows[i][j];
      count[static_cast<std::size_t>(labels[i] - 1)] += 1.0;
      grand += rows[i][j];
    }
    grand /= static_cast<double>(m);
    double ssb = 0.0;
    for (int c = 0; c < class_count; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      const double mean = sum[ci] / count[ci];
      ssb += count[ci] * (mean - grand) * (mean - grand);
    }
    double ssw = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto ci = static_cast<std::size_t>(labels[i] - 1);
      const double mean = sum[ci] / count[ci];
      ssw += (rows[i][j] - mean) * (rows[i][j] - mean);
    }
    const double df_between = static_cast<double>(class_count - 1);
    const double df_within = static_cast<double>(m) - static_cast<double>(class_count);
    if (ssw == 0.0) {
      scores[j] = ssb == 0.0 ? 0.0 : 1e300;
    } else {
      scores[j] = (ssb / df_between) / (ssw / df_within);
    }
  }
  return scores;
}

int knn(const Rows& rows, const std::vector<int>& labels, const std::vector<double>& query,
        std::size_t neighbors) {
  std::vector<std::pair<double, std::size_t>> by_distance;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < query.size(); ++j) {
      const double diff = query[j] - rows[i][j];
      acc += diff * diff;
    }
    by_distance.emplace_back(acc, i);
  }
  std::sort(by_distance.begin(), by_distance.end());
  std::vector<std::size_t> votes;
  for (std::size_t i = 0; i < neighbors; ++i) {
    const auto label = static_cast<std::size_t>(labels[by_distance[i].second]);
    if (votes.size() < label + 1) votes.resize(label + 1, 0);
    ++votes[label];
  }
  std::size_t best = 1;
  for (std::size_t c = 2; c < votes.size(); ++c) {
    if (votes[c] > votes[best]) best = c;
  }
  return static_cast<int>(best);
}

double wilcoxon_p(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("wilcoxon_p: length mismatch");
  std::vector<double> magnitude;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d != 0.0) {
      magnitude.push_back(std::fabs(d));
      positive.push_back(d > 0.0);
    }
  }
  const std::size_t n = magnitude.size();
  if (n == 0) return 1.0;
  if (n > 20) throw std::invalid_argument("wilcoxon_p: enumeration limited to n <= 20");

  // average ranks of the magnitudes, doubled so ties stay integral
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return magnitude[x] < magnitude[y]; });
  std::vector<long> rank2(n, 0);
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi + 1 < n && magnitude[order[hi + 1]] == magnitude[order[lo]]) ++hi;
    const long shared = static_cast<long>(lo) + static_cast<long>(hi) + 2;  // 2*avg rank
    for (std::size_t i = lo; i <= hi; ++i) rank2[order[i]] = shared;
    lo = hi + 1;
  }

  long observed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (positive[i]) observed += rank2[i];
  }

  long below = 0, above = 0;
  const std::size_t assignments = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < assignments; ++mask) {
    long w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) w += rank2[i];
    }
    if (w <= observed) ++below;
    if (w >= observed) ++above;
  }
  const double tail = static_cast<double>(std::min(below, above));
  return std::min(1.0, 2.0 * tail / static_cast<double>(assignments));
}

}  // namespace oracle
