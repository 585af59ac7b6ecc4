#include "femafs/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace femafs {
namespace {

// Average ranks of the sorted magnitudes, doubled so ties stay integral:
// a tie run over 0-based positions [lo, hi] gets 2 * mean(lo+1 .. hi+1).
std::vector<std::size_t> doubled_ranks(const std::vector<double>& magnitudes_sorted) {
  const std::size_t n = magnitudes_sorted.size();
  std::vector<std::size_t> rank2(n);
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo;
    while (hi + 1 < n && magnitudes_sorted[hi + 1] == magnitudes_sorted[lo]) ++hi;
    for (std::size_t i = lo; i <= hi; ++i) rank2[i] = lo + hi + 2;
    lo = hi + 1;
  }
  return rank2;
}

// P(W2+ <= w) and P(W2+ >= w) from the exact null distribution of the scaled
// positive rank sum, by subset-sum counting over the doubled ranks.
std::pair<double, double> exact_tails(const std::vector<std::size_t>& rank2,
                                      std::size_t observed) {
  const std::size_t total = std::accumulate(rank2.begin(), rank2.end(), std::size_t{0});
  std::vector<double> count(total + 1, 0.0);
  count[0] = 1.0;
  for (std::size_t r : rank2) {
    for (std::size_t s = total; s >= r; --s) count[s] += count[s - r];
  }
  const double denom = std::ldexp(1.0, static_cast<int>(rank2.size()));  // 2^n
  double below = 0.0;
  double above = 0.0;
  for (std::size_t s = 0; s <= total; ++s) {
    if (s <= observed) below += count[s];
    if (s >= observed) above += count[s];
  }
  return {below / denom, above / denom};
}

double normal_two_sided(const std::vector<std::size_t>& rank2, std::size_t w2_plus) {
  const auto n = static_cast<double>(rank2.size());
  const double mean = n * (n + 1.0) / 4.0;
  double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  // tie correction over runs of equal magnitude
  std::size_t i = 0;
  while (i < rank2.size()) {
    std::size_t j = i;
    while (j + 1 < rank2.size() && rank2[j + 1] == rank2[i]) ++j;
    const auto t = static_cast<double>(j - i + 1);
    variance -= (t * t * t - t) / 48.0;
    i = j + 1;
  }
  if (variance <= 0.0) return 1.0;
  const double t_plus = static_cast<double>(w2_plus) / 2.0;
  const double z = std::max(0.0, std::abs(t_plus - mean) - 0.5) / std::sqrt(variance);
  return std::erfc(z / std::sqrt(2.0));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    double alpha) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("wilcoxon_signed_rank: length mismatch");
  }
  if (a.empty()) throw std::invalid_argument("wilcoxon_signed_rank: empty input");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("wilcoxon_signed_rank: alpha must be in (0,1)");
  }

  std::vector<double> diffs;
  diffs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d != 0.0) diffs.push_back(d);
  }

  WilcoxonResult result;
  result.alpha = alpha;
  if (diffs.empty()) {
    // the paired samples are identical
    result.decision = Comparison::Similar;
    result.p_value = 1.0;
    return result;
  }

  const std::size_t n = diffs.size();
  std::sort(diffs.begin(), diffs.end(),
            [](double x, double y) { return std::abs(x) < std::abs(y); });
  std::vector<double> magnitudes(n);
  for (std::size_t i = 0; i < n; ++i) magnitudes[i] = std::abs(diffs[i]);
  const std::vector<std::size_t> rank2 = doubled_ranks(magnitudes);

  std::size_t w2_plus = 0;
  std::size_t w2_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w2_total += rank2[i];
    if (diffs[i] > 0.0) w2_plus += rank2[i];
  }
  const std::size_t w2_minus = w2_total - w2_plus;
  result.statistic = static_cast<double>(std::min(w2_plus, w2_minus)) / 2.0;

  if (n <= kWilcoxonExactLimit) {
    const auto [below, above] = exact_tails(rank2, w2_plus);
    result.p_value = std::min(1.0, 2.0 * std::min(below, above));
  } else {
    result.p_value = std::min(1.0, normal_two_sided(rank2, w2_plus));
  }

  if (n < 5) {
    result.decision = Comparison::Inconclusive;
  } else if (result.p_value < alpha) {
    result.decision = w2_plus > w2_minus ? Comparison::FirstBetter : Comparison::SecondBetter;
  } else {
    result.decision = Comparison::Similar;
  }
  return result;
}

}  // namespace femafs
