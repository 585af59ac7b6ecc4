#pragma once

#include <span>

namespace femafs {

enum class Comparison {
  Similar,       // p >= alpha, or both samples identical
  FirstBetter,   // p < alpha with the positive rank sum dominating
  SecondBetter,  // p < alpha with the negative rank sum dominating
  Inconclusive,  // fewer than 5 nonzero differences
};

struct WilcoxonResult {
  double statistic = 0.0;  // min of the signed rank sums
  double p_value = 1.0;
  Comparison decision = Comparison::Similar;
  double alpha = 0.05;
};

// Exact p-values (rank-sum distribution) are used up to this many nonzero
// differences; beyond it the normal approximation with tie and continuity
// corrections takes over.
inline constexpr std::size_t kWilcoxonExactLimit = 25;

/// Paired two-sided Wilcoxon signed-rank test of a vs b. Zero differences are
/// dropped; tied magnitudes receive average ranks. The two-sided p doubles
/// the smaller tail of the positive rank sum, clipped at 1.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    double alpha);

}  // namespace femafs
