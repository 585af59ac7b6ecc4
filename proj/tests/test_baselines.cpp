#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "femafs/baselines.hpp"
#include "femafs/error.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"

using namespace femafs;

namespace {

std::vector<std::size_t> rank_order(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

TEST_CASE("chi2 is zero when observed equals expected") {
  // balanced classes, equal per-class sums
  const LabeledDataset train =
      synth::from_rows({{0.5}, {0.3}, {0.5}, {0.3}}, {1, 2, 2, 1});
  const ScoreVector sv = chi2_scores(train);
  CHECK(sv.scores[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sv.direction == ScoreDirection::HigherIsBetter);
}

TEST_CASE("chi2 hand value") {
  const LabeledDataset train = synth::from_rows({{1}, {1}, {0}, {0}}, {1, 1, 2, 2});
  const ScoreVector sv = chi2_scores(train);
  CHECK(sv.scores[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("chi2 rejects negative values") {
  const LabeledDataset train = synth::from_rows({{-0.1}, {0.4}}, {1, 2});
  CHECK_THROWS_AS(chi2_scores(train), Error);
}

TEST_CASE("chi2 matches the reference formula on random data") {
  for (int rep = 0; rep < 20; ++rep) {
    const LabeledDataset train = synth::random_dataset(25, 5, 2 + rep % 3, 5200 + rep);
    const ScoreVector sv = chi2_scores(train);
    const std::vector<double> ref =
        oracle::chi2(synth::rows_of(train), train.labels, train.class_count);
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(sv.scores[j] == doctest::Approx(ref[j]).epsilon(1e-10));
    }
  }
}

TEST_CASE("anova F is zero for equal group means") {
  const LabeledDataset train =
      synth::from_rows({{0.2}, {0.8}, {0.2}, {0.8}}, {1, 1, 2, 2});
  const ScoreVector sv = anova_f_scores(train);
  CHECK(sv.scores[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(sv.degenerate[0]);
}

TEST_CASE("anova flags zero within-group variance") {
  const LabeledDataset train = synth::from_rows({{0}, {0}, {1}, {1}}, {1, 1, 2, 2});
  const ScoreVector sv = anova_f_scores(train);
  CHECK(sv.degenerate[0]);
  CHECK(sv.scores[0] == kAnovaSentinel);
}

TEST_CASE("anova hand value F((1,2,3),(4,5,6)) = 13.5") {
  const LabeledDataset train =
      synth::from_rows({{1}, {2}, {3}, {4}, {5}, {6}}, {1, 1, 1, 2, 2, 2});
  const ScoreVector sv = anova_f_scores(train);
  CHECK(sv.scores[0] == doctest::Approx(13.5).epsilon(1e-9));
}

TEST_CASE("anova validates class sizes") {
  const LabeledDataset lone = synth::from_rows({{1}, {2}, {3}}, {1, 1, 2});
  CHECK_THROWS_AS(anova_f_scores(lone), Error);
}

TEST_CASE("anova matches the reference formula on random data") {
  for (int rep = 0; rep < 20; ++rep) {
    const LabeledDataset train = synth::random_dataset(30, 4, 2 + rep % 3, 6800 + rep);
    const ScoreVector sv = anova_f_scores(train);
    const std::vector<double> ref =
        oracle::anova_f(synth::rows_of(train), train.labels, train.class_count);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(sv.scores[j] == doctest::Approx(ref[j]).epsilon(1e-10));
    }
  }
}

TEST_CASE("scores are invariant under sample permutation") {
  const LabeledDataset train = synth::random_dataset(24, 3, 2, 999);
  auto rows = synth::rows_of(train);
  auto labels = train.labels;
  std::mt19937_64 rng(4);
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<double>> shuffled_rows;
  std::vector<int> shuffled_labels;
  for (std::size_t i : perm) {
    shuffled_rows.push_back(rows[i]);
    shuffled_labels.push_back(labels[i]);
  }
  const LabeledDataset shuffled = synth::from_rows(shuffled_rows, shuffled_labels);

  const ScoreVector c1 = chi2_scores(train);
  const ScoreVector c2 = chi2_scores(shuffled);
  const ScoreVector f1 = anova_f_scores(train);
  const ScoreVector f2 = anova_f_scores(shuffled);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(c1.scores[j] == doctest::Approx(c2.scores[j]).epsilon(1e-12));
    CHECK(f1.scores[j] == doctest::Approx(f2.scores[j]).epsilon(1e-12));
  }
}

TEST_CASE("F ranking is invariant under per-feature affine maps") {
  const LabeledDataset train = synth::random_dataset(26, 4, 2, 1717);
  LabeledDataset mapped = train;
  for (std::size_t i = 0; i < train.sample_count(); ++i) {
    mapped.features(i, 2) = 5.5 * train.features(i, 2) + 3.0;
  }
  const ScoreVector before = anova_f_scores(train);
  const ScoreVector after = anova_f_scores(mapped);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(before.scores[j] == doctest::Approx(after.scores[j]).epsilon(1e-9));
  }
  CHECK(rank_order(before.scores) == rank_order(after.scores));
}

TEST_CASE("chi2 ranking is invariant under a global positive scale") {
  const LabeledDataset train = synth::random_dataset(26, 4, 2, 2424);
  LabeledDataset scaled = train;
  for (std::size_t i = 0; i < train.sample_count(); ++i) {
    for (std::size_t j = 0; j < train.feature_count(); ++j) {
      scaled.features(i, j) = 3.25 * train.features(i, j);
    }
  }
  const ScoreVector before = chi2_scores(train);
  const ScoreVector after = chi2_scores(scaled);
  CHECK(rank_order(before.scores) == rank_order(after.scores));
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(after.scores[j] == doctest::Approx(3.25 * before.scores[j]).epsilon(1e-10));
  }
}

TEST_CASE("knn_predict follows the documented tie rules") {
  const LabeledDataset train = synth::from_rows({{0.0}, {1.0}}, {2, 1});
  CHECK(knn_predict(train, std::vector<double>{0.0}, 1) == 2);  // exact hit
  // distance tie: the lower-index sample (label 2) wins
  CHECK(knn_predict(train, std::vector<double>{0.5}, 1) == 2);
  // vote tie with both points: lower class index wins
  CHECK(knn_predict(train, std::vector<double>{0.5}, 2) == 1);
}

TEST_CASE("knn_predict validates the neighbor count") {
  const LabeledDataset train = synth::from_rows({{0.0}, {1.0}}, {1, 2});
  CHECK_THROWS_AS(knn_predict(train, std::vector<double>{0.5}, 3), Error);
  CHECK_THROWS_AS(knn_predict(train, std::vector<double>{0.5}, 0), std::invalid_argument);
}

TEST_CASE("knn_predict matches the exhaustive oracle") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 40; ++rep) {
    const LabeledDataset train = synth::random_dataset(6 + rep % 10, 2, 2, 8300 + rep);
    const std::vector<double> q = {synth::unit_uniform(rng), synth::unit_uniform(rng)};
    const std::size_t neighbors = 1 + rep % 3 * 2;  // 1, 3, 5
    if (neighbors > train.sample_count()) continue;
    CHECK(knn_predict(train, q, neighbors) ==
          oracle::knn(synth::rows_of(train), train.labels, q, neighbors));
  }
}

TEST_CASE("1-NN resubstitution is perfect on distinct points") {
  const LabeledDataset train = synth::random_dataset(30, 3, 3, 7);
  for (std::size_t i = 0; i < train.sample_count(); ++i) {
    CHECK(knn_predict(train, train.features.row(i), 1) == train.labels[i]);
  }
}
