#include <doctest.h>

#include <numeric>
#include <random>

#include "femafs/basis.hpp"
#include "femafs/error.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"

using namespace femafs;

namespace {

LabeledDataset one_d(const std::vector<double>& values) {
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows.push_back({values[i]});
    labels.push_back(i % 2 == 0 ? 1 : 2);
  }
  return synth::from_rows(rows, labels);
}

}  // namespace

TEST_CASE("inverse_distance_weight evaluates 1/d^k") {
  const SmoothnessParam k2(2.0);
  CHECK(*inverse_distance_weight(0.0, 0.5, k2) == doctest::Approx(4.0).epsilon(1e-12));

  const std::vector<double> a = {0.0, 0.0};
  const std::vector<double> b = {3.0, 4.0};
  CHECK(*inverse_distance_weight(a, b, SmoothnessParam(1.0)) ==
        doctest::Approx(0.2).epsilon(1e-12));

  CHECK_FALSE(inverse_distance_weight(0.7, 0.7, k2).has_value());
  const std::vector<double> c = {1.0, 2.0};
  CHECK_FALSE(inverse_distance_weight(c, c, k2).has_value());

  CHECK_THROWS_AS(inverse_distance_weight(a, std::vector<double>{1.0}, k2),
                  std::invalid_argument);
}

TEST_CASE("smoothness parameter requires k >= 1") {
  CHECK_THROWS_AS(SmoothnessParam(0.5), std::invalid_argument);
  CHECK_THROWS_AS(SmoothnessParam(-2.0), std::invalid_argument);
  CHECK(SmoothnessParam(1.0).value == 1.0);
}

TEST_CASE("shepard_basis splits equally between equidistant points") {
  const LabeledDataset train = one_d({0.0, 1.0});
  const std::vector<double> query = {0.5};
  for (double k : {1.0, 2.0, 5.0}) {
    const BasisWeights w = shepard_basis(query, train, SmoothnessParam(k));
    CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("shepard_basis is one-hot at a unique training point") {
  const LabeledDataset train = synth::random_dataset(12, 3, 2, 21);
  const std::vector<double> query(train.features.row(3).begin(),
                                  train.features.row(3).end());
  const BasisWeights w = shepard_basis(query, train, SmoothnessParam(2.0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i] == (i == 3 ? 1.0 : 0.0));
  }
}

TEST_CASE("shepard_basis matches the independently derived 1-D value") {
  const LabeledDataset train = one_d({0.0, 0.5, 1.0});
  const BasisWeights w = shepard_basis(std::vector<double>{0.25}, train, SmoothnessParam(2.0));
  CHECK(w[0] == doctest::Approx(0.47368421052631576).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(0.47368421052631576).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(0.052631578947368418).epsilon(1e-12));
}

TEST_CASE("shepard_basis rejects bad inputs") {
  const LabeledDataset train = one_d({0.0, 1.0});
  CHECK_THROWS_AS(shepard_basis(std::vector<double>{0.1, 0.2}, train, SmoothnessParam(2.0)),
                  std::invalid_argument);
  LabeledDataset empty;
  CHECK_THROWS_AS(shepard_basis(std::vector<double>{0.1}, empty, SmoothnessParam(2.0)), Error);
}

TEST_CASE("shepard_basis_feature mirrors the scalar contract") {
  const LabeledDataset train = synth::from_rows({{0.9, 0.2}, {0.1, 0.8}}, {1, 2});
  for (double k : {1.0, 2.0, 7.0}) {
    const BasisWeights w = shepard_basis_feature(0.5, train, 1, SmoothnessParam(k));
    CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-12));
  }

  const BasisWeights hit = shepard_basis_feature(0.8, train, 1, SmoothnessParam(2.0));
  CHECK(hit[0] == 0.0);
  CHECK(hit[1] == 1.0);

  const LabeledDataset endpoints = synth::from_rows({{0.0}, {1.0}}, {1, 2});
  const BasisWeights w = shepard_basis_feature(0.25, endpoints, 0, SmoothnessParam(1.0));
  CHECK(w[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(shepard_basis_feature(0.5, train, 2, SmoothnessParam(1.0)),
                  std::invalid_argument);
}

TEST_CASE("basis weights form a partition of unity") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const LabeledDataset train =
        synth::random_dataset(5 + rep % 40, 1 + rep % 6, 2, 1000 + rep);
    std::vector<double> query(train.feature_count());
    for (double& v : query) v = synth::unit_uniform(rng);

    const BasisWeights w = shepard_basis(query, train, SmoothnessParam(1.0 + rep % 4));
    double sum = 0.0;
    for (double v : w) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    const BasisWeights wf = shepard_basis_feature(synth::unit_uniform(rng), train,
                                                  rep % train.feature_count(),
                                                  SmoothnessParam(2.0));
    CHECK(std::accumulate(wf.begin(), wf.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("coincident points share the mass equally") {
  const LabeledDataset train = synth::from_rows({{0.3}, {0.3}, {0.9}}, {1, 2, 1});
  const BasisWeights w = shepard_basis(std::vector<double>{0.3}, train, SmoothnessParam(2.0));
  CHECK(w[0] == 0.5);
  CHECK(w[1] == 0.5);
  CHECK(w[2] == 0.0);

  // the same rule applies below the coincidence threshold
  const LabeledDataset close = synth::from_rows({{0.3}, {0.3 + 1e-13}, {0.9}}, {1, 2, 1});
  const BasisWeights wc = shepard_basis(std::vector<double>{0.3}, close, SmoothnessParam(2.0));
  CHECK(wc[0] == 0.5);
  CHECK(wc[1] == 0.5);
  CHECK(wc[2] == 0.0);
}

TEST_CASE("raising k concentrates weight on the nearer point") {
  const LabeledDataset train = one_d({0.0, 1.0});
  double previous = 0.0;
  for (double k : {1.0, 2.0, 3.0, 4.0, 8.0}) {
    const BasisWeights w = shepard_basis(std::vector<double>{0.4}, train, SmoothnessParam(k));
    CHECK(w[0] > previous);  // nearer point gains with every increase
    previous = w[0];
  }
}

TEST_CASE("shepard_from_distances handles extreme magnitudes") {
  // 1/d^k would overflow for tiny distances; the ratio form must not
  const std::vector<double> distances = {1e-100, 1.0};
  const BasisWeights w = shepard_from_distances(distances, SmoothnessParam(4.0));
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("library basis agrees with the naive oracle") {
  std::mt19937_64 rng(93);
  for (int rep = 0; rep < 30; ++rep) {
    const LabeledDataset train = synth::random_dataset(4 + rep, 2, 2, 400 + rep);
    const auto rows = synth::rows_of(train);
    std::vector<double> query = {synth::unit_uniform(rng), synth::unit_uniform(rng)};
    const double k = 1.0 + rep % 3;

    const BasisWeights lib = shepard_basis(query, train, SmoothnessParam(k));
    const std::vector<double> ref = oracle::shepard(query, rows, k);
    for (std::size_t i = 0; i < lib.size(); ++i) {
      CHECK(lib[i] == doctest::Approx(ref[i]).epsilon(1e-10));
    }
  }
}
