#include "femafs/feature_selection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "femafs/error.hpp"
#include "femafs/parallel.hpp"

namespace femafs {

SamplingGrid build_grid(std::size_t p) {
  if (p < 2) throw std::invalid_argument("build_grid: need at least 2 points");
  SamplingGrid grid;
  grid.points.resize(p);
  for (std::size_t t = 0; t < p; ++t) {
    grid.points[t] = static_cast<double>(t) / static_cast<double>(p - 1);
  }
  return grid;
}

FeatureManifold feature_manifold(const LabeledDataset& train, std::size_t feature_index,
                                 const SamplingGrid& grid, SmoothnessParam k) {
  if (feature_index >= train.feature_count()) {
    throw std::invalid_argument("feature_manifold: feature index out of range");
  }
  const auto c = static_cast<std::size_t>(train.class_count);
  FeatureManifold manifold;
  manifold.feature_index = feature_index;
  manifold.curves = Matrix(c, grid.size());

  for (std::size_t t = 0; t < grid.size(); ++t) {
    const BasisWeights phi =
        shepard_basis_feature(grid.points[t], train, feature_index, k);
    for (std::size_t l = 0; l < phi.size(); ++l) {
      manifold.curves(static_cast<std::size_t>(train.labels[l] - 1), t) += phi[l];
    }
  }
  return manifold;
}

double overlap_score(const FeatureManifold& manifold) {
  const std::size_t c = manifold.curves.rows();
  const std::size_t p = manifold.curves.cols();
  double pair_sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a + 1; b < c; ++b) {
      double acc = 0.0;
      for (std::size_t t = 0; t < p; ++t) {
        acc += std::min(manifold.curves(a, t), manifold.curves(b, t));
      }
      pair_sum += acc / static_cast<double>(p);
      ++pairs;
    }
  }
  return pair_sum / static_cast<double>(pairs);
}

namespace {

bool column_is_constant(const LabeledDataset& data, std::size_t j) {
  const double first = data.features(0, j);
  for (std::size_t r = 1; r < data.sample_count(); ++r) {
    if (data.features(r, j) != first) return false;
  }
  return true;
}

}  // namespace

FeatureRanking rank_features(const LabeledDataset& train, const SamplingGrid& grid,
                             SmoothnessParam k) {
  if (train.sample_count() == 0) throw Error("rank_features: empty training set");
  const std::size_t n = train.feature_count();

  std::vector<RankedFeature> entries(n);
  parallel_for(n, [&](std::size_t j) {
    entries[j].index = j;
    entries[j].constant = column_is_constant(train, j);
    entries[j].score = overlap_score(feature_manifold(train, j, grid, k));
  });

  // ascending by (constant last, score, index)
  std::sort(entries.begin(), entries.end(), [](const RankedFeature& a, const RankedFeature& b) {
    if (a.constant != b.constant) return b.constant;
    if (a.score != b.score) return a.score < b.score;
    return a.index < b.index;
  });
  return FeatureRanking{std::move(entries)};
}

std::vector<std::size_t> select_top(const FeatureRanking& ranking, double percent) {
  if (!(percent > 0.0 && percent <= 100.0)) {
    throw std::invalid_argument("select_top: percent must be in (0, 100]");
  }
  const std::size_t n = ranking.entries.size();
  // tiny slack keeps exact-integer quotients from rounding up
  const double exact = static_cast<double>(n) * percent / 100.0;
  auto count = static_cast<std::size_t>(std::ceil(exact - 1e-9));
  count = std::clamp<std::size_t>(count, 1, n);

  std::vector<std::size_t> selected;
  selected.reserve(count);
  for (std::size_t i = 0; i < count; ++i) selected.push_back(ranking.entries[i].index);
  return selected;
}

LabeledDataset project(const LabeledDataset& data, std::span<const std::size_t> subset) {
  std::set<std::size_t> seen;
  for (std::size_t j : subset) {
    if (j >= data.feature_count()) {
      throw std::invalid_argument("project: feature index out of range");
    }
    if (!seen.insert(j).second) {
      throw std::invalid_argument("project: duplicate feature index");
    }
  }
  LabeledDataset out;
  out.labels = data.labels;
  out.label_names = data.label_names;
  out.class_count = data.class_count;
  out.features = Matrix(data.sample_count(), subset.size());
  for (std::size_t pos = 0; pos < subset.size(); ++pos) {
    if (!data.feature_names.empty()) {
      out.feature_names.push_back(data.feature_names[subset[pos]]);
    }
    for (std::size_t r = 0; r < data.sample_count(); ++r) {
      out.features(r, pos) = data.features(r, subset[pos]);
    }
  }
  return out;
}

}  // namespace femafs
