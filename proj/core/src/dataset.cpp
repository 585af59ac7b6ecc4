#include "femafs/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "femafs/error.hpp"

namespace femafs {
namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) fields.push_back(cur);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& cell, std::size_t row, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw Error("unparsable cell '" + cell + "' at data row " + std::to_string(row) +
                ", column '" + column + "'");
  }
  return value;
}

}  // namespace

LabeledDataset load_csv(const std::filesystem::path& path,
                        const std::string& label_column,
                        const std::vector<std::string>& categorical_columns) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw Error("empty file: " + path.string());

  std::vector<std::string> header = split_line(line);
  for (auto& h : header) h = trim(h);

  std::size_t label_idx = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == label_column) {
      label_idx = i;
      break;
    }
  }
  if (label_idx == header.size()) throw Error("label column not found: " + label_column);

  std::set<std::size_t> categorical_idx;
  for (const auto& name : categorical_columns) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw Error("categorical column not found: " + name);
    std::size_t idx = static_cast<std::size_t>(it - header.begin());
    if (idx == label_idx) throw Error("categorical column is the label column: " + name);
    categorical_idx.insert(idx);
  }

  std::vector<std::vector<std::string>> rows;
  std::size_t row_no = 0;
  while (std::getline(in, line)) {
    ++row_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_line(line);
    if (fields.size() != header.size()) {
      throw Error("data row " + std::to_string(row_no) + " has " +
                  std::to_string(fields.size()) + " fields, expected " +
                  std::to_string(header.size()));
    }
    for (auto& f : fields) f = trim(f);
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw Error("file has no data rows: " + path.string());

  // label strings -> 1..c by sorted order
  std::set<std::string> label_values;
  for (const auto& r : rows) label_values.insert(r[label_idx]);
  if (label_values.size() < 2) throw Error("file contains a single class only");
  std::map<std::string, int> label_code;
  int next = 1;
  for (const auto& v : label_values) label_code[v] = next++;
  std::vector<std::string> label_names(label_values.begin(), label_values.end());

  // categorical strings -> 0,1,2,... by sorted order, per column
  std::map<std::size_t, std::map<std::string, double>> categorical_code;
  for (std::size_t idx : categorical_idx) {
    std::set<std::string> values;
    for (const auto& r : rows) values.insert(r[idx]);
    double code = 0.0;
    for (const auto& v : values) categorical_code[idx][v] = code++;
  }

  LabeledDataset out;
  out.class_count = static_cast<int>(label_values.size());
  out.label_names = std::move(label_names);
  out.labels.reserve(rows.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != label_idx) out.feature_names.push_back(header[i]);
  }
  out.features = Matrix(rows.size(), header.size() - 1);

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    out.labels.push_back(label_code.at(fields[label_idx]));
    std::size_t c = 0;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i == label_idx) continue;
      if (categorical_idx.count(i)) {
        out.features(r, c) = categorical_code.at(i).at(fields[i]);
      } else {
        out.features(r, c) = parse_number(fields[i], r + 1, header[i]);
      }
      ++c;
    }
  }
  return out;
}

NormalizationStats fit_normalizer(const LabeledDataset& train) {
  if (train.sample_count() == 0) throw Error("fit_normalizer: empty training set");
  const std::size_t n = train.feature_count();
  NormalizationStats stats;
  stats.min.assign(n, 0.0);
  stats.max.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double lo = train.features(0, j);
    double hi = lo;
    for (std::size_t r = 1; r < train.sample_count(); ++r) {
      lo = std::min(lo, train.features(r, j));
      hi = std::max(hi, train.features(r, j));
    }
    stats.min[j] = lo;
    stats.max[j] = hi;
  }
  return stats;
}

LabeledDataset apply_normalizer(const NormalizationStats& stats, const LabeledDataset& data) {
  if (stats.feature_count() != data.feature_count()) {
    throw std::invalid_argument("apply_normalizer: feature count mismatch");
  }
  LabeledDataset out = data;
  for (std::size_t j = 0; j < data.feature_count(); ++j) {
    const double lo = stats.min[j];
    const double range = stats.max[j] - lo;
    for (std::size_t r = 0; r < data.sample_count(); ++r) {
      if (range == 0.0) {
        out.features(r, j) = 0.0;
      } else {
        out.features(r, j) = std::clamp((data.features(r, j) - lo) / range, 0.0, 1.0);
      }
    }
  }
  return out;
}

namespace {

LabeledDataset take_rows(const LabeledDataset& data, const std::vector<std::size_t>& rows) {
  LabeledDataset out;
  out.feature_names = data.feature_names;
  out.label_names = data.label_names;
  out.class_count = data.class_count;
  out.features = Matrix(rows.size(), data.feature_count());
  out.labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < data.feature_count(); ++j) {
      out.features(i, j) = data.features(rows[i], j);
    }
    out.labels.push_back(data.labels[rows[i]]);
  }
  return out;
}

}  // namespace

std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& data,
                                                           double test_fraction,
                                                           std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw std::invalid_argument("stratified_split: test_fraction must be in (0,1)");
  }
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(data.class_count));
  for (std::size_t i = 0; i < data.sample_count(); ++i) {
    by_class[static_cast<std::size_t>(data.labels[i] - 1)].push_back(i);
  }
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (by_class[c].size() < 2) {
      throw Error("stratified_split: class " + std::to_string(c + 1) +
                  " has fewer than 2 samples");
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> test_idx;
  std::vector<std::size_t> train_idx;
  for (auto& members : by_class) {
    std::shuffle(members.begin(), members.end(), rng);
    auto want = static_cast<std::size_t>(
        std::lround(static_cast<double>(members.size()) * test_fraction));
    want = std::clamp<std::size_t>(want, 1, members.size() - 1);
    test_idx.insert(test_idx.end(), members.begin(), members.begin() + want);
    train_idx.insert(train_idx.end(), members.begin() + want, members.end());
  }
  // canonical order: subsets keep the original sample order
  std::sort(test_idx.begin(), test_idx.end());
  std::sort(train_idx.begin(), train_idx.end());
  return {take_rows(data, train_idx), take_rows(data, test_idx)};
}

}  // namespace femafs
