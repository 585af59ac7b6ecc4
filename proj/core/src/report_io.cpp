#include "femafs/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "femafs/error.hpp"

namespace femafs {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double value, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, value);
  return buf;
}

// shortest decimal form that round-trips, same as the JSON writer's
std::string num(double value) { return ordered_json(value).dump(); }

const char* decision_symbol(Comparison c) {
  switch (c) {
    case Comparison::Similar: return "=";
    case Comparison::FirstBetter: return "↑";
    case Comparison::SecondBetter: return "↓";
    case Comparison::Inconclusive: return "?";
  }
  return "?";
}

ordered_json config_to_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["dataset"] = cfg.dataset_path;
  j["label_column"] = cfg.label_column;
  j["categorical_columns"] = cfg.categorical_columns;
  j["smoothness"] = cfg.smoothness;
  j["grid_size"] = cfg.grid_size;
  j["percents"] = cfg.percents;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  ordered_json sels = ordered_json::array();
  for (Selector s : cfg.selectors) sels.push_back(to_string(s));
  j["selectors"] = std::move(sels);
  j["classifier"] = to_string(cfg.classifier);
  j["knn_neighbors"] = cfg.knn_neighbors;
  j["alpha"] = cfg.alpha;
  j["test_fraction"] = cfg.test_fraction;
  j["positive_label"] = cfg.positive_label;
  return j;
}

ExperimentConfig config_from_json(const ordered_json& j) {
  ExperimentConfig cfg;
  cfg.dataset_path = j.at("dataset").get<std::string>();
  cfg.label_column = j.at("label_column").get<std::string>();
  cfg.categorical_columns = j.at("categorical_columns").get<std::vector<std::string>>();
  cfg.smoothness = j.at("smoothness").get<double>();
  cfg.grid_size = j.at("grid_size").get<std::size_t>();
  cfg.percents = j.at("percents").get<std::vector<double>>();
  cfg.trials = j.at("trials").get<std::size_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.selectors.clear();
  for (const auto& name : j.at("selectors")) {
    cfg.selectors.push_back(selector_from_string(name.get<std::string>()));
  }
  cfg.classifier = classifier_from_string(j.at("classifier").get<std::string>());
  cfg.knn_neighbors = j.at("knn_neighbors").get<std::size_t>();
  cfg.alpha = j.at("alpha").get<double>();
  cfg.test_fraction = j.at("test_fraction").get<double>();
  cfg.positive_label = j.at("positive_label").get<int>();
  return cfg;
}

}  // namespace

std::vector<ScoreRow> score_rows(const FeatureRanking& ranking,
                                 const std::vector<std::string>& feature_names) {
  std::vector<ScoreRow> rows;
  rows.reserve(ranking.entries.size());
  for (const RankedFeature& e : ranking.entries) {
    ScoreRow row;
    row.index = e.index;
    row.name = e.index < feature_names.size() ? feature_names[e.index]
                                              : "f" + std::to_string(e.index);
    row.score = e.score;
    row.constant = e.constant;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScoreRow> score_rows(const ScoreVector& scores,
                                 const std::vector<std::string>& feature_names) {
  std::vector<std::size_t> order(scores.scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores.scores[a] != scores.scores[b]) return scores.scores[a] > scores.scores[b];
    return a < b;
  });
  std::vector<ScoreRow> rows;
  rows.reserve(order.size());
  for (std::size_t idx : order) {
    ScoreRow row;
    row.index = idx;
    row.name =
        idx < feature_names.size() ? feature_names[idx] : "f" + std::to_string(idx);
    row.score = scores.scores[idx];
    row.constant = !scores.degenerate.empty() && scores.degenerate[idx];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ranking_to_json(const std::vector<ScoreRow>& rows, const std::string& direction) {
  ordered_json doc = ordered_json::array();
  for (const ScoreRow& row : rows) {
    ordered_json entry;
    entry["index"] = row.index;
    entry["name"] = row.name;
    entry["score"] = row.score;
    entry["constant"] = row.constant;
    entry["direction"] = direction;
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string ranking_to_csv(const std::vector<ScoreRow>& rows, const std::string& direction) {
  std::ostringstream out;
  out << "index,name,score,constant,direction\n";
  for (const ScoreRow& row : rows) {
    out << row.index << ',' << row.name << ',' << num(row.score) << ','
        << (row.constant ? "true" : "false") << ',' << direction << '\n';
  }
  return out.str();
}

std::string report_to_json(const ExperimentReport& report) {
  ordered_json doc;
  doc["schema"] = "femafs-report/1";
  doc["config"] = config_to_json(report.config);
  doc["methods"] = report.methods;
  doc["percents"] = report.percents;
  doc["reference"] = report.reference;

  ordered_json cells = ordered_json::array();
  for (const auto& row : report.cells) {
    ordered_json json_row = ordered_json::array();
    for (const TrialSeries& cell : row) {
      ordered_json c;
      c["f1_mean"] = cell.f1_mean;
      c["f1_std"] = cell.f1_std;
      c["accuracy_mean"] = cell.accuracy_mean;
      c["accuracy_std"] = cell.accuracy_std;
      c["f1_trials"] = cell.f1;
      c["accuracy_trials"] = cell.accuracy;
      json_row.push_back(std::move(c));
    }
    cells.push_back(std::move(json_row));
  }
  doc["cells"] = std::move(cells);

  ordered_json comparisons = ordered_json::array();
  for (const auto& row : report.comparisons) {
    ordered_json json_row = ordered_json::array();
    for (const ComparisonCell& cell : row) {
      ordered_json c;
      c["statistic"] = cell.statistic;
      c["p_value"] = cell.p_value;
      c["decision"] = to_string(cell.decision);
      json_row.push_back(std::move(c));
    }
    comparisons.push_back(std::move(json_row));
  }
  doc["comparisons"] = std::move(comparisons);
  return doc.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report: invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != "femafs-report/1") {
      throw Error("report: unsupported schema: " + doc["schema"].get<std::string>());
    }
    ExperimentReport report;
    report.config = config_from_json(doc.at("config"));
    report.methods = doc.at("methods").get<std::vector<std::string>>();
    report.percents = doc.at("percents").get<std::vector<double>>();
    report.reference = doc.at("reference").get<std::size_t>();

    for (const auto& json_row : doc.at("cells")) {
      std::vector<TrialSeries> row;
      for (const auto& c : json_row) {
        TrialSeries cell;
        cell.f1_mean = c.at("f1_mean").get<double>();
        cell.f1_std = c.at("f1_std").get<double>();
        cell.accuracy_mean = c.at("accuracy_mean").get<double>();
        cell.accuracy_std = c.at("accuracy_std").get<double>();
        cell.f1 = c.at("f1_trials").get<std::vector<double>>();
        cell.accuracy = c.at("accuracy_trials").get<std::vector<double>>();
        row.push_back(std::move(cell));
      }
      report.cells.push_back(std::move(row));
    }

    for (const auto& json_row : doc.at("comparisons")) {
      std::vector<ComparisonCell> row;
      for (const auto& c : json_row) {
        ComparisonCell cell;
        cell.statistic = c.at("statistic").get<double>();
        cell.p_value = c.at("p_value").get<double>();
        cell.decision = comparison_from_string(c.at("decision").get<std::string>());
        row.push_back(cell);
      }
      report.comparisons.push_back(std::move(row));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report: malformed document: ") + e.what());
  }
}

std::string decisions_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "method";
  for (double p : report.percents) out << ',' << fmt(p);
  out << '\n';
  for (std::size_t m = 0; m < report.methods.size(); ++m) {
    out << report.methods[m];
    for (std::size_t s = 0; s < report.percents.size(); ++s) {
      out << ',' << decision_symbol(report.comparisons[m][s].decision);
    }
    out << '\n';
  }
  return out.str();
}

std::string summary_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "method,percent,f1_mean,f1_std,accuracy_mean,accuracy_std\n";
  for (std::size_t m = 0; m < report.methods.size(); ++m) {
    for (std::size_t s = 0; s < report.percents.size(); ++s) {
      const TrialSeries& cell = report.cells[m][s];
      out << report.methods[m] << ',' << fmt(report.percents[s]) << ','
          << fmt(cell.f1_mean, "%.6f") << ',' << fmt(cell.f1_std, "%.6f") << ','
          << fmt(cell.accuracy_mean, "%.6f") << ',' << fmt(cell.accuracy_std, "%.6f")
          << '\n';
    }
  }
  return out.str();
}

std::string report_to_svg(const ExperimentReport& report) {
  const std::size_t n_methods = report.methods.size();
  const std::size_t n_scenarios = report.percents.size();
  const double bar_w = 12.0;
  const double group_w = static_cast<double>(n_methods) * (bar_w + 4.0) + 20.0;
  const double left = 70.0, top = 46.0, plot_h = 280.0, bottom = 64.0;
  const double plot_w = group_w * static_cast<double>(n_scenarios);
  const double width = left + plot_w + 30.0;
  const double height = top + plot_h + bottom;
  const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                           "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};
  constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width, "%.0f")
      << "\" height=\"" << fmt(height, "%.0f") << "\" viewBox=\"0 0 "
      << fmt(width, "%.0f") << ' ' << fmt(height, "%.0f") << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <text x=\"" << fmt(left + plot_w / 2, "%.1f")
      << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">Mean F1 by retention scenario</text>\n";

  // horizontal gridlines + y labels at 0, 0.2, ..., 1.0
  for (int tick = 0; tick <= 5; ++tick) {
    const double v = tick / 5.0;
    const double y = top + plot_h * (1.0 - v);
    out << "  <line x1=\"" << fmt(left, "%.1f") << "\" y1=\"" << fmt(y, "%.1f")
        << "\" x2=\"" << fmt(left + plot_w, "%.1f") << "\" y2=\"" << fmt(y, "%.1f")
        << "\" stroke=\"#dddddd\"/>\n";
    out << "  <text x=\"" << fmt(left - 8, "%.1f") << "\" y=\"" << fmt(y + 4, "%.1f")
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(v, "%.1f") << "</text>\n";
  }

  for (std::size_t s = 0; s < n_scenarios; ++s) {
    const double gx = left + group_w * static_cast<double>(s);
    for (std::size_t m = 0; m < n_methods; ++m) {
      const double v = std::clamp(report.cells[m][s].f1_mean, 0.0, 1.0);
      const double h = plot_h * v;
      const double x = gx + 10.0 + static_cast<double>(m) * (bar_w + 4.0);
      out << "  <rect x=\"" << fmt(x, "%.1f") << "\" y=\"" << fmt(top + plot_h - h, "%.1f")
          << "\" width=\"" << fmt(bar_w, "%.1f") << "\" height=\"" << fmt(h, "%.1f")
          << "\" fill=\"" << palette[m % palette_size] << "\"/>\n";
    }
    out << "  <text x=\"" << fmt(gx + group_w / 2, "%.1f") << "\" y=\""
        << fmt(top + plot_h + 18, "%.1f")
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(report.percents[s]) << "%</text>\n";
  }

  out << "  <line x1=\"" << fmt(left, "%.1f") << "\" y1=\"" << fmt(top, "%.1f")
      << "\" x2=\"" << fmt(left, "%.1f") << "\" y2=\"" << fmt(top + plot_h, "%.1f")
      << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << fmt(left, "%.1f") << "\" y1=\"" << fmt(top + plot_h, "%.1f")
      << "\" x2=\"" << fmt(left + plot_w, "%.1f") << "\" y2=\""
      << fmt(top + plot_h, "%.1f") << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << fmt(left + plot_w / 2, "%.1f") << "\" y=\""
      << fmt(height - 28, "%.1f")
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">features "
         "retained (%)</text>\n";

  // legend row under the x-axis title
  double lx = left;
  const double ly = height - 10.0;
  for (std::size_t m = 0; m < n_methods; ++m) {
    out << "  <rect x=\"" << fmt(lx, "%.1f") << "\" y=\"" << fmt(ly - 10, "%.1f")
        << "\" width=\"12\" height=\"12\" fill=\"" << palette[m % palette_size]
        << "\"/>\n";
    out << "  <text x=\"" << fmt(lx + 17, "%.1f") << "\" y=\"" << fmt(ly, "%.1f")
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << report.methods[m]
        << "</text>\n";
    lx += 17.0 + 9.0 * static_cast<double>(report.methods[m].size()) + 18.0;
  }
  out << "</svg>\n";
  return out.str();
}

std::string evaluation_to_json(const EvaluationOutcome& outcome, const std::string& selector,
                               double percent, const std::string& classifier,
                               const ExperimentConfig& cfg) {
  ordered_json doc;
  doc["schema"] = "femafs-evaluation/1";
  doc["selector"] = selector;
  doc["percent"] = percent;
  doc["classifier"] = classifier;
  doc["smoothness"] = cfg.smoothness;
  doc["grid_size"] = cfg.grid_size;
  doc["knn_neighbors"] = cfg.knn_neighbors;
  doc["seed"] = cfg.seed;
  doc["positive_label"] = cfg.positive_label;
  doc["selected_features"] = outcome.selected;
  ordered_json cm;
  cm["tp"] = outcome.cm.tp;
  cm["fp"] = outcome.cm.fp;
  cm["fn"] = outcome.cm.fn;
  cm["tn"] = outcome.cm.tn;
  doc["confusion"] = std::move(cm);
  ordered_json mx;
  mx["accuracy"] = outcome.metrics.accuracy;
  mx["f1"] = outcome.metrics.f1;
  mx["tpr"] = outcome.metrics.tpr;
  mx["fpr"] = outcome.metrics.fpr;
  mx["f1_undefined"] = outcome.metrics.f1_undefined;
  mx["tpr_undefined"] = outcome.metrics.tpr_undefined;
  mx["fpr_undefined"] = outcome.metrics.fpr_undefined;
  doc["metrics"] = std::move(mx);
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace femafs
