#include "hdbscan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hdbscan/errors.hpp"

namespace hdbscan {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// 1-based position in the file; the header is row 1.
std::string cell_pos(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col + 1);
}

double parse_double(const std::string& cell, std::size_t row, std::size_t col) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || cell.empty()) {
    throw DataError("cannot parse '" + cell + "' as a number at " + cell_pos(row, col));
  }
  return value;
}

int parse_label(const std::string& cell, std::size_t row, std::size_t col) {
  int value = 0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || cell.empty()) {
    throw DataError("cannot parse '" + cell + "' as an integer label at " +
                    cell_pos(row, col));
  }
  return value;
}

// Shortest round-trip decimal form; keeps generated CSVs byte-stable and
// re-ingestable without loss.
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Dataset ingest_csv(const std::string& path, const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open input file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw DataError("input file is empty: " + path);
  }
  const std::vector<std::string> header = split_csv_line(strip_cr(line));
  if (header.empty()) {
    throw DataError("header row has no columns");
  }

  int label_col = -1;
  std::vector<std::string> feature_names;
  std::vector<int> feature_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "label") {
      if (label_col != -1) {
        throw DataError("more than one column is named 'label'");
      }
      label_col = static_cast<int>(c);
    } else {
      feature_names.push_back(header[c]);
      feature_cols.push_back(static_cast<int>(c));
    }
  }
  if (feature_cols.empty()) {
    throw DataError("no feature columns in header");
  }

  std::vector<std::vector<double>> rows;
  Labeling truth;
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw DataError("row " + std::to_string(row_no) + " has " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(header.size()));
    }
    std::vector<double> features;
    features.reserve(feature_cols.size());
    for (int c : feature_cols) {
      features.push_back(parse_double(cells[c], row_no, c));
    }
    rows.push_back(std::move(features));
    if (label_col != -1) {
      truth.push_back(parse_label(cells[label_col], row_no, label_col));
    }
  }
  if (rows.empty()) {
    throw DataError("no data rows in " + path);
  }

  if (cfg.metric == Metric::haversine && rows.front().size() != 2) {
    throw DataError("haversine input needs exactly 2 feature columns (lat, lon), got " +
                    std::to_string(rows.front().size()));
  }
  if (cfg.degrees) {
    constexpr double to_rad = std::numbers::pi / 180.0;
    for (auto& row : rows) {
      for (double& v : row) v *= to_rad;
    }
  }
  if (cfg.scale) {
    const std::size_t d = rows.front().size();
    for (std::size_t j = 0; j < d; ++j) {
      double lo = rows.front()[j], hi = rows.front()[j];
      for (const auto& row : rows) {
        lo = std::min(lo, row[j]);
        hi = std::max(hi, row[j]);
      }
      for (auto& row : rows) {
        row[j] = hi > lo ? (row[j] - lo) / (hi - lo) : 0.0;
      }
    }
  }

  try {
    PointSet ps = PointSet::from_rows(rows, cfg.metric);
    return Dataset{std::move(ps),
                   label_col != -1 ? std::optional<Labeling>(std::move(truth))
                                   : std::nullopt,
                   std::move(feature_names)};
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(e.what()) + " (while loading " + path + ")");
  }
}

std::string tree_to_json(const CondensedTree& ct) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CondensedRecord& r : ct.records()) {
    nlohmann::json rec;
    rec["parent"] = r.parent;
    rec["child"] = r.child;
    if (std::isinf(r.lambda_val)) {
      rec["lambda_val"] = "inf";
    } else {
      rec["lambda_val"] = r.lambda_val;
    }
    rec["child_size"] = r.child_size;
    arr.push_back(rec);
  }
  return arr.dump(2) + "\n";
}

std::string labels_to_csv(const Labeling& labels) {
  std::string out = "index,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(labels[i]) + "\n";
  }
  return out;
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["ari"] = report.ari;
  j["clustered_fraction"] = report.clustered_fraction;
  j["n_clusters"] = report.n_clusters;
  j["n_noise"] = report.n_noise;
  return j.dump(2) + "\n";
}

std::string points_to_csv(const PointSet& ps, const std::vector<std::string>& feature_names,
                          const Labeling* labels) {
  if (static_cast<int>(feature_names.size()) != ps.dim()) {
    throw std::invalid_argument("feature name count does not match dimensions");
  }
  if (labels && static_cast<int>(labels->size()) != ps.size()) {
    throw std::invalid_argument("label count does not match point count");
  }
  std::string out;
  for (std::size_t j = 0; j < feature_names.size(); ++j) {
    if (j) out += ',';
    out += feature_names[j];
  }
  if (labels) out += ",label";
  out += '\n';
  for (int i = 0; i < ps.size(); ++i) {
    for (int j = 0; j < ps.dim(); ++j) {
      if (j) out += ',';
      out += format_double(ps.coord(i, j));
    }
    if (labels) {
      out += ',';
      out += std::to_string((*labels)[i]);
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError("cannot open output file: " + path);
  }
  out << content;
  if (!out) {
    throw DataError("failed writing to " + path);
  }
}

}  // namespace hdbscan
