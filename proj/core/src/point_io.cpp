#include "gridscan/point_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gridscan/error.hpp"

namespace gridscan {

namespace {

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t') ++end;
  return *end == '\0';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // Trim surrounding blanks.
    const auto first = cell.find_first_not_of(" \t");
    const auto last = cell.find_last_not_of(" \t");
    cells.push_back(first == std::string::npos
                        ? std::string()
                        : cell.substr(first, last - first + 1));
  }
  return cells;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PointFormat format_from_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") {
    return PointFormat::json;
  }
  return PointFormat::csv;
}

std::vector<std::vector<double>> parse_csv_points(std::istream& in,
                                                  bool assume_no_header) {
  std::vector<std::vector<double>> points;
  std::string line;
  std::size_t line_number = 0;
  bool first_content_line = true;
  std::size_t dim = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto cells = split_csv_line(line);
    std::vector<double> point;
    point.reserve(cells.size());
    bool numeric = true;
    std::size_t bad_column = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double value = 0.0;
      if (!parse_double(cells[i], value)) {
        numeric = false;
        bad_column = i + 1;
        break;
      }
      point.push_back(value);
    }

    if (!numeric) {
      if (first_content_line && !assume_no_header) {
        first_content_line = false;  // header row, skip
        continue;
      }
      throw Error(ErrorCode::parse_error,
                  "non-numeric cell at line " + std::to_string(line_number) +
                      ", column " + std::to_string(bad_column));
    }

    if (points.empty()) {
      dim = point.size();
    } else if (point.size() != dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  "line " + std::to_string(line_number) + " has " +
                      std::to_string(point.size()) + " columns, expected " +
                      std::to_string(dim));
    }
    points.push_back(std::move(point));
    first_content_line = false;
  }

  if (points.empty()) {
    throw Error(ErrorCode::empty_dataset, "no points in CSV input");
  }
  return points;
}

std::vector<std::vector<double>> parse_json_points(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::parse_error, "JSON points must be an array");
  }
  if (doc.empty()) {
    throw Error(ErrorCode::empty_dataset, "no points in JSON input");
  }

  std::vector<std::vector<double>> points;
  points.reserve(doc.size());
  std::size_t dim = 0;
  for (std::size_t row = 0; row < doc.size(); ++row) {
    const auto& entry = doc[row];
    if (!entry.is_array()) {
      throw Error(ErrorCode::parse_error,
                  "point " + std::to_string(row) + " is not an array");
    }
    std::vector<double> point;
    point.reserve(entry.size());
    for (const auto& value : entry) {
      if (!value.is_number()) {
        throw Error(ErrorCode::parse_error,
                    "non-numeric coordinate in point " + std::to_string(row));
      }
      point.push_back(value.get<double>());
    }
    if (row == 0) {
      dim = point.size();
    } else if (point.size() != dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  "point " + std::to_string(row) + " has dimension " +
                      std::to_string(point.size()) + ", expected " +
                      std::to_string(dim));
    }
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<std::vector<double>> load_points(const std::string& path,
                                             PointFormat format,
                                             bool assume_no_header) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io_error, "cannot open " + path);
  }
  if (format == PointFormat::csv) {
    return parse_csv_points(in, assume_no_header);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_points(buffer.str());
}

void save_points_csv(const std::vector<std::vector<double>>& points,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::io_error, "cannot write " + path);
  }
  for (const auto& point : points) {
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(point[i]);
    }
    out << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::io_error, "write failed: " + path);
  }
}

void save_points_json(const std::vector<std::vector<double>>& points,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::io_error, "cannot write " + path);
  }
  out << "[\n";
  for (std::size_t j = 0; j < points.size(); ++j) {
    out << "  [";
    for (std::size_t i = 0; i < points[j].size(); ++i) {
      if (i > 0) out << ", ";
      out << format_double(points[j][i]);
    }
    out << (j + 1 < points.size() ? "],\n" : "]\n");
  }
  out << "]\n";
  if (!out) {
    throw Error(ErrorCode::io_error, "write failed: " + path);
  }
}

}  // namespace gridscan
