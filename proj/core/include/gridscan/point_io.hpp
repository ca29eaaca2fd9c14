#ifndef GRIDSCAN_POINT_IO_HPP
#define GRIDSCAN_POINT_IO_HPP

#include <istream>
#include <string>
#include <vector>

namespace gridscan {

enum class PointFormat { csv, json };

/// Picks the format from the file extension; anything but ".json" is CSV.
PointFormat format_from_path(const std::string& path);

/// Reads a point list. CSV is one point per line with numeric columns; a
/// non-numeric first row is treated as a header unless assume_no_header is
/// set. JSON is an array of arrays of numbers. Ragged rows raise
/// Error(dimension_mismatch), bad cells Error(parse_error), an empty file
/// Error(empty_dataset).
std::vector<std::vector<double>> load_points(const std::string& path,
                                             PointFormat format,
                                             bool assume_no_header = false);

std::vector<std::vector<double>> parse_csv_points(std::istream& in,
                                                  bool assume_no_header = false);
std::vector<std::vector<double>> parse_json_points(const std::string& text);

/// Writers use 17 significant digits, so a reload reproduces the values
/// bit for bit.
void save_points_csv(const std::vector<std::vector<double>>& points,
                     const std::string& path);
void save_points_json(const std::vector<std::vector<double>>& points,
                      const std::string& path);

}  // namespace gridscan

#endif  // GRIDSCAN_POINT_IO_HPP
