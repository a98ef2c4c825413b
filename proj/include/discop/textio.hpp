#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace discop {

std::string read_file(const std::string& path);
/// Writes `contents` to path + ".tmp" and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view contents);

/// Ordered (x, y) pairs from CSV text: two numeric columns per row, an
/// optional non-numeric header line, blank lines ignored.
std::vector<std::pair<double, double>> parse_points_csv(std::string_view text);

}  // namespace discop
