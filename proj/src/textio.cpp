#include "discop/textio.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "discop/error.hpp"

namespace discop {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + tmp + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw FormatError("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw FormatError("cannot rename onto '" + path + "'");
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::vector<std::pair<double, double>> parse_points_csv(std::string_view text) {
  std::vector<std::pair<double, double>> points;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    double x = 0.0;
    double y = 0.0;
    const bool ok = comma != std::string_view::npos && line.find(',', comma + 1) == std::string_view::npos &&
                    parse_double(line.substr(0, comma), x) && parse_double(line.substr(comma + 1), y);
    if (!ok) {
      double first = 0.0;
      const bool numeric_start = parse_double(line.substr(0, std::min(comma, line.size())), first);
      if (!seen_data && line_no == 1 && !numeric_start) continue;  // header
      throw FormatError("points CSV: malformed row " + std::to_string(line_no) + ": '" + std::string(line) + "'");
    }
    seen_data = true;
    points.emplace_back(x, y);
  }
  return points;
}

}  // namespace discop
