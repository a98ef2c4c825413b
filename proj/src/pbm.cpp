#include "discop/pbm.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

#include "discop/error.hpp"
#include "discop/textio.hpp"

namespace discop {

namespace {

constexpr std::int64_t kMaxPixels = std::int64_t{1} << 28;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  bool done() const { return pos_ >= bytes_.size(); }
  char peek() const { return bytes_[pos_]; }
  char get() { return bytes_[pos_++]; }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::string_view rest() const { return bytes_.substr(pos_); }

  // Header whitespace, including '#' comments running to end of line.
  void skip_header_space() {
    while (!done()) {
      if (is_space(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!done() && peek() != '\n' && peek() != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  int read_dimension(const char* what) {
    skip_header_space();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw FormatError(std::string("PBM: expected ") + what);
    std::int64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (get() - '0');
      if (value > std::numeric_limits<int>::max()) throw FormatError(std::string("PBM: ") + what + " overflows");
    }
    if (value <= 0) throw FormatError(std::string("PBM: ") + what + " must be positive");
    return static_cast<int>(value);
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

void expect_only_whitespace(std::string_view rest) {
  for (char c : rest)
    if (!is_space(c)) throw FormatError("PBM: trailing data after the raster");
}

}  // namespace

BinaryImage load_pbm(std::string_view bytes) {
  Reader in(bytes);
  if (in.remaining() < 2 || in.get() != 'P') throw FormatError("PBM: missing magic number");
  const char kind = in.get();
  if (kind != '1' && kind != '4') throw FormatError("PBM: only P1 and P4 are supported");

  const int cols = in.read_dimension("width");
  const int rows = in.read_dimension("height");
  if (static_cast<std::int64_t>(rows) * cols > kMaxPixels) throw FormatError("PBM: image dimensions too large");
  if (in.done() || !is_space(in.peek())) throw FormatError("PBM: header must end with whitespace");

  BinaryImage image(rows, cols);
  if (kind == '1') {
    for (int y = 0; y < rows; ++y) {
      for (int x = 0; x < cols; ++x) {
        while (!in.done() && is_space(in.peek())) in.get();
        if (in.done()) throw FormatError("PBM: raster is truncated");
        const char c = in.get();
        if (c != '0' && c != '1') throw FormatError("PBM: plain raster may only hold 0 and 1");
        image.set(x, y, static_cast<std::uint8_t>(c - '0'));
      }
    }
  } else {
    in.get();  // the single whitespace byte ending the header
    const std::size_t row_bytes = (static_cast<std::size_t>(cols) + 7) / 8;
    if (in.remaining() < row_bytes * rows) throw FormatError("PBM: raster is truncated");
    const std::string_view raster = in.rest();
    for (int y = 0; y < rows; ++y) {
      for (int x = 0; x < cols; ++x) {
        const auto byte = static_cast<unsigned char>(raster[y * row_bytes + x / 8]);
        image.set(x, y, static_cast<std::uint8_t>((byte >> (7 - x % 8)) & 1u));
      }
    }
    expect_only_whitespace(raster.substr(row_bytes * rows));
    return image;
  }
  expect_only_whitespace(in.rest());
  return image;
}

std::string save_pbm(const BinaryImage& image, PbmEncoding encoding) {
  if (image.rows() < 1 || image.cols() < 1) throw DomainError("save_pbm: empty image");
  std::string out = (encoding == PbmEncoding::Plain ? "P1\n" : "P4\n") + std::to_string(image.cols()) + ' ' +
                    std::to_string(image.rows()) + '\n';
  if (encoding == PbmEncoding::Plain) {
    // Netpbm asks for lines of at most 70 characters.
    for (int y = 0; y < image.rows(); ++y) {
      for (int x = 0; x < image.cols(); ++x) {
        out.push_back(static_cast<char>('0' + image.at(x, y)));
        if ((x + 1) % 70 == 0 || x + 1 == image.cols()) out.push_back('\n');
      }
    }
    return out;
  }
  const std::size_t row_bytes = (static_cast<std::size_t>(image.cols()) + 7) / 8;
  for (int y = 0; y < image.rows(); ++y) {
    std::string row(row_bytes, '\0');
    for (int x = 0; x < image.cols(); ++x) {
      if (image.at(x, y)) row[x / 8] = static_cast<char>(static_cast<unsigned char>(row[x / 8]) | (0x80u >> (x % 8)));
    }
    out += row;
  }
  return out;
}

BinaryImage read_pbm_file(const std::string& path) { return load_pbm(read_file(path)); }

void write_pbm_file(const std::string& path, const BinaryImage& image, PbmEncoding encoding) {
  write_file_atomic(path, save_pbm(image, encoding));
}

}  // namespace discop
