#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace discop {

/// Pixel position: x is the abscissa (column), y the ordinate (row, counted
/// from the top).
struct Pixel {
  int x;
  int y;

  friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

class BinaryImage {
 public:
  BinaryImage() = default;
  /// All-zero image. Throws DomainError unless rows, cols >= 1.
  BinaryImage(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < cols_ && y < rows_; }
  /// Out-of-bounds reads return 0.
  std::uint8_t at(int x, int y) const { return in_bounds(x, y) ? data_[index(x, y)] : 0; }
  std::uint8_t at(Pixel p) const { return at(p.x, p.y); }
  /// Throws DomainError when out of bounds or value not in {0, 1}.
  void set(int x, int y, std::uint8_t value);
  void set(Pixel p, std::uint8_t value) { set(p.x, p.y, value); }

  /// Curve pixels in row-major order.
  std::vector<Pixel> pixels() const;
  std::size_t count() const;

  const std::vector<std::uint8_t>& data() const { return data_; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * cols_ + x; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace discop
