#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "discop/discop.hpp"

namespace discop::fixtures {

/// The 11-pixel closed curve of the worked tracing example, on an 8 x 9 canvas.
inline BinaryImage example_image() {
  BinaryImage img(8, 9);
  for (Pixel p : std::vector<Pixel>{{4, 6}, {5, 6}, {6, 5}, {7, 4}, {7, 3}, {6, 3}, {5, 3}, {4, 2}, {3, 3}, {3, 4}, {4, 5}})
    img.set(p, 1);
  return img;
}

inline const std::vector<int> kExampleCodes{0, 1, 1, 2, 4, 4, 3, 5, 6, 7, 6};
inline const std::vector<int> kExampleU{4, 5, 6, 7, 7, 6, 5, 4, 3, 3, 4};
inline const std::vector<int> kExampleV{6, 6, 5, 4, 3, 3, 3, 2, 3, 4, 5};

/// Drops pixels whose removal leaves both curve neighbours 8-adjacent, so a
/// rasterized closed curve becomes a one-pixel-thin cycle.
inline BinaryImage thin(BinaryImage img) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Pixel p : img.pixels()) {
      std::vector<Pixel> nb;
      for (Pixel d : kDirections)
        if (img.at(p.x + d.x, p.y + d.y)) nb.push_back({p.x + d.x, p.y + d.y});
      if (nb.size() != 2) continue;
      if (std::abs(nb[0].x - nb[1].x) <= 1 && std::abs(nb[0].y - nb[1].y) <= 1) {
        img.set(p, 0);
        changed = true;
      }
    }
  }
  return img;
}

inline BinaryImage closed_curve_image(int rows, int cols, std::function<std::pair<double, double>(double)> shape) {
  const Curve c(Interval{0.0, 1.0}, 2,
                [shape](double t, std::span<double> out) {
                  const auto [x, y] = shape(t == 1.0 ? 0.0 : t);
                  out[0] = x;
                  out[1] = y;
                },
                true);
  return thin(rasterize(c, rows, cols));
}

inline BinaryImage ellipse_image() {
  return closed_curve_image(60, 80, [](double t) {
    const double a = 2 * std::numbers::pi * t;
    return std::pair{40.0 + 30.0 * std::cos(a), 30.0 + 18.0 * std::sin(a)};
  });
}

/// Superellipse |x/a|^4 + |y/b|^4 = 1.
inline BinaryImage rounded_rectangle_image() {
  return closed_curve_image(60, 80, [](double t) {
    const double a = 2 * std::numbers::pi * t;
    const double c = std::cos(a), s = std::sin(a);
    const double x = std::copysign(std::sqrt(std::abs(c)), c);
    const double y = std::copysign(std::sqrt(std::abs(s)), s);
    return std::pair{40.0 + 32.0 * x, 30.0 + 20.0 * y};
  });
}

inline BinaryImage blob_image() {
  return closed_curve_image(70, 70, [](double t) {
    const double a = 2 * std::numbers::pi * t;
    const double r = 24.0 + 5.0 * std::cos(3 * a) + 2.5 * std::sin(2 * a);
    return std::pair{35.0 + r * std::cos(a), 35.0 + r * std::sin(a)};
  });
}

inline BinaryImage random_image(std::mt19937_64& rng, int max_side = 40) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::bernoulli_distribution bit(0.4);
  BinaryImage img(side(rng), side(rng));
  for (int y = 0; y < img.rows(); ++y)
    for (int x = 0; x < img.cols(); ++x) img.set(x, y, bit(rng));
  return img;
}

/// Random simple open path: a self-avoiding walk in which each new pixel
/// touches no earlier pixel except its predecessor.
inline BinaryImage random_open_path(std::mt19937_64& rng, int rows, int cols, int steps) {
  BinaryImage img(rows, cols);
  Pixel p{cols / 2, rows / 2};
  img.set(p, 1);
  std::vector<Pixel> path{p};
  std::uniform_int_distribution<int> dir(0, 7);
  for (int s = 0; s < steps; ++s) {
    bool moved = false;
    for (int attempt = 0; attempt < 16 && !moved; ++attempt) {
      const Pixel d = kDirections[static_cast<std::size_t>(dir(rng))];
      const Pixel q{p.x + d.x, p.y + d.y};
      if (!img.in_bounds(q.x, q.y) || img.at(q)) continue;
      bool ok = true;
      for (Pixel e : kDirections) {
        const Pixel r{q.x + e.x, q.y + e.y};
        if (img.at(r) && r != p) ok = false;
      }
      if (!ok) continue;
      img.set(q, 1);
      path.push_back(q);
      p = q;
      moved = true;
    }
    if (!moved) break;
  }
  return img;
}

}  // namespace discop::fixtures
