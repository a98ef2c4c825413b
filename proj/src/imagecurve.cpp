#include "discop/imagecurve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>

#include <nlohmann/json.hpp>

#include "discop/error.hpp"

namespace discop {

BinaryImage::BinaryImage(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw DomainError("BinaryImage: rows and cols must be positive");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

void BinaryImage::set(int x, int y, std::uint8_t value) {
  if (!in_bounds(x, y))
    throw DomainError("BinaryImage: pixel (" + std::to_string(x) + ", " + std::to_string(y) + ") out of bounds");
  if (value > 1) throw DomainError("BinaryImage: pixel values must be 0 or 1");
  data_[index(x, y)] = value;
}

std::vector<Pixel> BinaryImage::pixels() const {
  std::vector<Pixel> out;
  for (int y = 0; y < rows_; ++y)
    for (int x = 0; x < cols_; ++x)
      if (data_[index(x, y)]) out.push_back({x, y});
  return out;
}

std::size_t BinaryImage::count() const { return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), 1)); }

namespace {

Pixel step(Pixel p, int dir) { return {p.x + kDirections[dir].x, p.y + kDirections[dir].y}; }

int direction_between(Pixel from, Pixel to) {
  for (int d = 0; d < 8; ++d)
    if (step(from, d) == to) return d;
  throw DomainError("pixels are not 8-adjacent");
}

bool adjacent(Pixel a, Pixel b) { return a != b && std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1; }

std::string describe(Pixel p) { return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")"; }

}  // namespace

std::vector<Pixel> ChainCode::replay() const {
  std::vector<Pixel> out{start};
  for (int c : codes) {
    if (c < 0 || c > 7) throw DomainError("chain code labels must lie in 0..7");
    out.push_back(step(out.back(), c));
  }
  if (closed && out.size() > 1) out.pop_back();
  return out;
}

std::string ChainCode::to_json() const {
  const nlohmann::json doc{{"start", {start.x, start.y}}, {"codes", codes}, {"closed", closed}};
  return doc.dump();
}

Pixel find_start(const BinaryImage& image) {
  for (int y = image.rows() - 1; y >= 0; --y)
    for (int x = 0; x < image.cols(); ++x)
      if (image.at(x, y)) return {x, y};
  throw TraceError("image contains no curve pixels");
}

int crossing_number(const BinaryImage& image, Pixel p) {
  int runs = 0;
  for (int d = 0; d < 8; ++d) {
    if (image.at(step(p, d)) && !image.at(step(p, (d + 7) % 8))) ++runs;
  }
  return runs;
}

namespace {

class Tracer {
 public:
  explicit Tracer(const BinaryImage& image)
      : image_(image), visited_(static_cast<std::size_t>(image.rows()) * image.cols(), 0) {}

  bool visited(Pixel p) const { return visited_[static_cast<std::size_t>(p.y) * image_.cols() + p.x] != 0; }
  void mark(Pixel p) { visited_[static_cast<std::size_t>(p.y) * image_.cols() + p.x] = 1; }

  bool candidate(Pixel q) const { return image_.at(q) && !visited(q); }

  // Lowest-numbered unvisited neighbour, or -1.
  int next_direction(Pixel cur) const {
    for (int d = 0; d < 8; ++d) {
      if (!candidate(step(cur, d))) continue;
      // Do not cut a corner: take the 4-neighbour between cur and the diagonal target.
      if (d % 2 == 1 && d + 1 < 8 && candidate(step(cur, d + 1))) return d + 1;
      return d;
    }
    return -1;
  }

  // Extends `path` from its last pixel until no unvisited neighbour remains.
  void walk(std::vector<Pixel>& path) {
    for (;;) {
      const int d = next_direction(path.back());
      if (d < 0) return;
      const Pixel q = step(path.back(), d);
      mark(q);
      path.push_back(q);
    }
  }

 private:
  const BinaryImage& image_;
  std::vector<std::uint8_t> visited_;
};

}  // namespace

TraceResult trace(const BinaryImage& image) {
  const std::vector<Pixel> all = image.pixels();
  if (all.empty()) throw TraceError("image contains no curve pixels");
  for (Pixel p : all) {
    if (crossing_number(image, p) >= 3)
      throw TraceError("curve branches or intersects itself at pixel " + describe(p), p.x, p.y);
  }

  const Pixel start = find_start(image);
  Tracer tracer(image);
  tracer.mark(start);
  std::vector<Pixel> path{start};
  tracer.walk(path);

  bool closed = false;
  if (path.size() == 1) {
    closed = all.size() == 1;
  } else if (path.size() >= 3 && adjacent(path.back(), start)) {
    closed = true;
  } else {
    // Open curve whose start pixel is not an endpoint: collect the other arm
    // and begin the sequence at its far end.
    std::vector<Pixel> other{start};
    tracer.walk(other);
    if (other.size() > 1) {
      std::vector<Pixel> joined(other.rbegin(), other.rend() - 1);
      joined.insert(joined.end(), path.begin(), path.end());
      path = std::move(joined);
    }
  }

  for (Pixel p : all) {
    if (tracer.visited(p)) continue;
    const bool touches = std::any_of(path.begin(), path.end(), [p](Pixel q) { return adjacent(p, q); });
    throw TraceError(touches ? "curve pixel " + describe(p) + " is off the traced path (thick or branching curve)"
                             : "pixel " + describe(p) + " is not connected to the curve",
                     p.x, p.y);
  }

  TraceResult result;
  result.chain.start = path.front();
  result.chain.closed = closed;
  for (std::size_t i = 1; i < path.size(); ++i) result.chain.codes.push_back(direction_between(path[i - 1], path[i]));
  if (closed && path.size() > 1) result.chain.codes.push_back(direction_between(path.back(), path.front()));
  for (Pixel p : path) {
    result.sequences.u.push_back(p.x);
    result.sequences.v.push_back(p.y);
  }
  return result;
}

namespace {

// Snaps N*t onto an integer when it is within a few ulps, so that
// grid parameters j/N land exactly on knot j.
double knot_position(double t, std::size_t segments) {
  const double x = static_cast<double>(segments) * std::clamp(t, 0.0, 1.0);
  const double r = std::round(x);
  return std::abs(x - r) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x) ? r : x;
}

}  // namespace

ScalarFunction coord_function_pl(std::span<const double> s, bool closed) {
  if (s.empty()) throw DomainError("coord_function_pl: empty sequence");
  std::vector<double> values(s.begin(), s.end());
  const std::size_t n = values.size();
  if (n == 1) return [v = values[0]](double) { return v; };
  const std::size_t segments = closed ? n : n - 1;
  return [values = std::move(values), segments, n](double t) {
    const double x = knot_position(t, segments);
    const auto j = std::min(static_cast<std::size_t>(x), segments - 1);
    const double frac = x - static_cast<double>(j);
    const double a = values[j];
    const double b = values[(j + 1) % n];
    return a + frac * (b - a);
  };
}

ScalarFunction coord_function_pc(std::span<const double> s) {
  if (s.empty()) throw DomainError("coord_function_pc: empty sequence");
  std::vector<double> values(s.begin(), s.end());
  return [values = std::move(values)](double t) {
    const double x = knot_position(t, values.size());
    return values[std::min(static_cast<std::size_t>(x), values.size() - 1)];
  };
}

namespace {

Curve curve_from_sequences(std::span<const double> u, std::span<const double> v, bool closed,
                           CoordinateVariant variant) {
  const bool linear = variant == CoordinateVariant::PiecewiseLinear;
  ScalarFunction x = linear ? coord_function_pl(u, closed) : coord_function_pc(u);
  ScalarFunction y = linear ? coord_function_pl(v, closed) : coord_function_pc(v);
  return Curve(
      {0.0, 1.0}, 2,
      [x = std::move(x), y = std::move(y)](double t, std::span<double> out) {
        out[0] = x(t);
        out[1] = y(t);
      },
      closed, linear);
}

}  // namespace

Curve image_to_curve(const TraceResult& traced, CoordinateVariant variant) {
  const std::vector<double> u(traced.sequences.u.begin(), traced.sequences.u.end());
  const std::vector<double> v(traced.sequences.v.begin(), traced.sequences.v.end());
  return curve_from_sequences(u, v, traced.chain.closed, variant);
}

Curve image_to_curve(const BinaryImage& image, CoordinateVariant variant) { return image_to_curve(trace(image), variant); }

BinaryImage rasterize(const Curve& gamma, int rows, int cols) {
  if (gamma.dimension() != 2) throw DomainError("rasterize: curve must be planar");
  BinaryImage image(rows, cols);
  const Interval d = gamma.domain();
  constexpr std::int64_t kMaxIntervals = (std::int64_t{1} << 20) + 1;

  // Odd interval counts keep samples off the exact midpoints between lattice
  // knots, where rounding halves away from zero would add a stray pixel.
  std::vector<Pixel> pixels;
  for (std::int64_t intervals = 65;; intervals = 2 * intervals - 1) {
    pixels.clear();
    bool connected = true;
    std::array<double, 2> p{};
    for (std::int64_t k = 0; k <= intervals; ++k) {
      const double t = k == intervals ? d.hi : d.lo + (d.hi - d.lo) * static_cast<double>(k) / intervals;
      gamma.evaluate(t, p);
      const double rx = std::round(p[0]);
      const double ry = std::round(p[1]);
      if (!(rx >= 0.0 && ry >= 0.0 && rx < cols && ry < rows))
        throw DomainError("rasterize: curve leaves the " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " canvas at t = " + std::to_string(t));
      const Pixel px{static_cast<int>(rx), static_cast<int>(ry)};
      if (!pixels.empty() && std::max(std::abs(px.x - pixels.back().x), std::abs(px.y - pixels.back().y)) > 1) {
        connected = false;
        if (2 * intervals - 1 <= kMaxIntervals) break;
      }
      if (pixels.empty() || pixels.back() != px) pixels.push_back(px);
    }
    if (connected || 2 * intervals - 1 > kMaxIntervals) break;
  }
  for (Pixel px : pixels) image.set(px, 1);
  return image;
}

BinaryImage upscale(const BinaryImage& image, double factor, const OperatorFamily& family, int n,
                    ExtensionStrategy strategy, const UpscaleOptions& options) {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw DomainError("upscale: factor must be positive");
  const double rows = std::ceil(factor * image.rows());
  const double cols = std::ceil(factor * image.cols());
  if (rows * cols > static_cast<double>(std::int64_t{1} << 28)) throw DomainError("upscale: output canvas too large");

  const Curve curve = image_to_curve(trace(image), options.variant);
  const Curve approx = apply_operator(family, curve, n, strategy, options.eval);
  return rasterize(scale(approx, factor), static_cast<int>(rows), static_cast<int>(cols));
}

Curve polyline_curve(std::span<const std::pair<double, double>> points, bool closed) {
  if (points.size() < 2) throw DomainError("need at least 2 points");
  std::vector<double> u;
  std::vector<double> v;
  for (const auto& [x, y] : points) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("points must be finite");
    u.push_back(x);
    v.push_back(y);
  }
  return curve_from_sequences(u, v, closed, CoordinateVariant::PiecewiseLinear);
}

Curve smooth_from_points(std::span<const std::pair<double, double>> points, bool closed,
                         const OperatorFamily& family, int n, ExtensionStrategy strategy,
                         const EvalOptions& options) {
  return apply_operator(family, polyline_curve(points, closed), n, strategy, options);
}

double hausdorff_distance(const BinaryImage& a, const BinaryImage& b) {
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  if (pa.empty() && pb.empty()) return 0.0;
  if (pa.empty() || pb.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<Pixel>& from, const std::vector<Pixel>& to) {
    long worst = 0;
    for (Pixel p : from) {
      long best = std::numeric_limits<long>::max();
      for (Pixel q : to) {
        const long dx = p.x - q.x;
        const long dy = p.y - q.y;
        best = std::min(best, dx * dx + dy * dy);
        if (best == 0) break;
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::sqrt(static_cast<double>(std::max(directed(pa, pb), directed(pb, pa))));
}

bool is_simple_closed_cycle(const BinaryImage& image) {
  const auto all = image.pixels();
  if (all.size() < 4) return false;
  for (Pixel p : all)
    if (crossing_number(image, p) != 2) return false;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(image.rows()) * image.cols(), 0);
  std::deque<Pixel> queue{all.front()};
  seen[static_cast<std::size_t>(all.front().y) * image.cols() + all.front().x] = 1;
  std::size_t reached = 0;
  while (!queue.empty()) {
    const Pixel p = queue.front();
    queue.pop_front();
    ++reached;
    for (int d = 0; d < 8; ++d) {
      const Pixel q = step(p, d);
      if (!image.at(q)) continue;
      auto& s = seen[static_cast<std::size_t>(q.y) * image.cols() + q.x];
      if (!s) {
        s = 1;
        queue.push_back(q);
      }
    }
  }
  return reached == all.size();
}

}  // namespace discop
