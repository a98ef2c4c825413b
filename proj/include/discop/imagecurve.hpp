#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "discop/curves.hpp"
#include "discop/image.hpp"

namespace discop {

/// Step for each direction label, in (abscissa, ordinate-down) coordinates:
/// 0 east, then counter-clockwise on screen through 7 south-east.
inline constexpr std::array<Pixel, 8> kDirections{{{1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 1}}};

struct ChainCode {
  Pixel start{};
  std::vector<int> codes;
  bool closed = false;

  /// Pixels visited by replaying the codes from start. A closed code ends
  /// back on start; that final pixel is not repeated.
  std::vector<Pixel> replay() const;
  /// {"start": [x, y], "codes": [...], "closed": bool}
  std::string to_json() const;
};

struct CoordinateSequences {
  std::vector<int> u;  // abscissas
  std::vector<int> v;  // ordinates

  std::size_t size() const { return u.size(); }
};

struct TraceResult {
  ChainCode chain;
  CoordinateSequences sequences;
};

/// Curve pixel with the largest ordinate, ties broken by the smallest abscissa.
Pixel find_start(const BinaryImage& image);

/// Number of separate runs of curve pixels around the 8-neighbourhood of p:
/// 1 at an endpoint, 2 on a simple arc, 3 or more at a junction.
int crossing_number(const BinaryImage& image, Pixel p);

/// Walks the curve from find_start, always taking the lowest-numbered
/// direction to an unvisited neighbour; the start closes the loop once no
/// other neighbour is left. A diagonal step is replaced by the 4-neighbour
/// corner pixel next to it when that pixel is still unvisited.
TraceResult trace(const BinaryImage& image);

/// Piecewise-linear coordinate function on [0, 1] through s_1..s_N; the
/// closed form wraps from s_N back to s_1, the open form ends at s_N.
ScalarFunction coord_function_pl(std::span<const double> s, bool closed);
/// Piecewise-constant coordinate function: s_j on [(j-1)/N, j/N).
ScalarFunction coord_function_pc(std::span<const double> s);

enum class CoordinateVariant { PiecewiseLinear, PiecewiseConstant };

Curve image_to_curve(const TraceResult& traced, CoordinateVariant variant = CoordinateVariant::PiecewiseLinear);
Curve image_to_curve(const BinaryImage& image, CoordinateVariant variant = CoordinateVariant::PiecewiseLinear);

/// Dense sampling of a planar curve rounded to the nearest pixel (halves
/// away from zero). The sample count grows until consecutive pixels are
/// 8-adjacent or 2^20 intervals are reached. Component 0 is the abscissa.
BinaryImage rasterize(const Curve& gamma, int rows, int cols);

struct UpscaleOptions {
  CoordinateVariant variant = CoordinateVariant::PiecewiseLinear;
  EvalOptions eval;
};

/// trace -> coordinate functions -> S_n -> scale by factor -> rasterize on a
/// ceil(factor * rows) x ceil(factor * cols) canvas.
BinaryImage upscale(const BinaryImage& image, double factor, const OperatorFamily& family, int n,
                    ExtensionStrategy strategy, const UpscaleOptions& options = {});

/// Smooth curve through an ordered point list: piecewise-linear coordinate
/// functions followed by S_n.
Curve smooth_from_points(std::span<const std::pair<double, double>> points, bool closed,
                         const OperatorFamily& family, int n, ExtensionStrategy strategy,
                         const EvalOptions& options = {});

/// Piecewise-linear curve through the points, as used by smooth_from_points.
Curve polyline_curve(std::span<const std::pair<double, double>> points, bool closed);

/// Symmetric Hausdorff distance between the two pixel sets (Euclidean).
double hausdorff_distance(const BinaryImage& a, const BinaryImage& b);

/// True when the curve pixels form one 8-connected closed cycle: connected,
/// and every pixel lies on a simple arc (crossing number 2).
bool is_simple_closed_cycle(const BinaryImage& image);

}  // namespace discop
