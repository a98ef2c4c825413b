#pragma once

#include <string>
#include <utility>
#include <vector>

namespace discop {

/// Minimal SVG plot: named polyline and point layers auto-fitted to a
/// viewport. With flip_y the first axis points up (math plots); without it
/// the plot follows image coordinates.
class SvgPlot {
 public:
  explicit SvgPlot(double width = 640.0, double height = 480.0, bool flip_y = true)
      : width_(width), height_(height), flip_y_(flip_y) {}

  void add_polyline(std::string id, std::vector<std::pair<double, double>> points, std::string color,
                    double stroke_width = 1.5);
  void add_points(std::string id, std::vector<std::pair<double, double>> points, std::string color,
                  double radius = 2.5);

  std::string str() const;

 private:
  struct Layer {
    std::string id;
    std::vector<std::pair<double, double>> points;
    std::string color;
    double size;
    bool polyline;
  };

  double width_;
  double height_;
  bool flip_y_;
  std::vector<Layer> layers_;
};

}  // namespace discop
