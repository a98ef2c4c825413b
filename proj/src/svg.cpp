#include "discop/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace discop {

void SvgPlot::add_polyline(std::string id, std::vector<std::pair<double, double>> points, std::string color,
                           double stroke_width) {
  layers_.push_back({std::move(id), std::move(points), std::move(color), stroke_width, true});
}

void SvgPlot::add_points(std::string id, std::vector<std::pair<double, double>> points, std::string color,
                         double radius) {
  layers_.push_back({std::move(id), std::move(points), std::move(color), radius, false});
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string SvgPlot::str() const {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  for (const auto& layer : layers_) {
    for (const auto& [x, y] : layer.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!std::isfinite(xmin)) xmin = ymin = 0.0, xmax = ymax = 1.0;
  const double margin = 20.0;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  // Equal scaling on both axes keeps shapes undistorted.
  const double s = std::min((width_ - 2 * margin), (height_ - 2 * margin)) / span;
  auto map = [&](double x, double y) {
    const double px = margin + (x - xmin) * s;
    const double py = flip_y_ ? height_ - margin - (y - ymin) * s : margin + (y - ymin) * s;
    return std::pair{px, py};
  };

  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
      << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& layer : layers_) {
    out << "<g id=\"" << escape(layer.id) << "\">\n";
    if (layer.polyline) {
      out << "<polyline fill=\"none\" stroke=\"" << escape(layer.color) << "\" stroke-width=\"" << layer.size
          << "\" points=\"";
      for (std::size_t i = 0; i < layer.points.size(); ++i) {
        const auto [px, py] = map(layer.points[i].first, layer.points[i].second);
        out << (i ? " " : "") << px << ',' << py;
      }
      out << "\"/>\n";
    } else {
      for (const auto& [x, y] : layer.points) {
        const auto [px, py] = map(x, y);
        out << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"" << layer.size << "\" fill=\""
            << escape(layer.color) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace discop
