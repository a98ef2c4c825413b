#include "discop/specimens.hpp"

#include <cmath>
#include <numbers>

#include "discop/error.hpp"

namespace discop::specimens {

using std::numbers::pi;

Curve spiral() {
  return Curve({0.0, 1.0}, 2,
               [](double t, std::span<double> out) {
                 out[0] = t * std::cos(pi * t);
                 out[1] = t * std::sin(pi * t);
               },
               false);
}

Curve helix() {
  return Curve({0.0, 2.0}, 3,
               [](double t, std::span<double> out) {
                 out[0] = std::cos(2.0 * pi * t);
                 out[1] = std::sin(2.0 * pi * t);
                 out[2] = t;
               },
               false);
}

Curve closed_figure() {
  return Curve({0.0, 1.0}, 2,
               [](double t, std::span<double> out) {
                 out[0] = std::cos(4.0 * pi * t) + 2.0 * std::cos(2.0 * pi * t);
                 out[1] = std::sin(2.0 * pi * t);
               },
               true);
}

Curve constant() {
  return Curve({0.0, 1.0}, 2,
               [](double, std::span<double> out) {
                 out[0] = 3.0;
                 out[1] = -1.0;
               },
               true);
}

Curve by_name(const std::string& name) {
  if (name == "spiral") return spiral();
  if (name == "helix") return helix();
  if (name == "closed") return closed_figure();
  if (name == "constant") return constant();
  throw DomainError("unknown specimen curve '" + name + "'");
}

std::vector<std::string> names() { return {"spiral", "helix", "closed", "constant"}; }

}  // namespace discop::specimens
