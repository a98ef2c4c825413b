#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "discop/operators.hpp"

namespace discop {

using Point = std::vector<double>;
/// Writes gamma(t) into `out` (size = dimension).
using CurveFunction = std::function<void(double t, std::span<double> out)>;

/// Largest endpoint gap still counted as closed.
inline constexpr double kClosureTolerance = 1e-9;

/// A d-component curve on [a, b]. `continuous` is false for curves built
/// from piecewise-constant coordinate functions; for those `closed` records
/// that the underlying point sequence is cyclic and the endpoint check is
/// skipped.
class Curve {
 public:
  /// Validates the domain, finiteness on a probe grid and, for continuous
  /// closed curves, the endpoint gap.
  Curve(Interval domain, std::size_t dimension, CurveFunction fn, bool closed, bool continuous = true);

  static Curve from_components(Interval domain, std::vector<ScalarFunction> components, bool closed);

  const Interval& domain() const { return domain_; }
  std::size_t dimension() const { return dimension_; }
  bool closed() const { return closed_; }
  bool continuous() const { return continuous_; }

  Point operator()(double t) const;
  void evaluate(double t, std::span<double> out) const;
  double component(std::size_t i, double t) const;
  ScalarFunction component_function(std::size_t i) const;

  /// max_i |x_i(a) - x_i(b)|
  double closure_defect() const;

  /// Builds a curve without the probe-grid validation; for results that are
  /// finite by construction.
  static Curve unchecked(Interval domain, std::size_t dimension, CurveFunction fn, bool closed, bool continuous);

 private:
  struct Unchecked {};
  Curve(Unchecked, Interval domain, std::size_t dimension, CurveFunction fn, bool closed, bool continuous);

  Interval domain_;
  std::size_t dimension_;
  CurveFunction fn_;
  bool closed_;
  bool continuous_;
};

enum class ExtensionStrategy { ConstantPad, TranslateAndPad, Periodic, AffineRemap };

std::string to_string(ExtensionStrategy strategy);
/// Accepts constant-pad, translate-pad, periodic, affine-remap.
ExtensionStrategy parse_strategy(const std::string& name);
/// The strategy a family uses when none is requested.
ExtensionStrategy default_strategy(const OperatorFamily& family, bool closed);

/// Extends f from [a, b] to the whole line (ConstantPad, Periodic) or the
/// half-line (TranslateAndPad). AffineRemap is not an extension and is rejected.
ScalarFunction extend_scalar(ScalarFunction f, Interval domain, ExtensionStrategy strategy);

/// Componentwise S_n applied to the strategy's extension of gamma, mapped
/// back onto gamma's domain.
Curve apply_operator(const OperatorFamily& family, const Curve& gamma, int n, ExtensionStrategy strategy,
                     const EvalOptions& options = {});

/// max over an equispaced grid (endpoints included) of max_i |x_i - y_i|.
double sup_error(const Curve& gamma, const Curve& approx, int grid_size);

/// t -> A gamma(t) + b, with A given row-major (d x d).
Curve affine_transform(const Curve& gamma, std::span<const double> matrix, std::span<const double> offset);
Curve scale(const Curve& gamma, double factor);

std::vector<Point> sample(const Curve& gamma, int grid_size);
std::vector<double> sample_parameters(const Interval& domain, int grid_size);

/// CSV with header t,x_1,...,x_d.
void write_csv(std::ostream& out, const Curve& gamma, int grid_size);
/// JSON object with domain, dimension, closed and a samples table.
std::string to_json(const Curve& gamma, int grid_size);

}  // namespace discop
