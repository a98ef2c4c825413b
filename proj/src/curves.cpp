#include "discop/curves.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "discop/error.hpp"
#include "summation.hpp"

namespace discop {

namespace {

constexpr int kProbePoints = 65;

void check_domain(const Interval& d) {
  if (!std::isfinite(d.lo) || !std::isfinite(d.hi) || !(d.lo < d.hi))
    throw DomainError("curve domain must be a bounded interval [a, b] with a < b");
}

}  // namespace

Curve::Curve(Unchecked, Interval domain, std::size_t dimension, CurveFunction fn, bool closed, bool continuous)
    : domain_(domain), dimension_(dimension), fn_(std::move(fn)), closed_(closed), continuous_(continuous) {}

Curve Curve::unchecked(Interval domain, std::size_t dimension, CurveFunction fn, bool closed, bool continuous) {
  return Curve(Unchecked{}, domain, dimension, std::move(fn), closed, continuous);
}

Curve::Curve(Interval domain, std::size_t dimension, CurveFunction fn, bool closed, bool continuous)
    : Curve(Unchecked{}, domain, dimension, std::move(fn), closed, continuous) {
  check_domain(domain_);
  if (dimension_ == 0) throw DomainError("curve dimension must be >= 1");
  if (!fn_) throw DomainError("curve function is empty");
  std::vector<double> buf(dimension_);
  for (double t : sample_parameters(domain_, kProbePoints)) {
    fn_(t, buf);
    for (double v : buf)
      if (!std::isfinite(v)) throw DomainError("curve is not finite at t = " + std::to_string(t));
  }
  if (closed_ && continuous_ && closure_defect() >= kClosureTolerance)
    throw DomainError("curve flagged closed but gamma(a) != gamma(b) (gap " + std::to_string(closure_defect()) + ")");
}

Curve Curve::from_components(Interval domain, std::vector<ScalarFunction> components, bool closed) {
  const std::size_t d = components.size();
  for (const auto& c : components)
    if (!c) throw DomainError("curve component is empty");
  return Curve(domain, d,
               [components = std::move(components)](double t, std::span<double> out) {
                 for (std::size_t i = 0; i < components.size(); ++i) out[i] = components[i](t);
               },
               closed);
}

namespace {

void check_parameter(const Interval& domain, double t) {
  if (!(t >= domain.lo && t <= domain.hi))
    throw DomainError("curve parameter " + std::to_string(t) + " outside [" + std::to_string(domain.lo) + ", " +
                      std::to_string(domain.hi) + "]");
}

}  // namespace

Point Curve::operator()(double t) const {
  check_parameter(domain_, t);
  Point p(dimension_);
  fn_(t, p);
  return p;
}

void Curve::evaluate(double t, std::span<double> out) const {
  if (out.size() != dimension_) throw DomainError("curve evaluate: output span has the wrong size");
  check_parameter(domain_, t);
  fn_(t, out);
}

double Curve::component(std::size_t i, double t) const {
  if (i >= dimension_) throw DomainError("curve component index out of range");
  return (*this)(t)[i];
}

ScalarFunction Curve::component_function(std::size_t i) const {
  if (i >= dimension_) throw DomainError("curve component index out of range");
  return [curve = *this, i](double t) { return curve(t)[i]; };
}

double Curve::closure_defect() const {
  const Point a = (*this)(domain_.lo);
  const Point b = (*this)(domain_.hi);
  double defect = 0.0;
  for (std::size_t i = 0; i < dimension_; ++i) defect = std::max(defect, std::abs(a[i] - b[i]));
  return defect;
}

std::string to_string(ExtensionStrategy strategy) {
  switch (strategy) {
    case ExtensionStrategy::ConstantPad:
      return "constant-pad";
    case ExtensionStrategy::TranslateAndPad:
      return "translate-pad";
    case ExtensionStrategy::Periodic:
      return "periodic";
    case ExtensionStrategy::AffineRemap:
      return "affine-remap";
  }
  return {};
}

ExtensionStrategy parse_strategy(const std::string& name) {
  for (auto s : {ExtensionStrategy::ConstantPad, ExtensionStrategy::TranslateAndPad, ExtensionStrategy::Periodic,
                 ExtensionStrategy::AffineRemap}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown extension strategy '" + name + "'");
}

ExtensionStrategy default_strategy(const OperatorFamily& family, bool closed) {
  switch (family.kind()) {
    case FamilyKind::GeneralizedSampling:
      return closed ? ExtensionStrategy::Periodic : ExtensionStrategy::ConstantPad;
    case FamilyKind::SzaszMirakjan:
    case FamilyKind::Baskakov:
      return ExtensionStrategy::TranslateAndPad;
    case FamilyKind::Bernstein:
      return ExtensionStrategy::AffineRemap;
  }
  return ExtensionStrategy::ConstantPad;
}

namespace {

bool is_unit_interval(const Interval& d) { return d.lo == 0.0 && d.hi == 1.0; }

// Parameter in the extended curve's domain that stands for the point s of [a, b].
double parameter_for(ExtensionStrategy strategy, const Interval& d, double s) {
  switch (strategy) {
    case ExtensionStrategy::ConstantPad:
    case ExtensionStrategy::Periodic:
      return s;
    case ExtensionStrategy::TranslateAndPad:
      return std::max(s - d.lo, 0.0);
    case ExtensionStrategy::AffineRemap:
      return std::clamp((s - d.lo) / (d.hi - d.lo), 0.0, 1.0);
  }
  return s;
}

// Point of [a, b] whose value the extended curve takes at node u.
double source_for(ExtensionStrategy strategy, const Interval& d, double u) {
  switch (strategy) {
    case ExtensionStrategy::ConstantPad:
      return std::clamp(u, d.lo, d.hi);
    case ExtensionStrategy::Periodic:
      return u - std::floor(u);
    case ExtensionStrategy::TranslateAndPad:
      return std::min(u + d.lo, d.hi);
    case ExtensionStrategy::AffineRemap:
      return std::clamp((1.0 - u) * d.lo + u * d.hi, d.lo, d.hi);
  }
  return u;
}

void check_compatible(const OperatorFamily& family, ExtensionStrategy strategy) {
  const IndexSet j = family.index_set();
  const bool ok = (j == IndexSet::Integers &&
                   (strategy == ExtensionStrategy::ConstantPad || strategy == ExtensionStrategy::Periodic)) ||
                  (j == IndexSet::Naturals && strategy == ExtensionStrategy::TranslateAndPad) ||
                  (j == IndexSet::UpToN && strategy == ExtensionStrategy::AffineRemap);
  if (!ok)
    throw DomainError("strategy " + to_string(strategy) + " is incompatible with the domain of " + family.name());
}

}  // namespace

ScalarFunction extend_scalar(ScalarFunction f, Interval domain, ExtensionStrategy strategy) {
  check_domain(domain);
  switch (strategy) {
    case ExtensionStrategy::AffineRemap:
      throw DomainError("extend_scalar: affine-remap is a reparametrisation, not an extension");
    case ExtensionStrategy::Periodic:
      if (!is_unit_interval(domain)) throw DomainError("extend_scalar: periodic extension needs the domain [0, 1]");
      break;
    case ExtensionStrategy::TranslateAndPad:
      return [f = std::move(f), domain](double t) {
        if (t < 0.0) throw DomainError("translate-pad extension is defined on [0, +inf)");
        return f(source_for(ExtensionStrategy::TranslateAndPad, domain, t));
      };
    case ExtensionStrategy::ConstantPad:
      break;
  }
  return [f = std::move(f), domain, strategy](double t) { return f(source_for(strategy, domain, t)); };
}

Curve apply_operator(const OperatorFamily& family, const Curve& gamma, int n, ExtensionStrategy strategy,
                     const EvalOptions& options) {
  check_compatible(family, strategy);
  if (n < 1) throw DomainError("apply_operator: n must be a positive integer");
  if (strategy == ExtensionStrategy::Periodic) {
    if (!gamma.closed()) throw DomainError("apply_operator: periodic extension requires a closed curve");
    if (!is_unit_interval(gamma.domain()))
      throw DomainError("apply_operator: periodic extension needs a curve on [0, 1]");
  }

  const std::size_t d = gamma.dimension();
  const Interval dom = gamma.domain();
  CurveFunction fn = [family, gamma, n, strategy, options, d, dom](double s, std::span<double> out) {
    const BasisWindow window = family.basis_window(n, parameter_for(strategy, dom, s), options);
    std::vector<detail::CompensatedSum> acc(d);
    std::vector<double> buf(d);
    auto add_sample = [&](double src, double w) {
      gamma.evaluate(src, buf);
      for (std::size_t c = 0; c < d; ++c) {
        if (!std::isfinite(buf[c])) throw NonFiniteSample("apply_operator: non-finite curve sample");
        acc[c].add(w * buf[c]);
      }
    };
    // Nodes sharing a source point are merged before the curve is sampled:
    // residues mod n for the periodic extension, the padded ends otherwise.
    if (strategy == ExtensionStrategy::Periodic) {
      std::vector<detail::CompensatedSum> bins(static_cast<std::size_t>(n));
      std::size_t r = static_cast<std::size_t>(((window.k_min % n) + n) % n);
      for (double w : window.weights) {
        bins[r].add(w);
        if (++r == bins.size()) r = 0;
      }
      for (int r = 0; r < n; ++r) {
        const double w = bins[static_cast<std::size_t>(r)].value();
        if (w != 0.0) add_sample(static_cast<double>(r) / n, w);
      }
    } else {
      detail::CompensatedSum at_lo, at_hi;
      for (std::size_t i = 0; i < window.weights.size(); ++i) {
        const double w = window.weights[i];
        if (w == 0.0) continue;
        const double u = family.node(n, window.k_min + static_cast<std::int64_t>(i));
        const double shifted = strategy == ExtensionStrategy::TranslateAndPad ? u + dom.lo : u;
        if (strategy != ExtensionStrategy::AffineRemap && shifted > dom.hi) {
          at_hi.add(w);
        } else if (strategy == ExtensionStrategy::ConstantPad && u < dom.lo) {
          at_lo.add(w);
        } else {
          add_sample(source_for(strategy, dom, u), w);
        }
      }
      if (at_lo.value() != 0.0) add_sample(dom.lo, at_lo.value());
      if (at_hi.value() != 0.0) add_sample(dom.hi, at_hi.value());
    }
    for (std::size_t c = 0; c < d; ++c) out[c] = acc[c].value();
  };

  Curve result = Curve::unchecked(dom, d, std::move(fn), false, true);
  const bool closed = gamma.closed() && result.closure_defect() < kClosureTolerance;
  return Curve::unchecked(dom, d, [result](double s, std::span<double> out) { result.evaluate(s, out); }, closed,
                          true);
}

std::vector<double> sample_parameters(const Interval& domain, int grid_size) {
  if (grid_size < 2) throw DomainError("grid size must be >= 2");
  std::vector<double> ts(grid_size);
  for (int i = 0; i < grid_size; ++i)
    ts[i] = domain.lo + (domain.hi - domain.lo) * static_cast<double>(i) / (grid_size - 1);
  ts.back() = domain.hi;
  return ts;
}

std::vector<Point> sample(const Curve& gamma, int grid_size) {
  std::vector<Point> out;
  out.reserve(grid_size);
  for (double t : sample_parameters(gamma.domain(), grid_size)) out.push_back(gamma(t));
  return out;
}

double sup_error(const Curve& gamma, const Curve& approx, int grid_size) {
  if (gamma.dimension() != approx.dimension()) throw DomainError("sup_error: dimension mismatch");
  if (gamma.domain().lo != approx.domain().lo || gamma.domain().hi != approx.domain().hi)
    throw DomainError("sup_error: domain mismatch");
  double err = 0.0;
  for (double t : sample_parameters(gamma.domain(), grid_size)) {
    const Point a = gamma(t);
    const Point b = approx(t);
    for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  }
  return err;
}

Curve affine_transform(const Curve& gamma, std::span<const double> matrix, std::span<const double> offset) {
  const std::size_t d = gamma.dimension();
  if (matrix.size() != d * d || offset.size() != d)
    throw DomainError("affine_transform: expected a " + std::to_string(d) + "x" + std::to_string(d) +
                      " matrix and a " + std::to_string(d) + "-vector");
  std::vector<double> a(matrix.begin(), matrix.end());
  std::vector<double> b(offset.begin(), offset.end());
  return Curve::unchecked(
      gamma.domain(), d,
      [gamma, a = std::move(a), b = std::move(b), d](double t, std::span<double> out) {
        const Point p = gamma(t);
        for (std::size_t r = 0; r < d; ++r) {
          double v = b[r];
          for (std::size_t c = 0; c < d; ++c) v += a[r * d + c] * p[c];
          out[r] = v;
        }
      },
      gamma.closed(), gamma.continuous());
}

Curve scale(const Curve& gamma, double factor) {
  const std::size_t d = gamma.dimension();
  std::vector<double> a(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) a[i * d + i] = factor;
  const std::vector<double> b(d, 0.0);
  return affine_transform(gamma, a, b);
}

void write_csv(std::ostream& out, const Curve& gamma, int grid_size) {
  std::ostringstream buf;
  buf << std::setprecision(17) << 't';
  for (std::size_t i = 1; i <= gamma.dimension(); ++i) buf << ",x_" << i;
  buf << '\n';
  for (double t : sample_parameters(gamma.domain(), grid_size)) {
    buf << t;
    for (double v : gamma(t)) buf << ',' << v;
    buf << '\n';
  }
  out << buf.str();
}

std::string to_json(const Curve& gamma, int grid_size) {
  nlohmann::json samples = nlohmann::json::array();
  for (double t : sample_parameters(gamma.domain(), grid_size)) {
    nlohmann::json row = nlohmann::json::array({t});
    for (double v : gamma(t)) row.push_back(v);
    samples.push_back(std::move(row));
  }
  nlohmann::json doc{{"domain", {gamma.domain().lo, gamma.domain().hi}},
                     {"dimension", gamma.dimension()},
                     {"closed", gamma.closed()},
                     {"samples", std::move(samples)}};
  return doc.dump(2);
}

}  // namespace discop
