#include "discop/operators.hpp"

#include <algorithm>
#include <cmath>

#include "discop/error.hpp"
#include "pmf.hpp"
#include "summation.hpp"

namespace discop {

OperatorFamily make_generalized_sampling(const SamplingKernel& kernel, double tolerance) {
  OperatorFamily family(FamilyKind::GeneralizedSampling, kernel);
  const double tol = tolerance > 0.0 ? tolerance : family.default_tolerance();
  KernelValidationOptions options;
  options.tail_probes.clear();
  const auto grid = standard_probe_grid();
  const KernelValidationReport report = validate_kernel(kernel, grid, tol, options);
  if (!report.passes(tol, options.continuity_tolerance)) {
    throw KernelError("make_generalized_sampling: kernel " + kernel.name() +
                      " fails validation (partition defect " + std::to_string(report.max_partition_defect) +
                      ", max jump " + std::to_string(report.max_adjacent_jump) + ", metadata " +
                      (report.support_consistent ? "ok" : "inconsistent") + ")");
  }
  return family;
}

OperatorFamily make_szasz_mirakjan() { return OperatorFamily(FamilyKind::SzaszMirakjan); }
OperatorFamily make_baskakov() { return OperatorFamily(FamilyKind::Baskakov); }
OperatorFamily make_bernstein() { return OperatorFamily(FamilyKind::Bernstein); }

std::string OperatorFamily::name() const {
  switch (kind_) {
    case FamilyKind::GeneralizedSampling:
      return "sampling-" + kernel_->name();
    case FamilyKind::SzaszMirakjan:
      return "szasz";
    case FamilyKind::Baskakov:
      return "baskakov";
    case FamilyKind::Bernstein:
      return "bernstein";
  }
  return {};
}

Interval OperatorFamily::domain() const {
  switch (kind_) {
    case FamilyKind::GeneralizedSampling:
      return {-kInf, kInf};
    case FamilyKind::SzaszMirakjan:
    case FamilyKind::Baskakov:
      return {0.0, kInf};
    case FamilyKind::Bernstein:
      return {0.0, 1.0};
  }
  return {0.0, 0.0};
}

IndexSet OperatorFamily::index_set() const {
  switch (kind_) {
    case FamilyKind::GeneralizedSampling:
      return IndexSet::Integers;
    case FamilyKind::SzaszMirakjan:
    case FamilyKind::Baskakov:
      return IndexSet::Naturals;
    case FamilyKind::Bernstein:
      return IndexSet::UpToN;
  }
  return IndexSet::Integers;
}

TruncationPolicy OperatorFamily::truncation() const {
  if (kind_ == FamilyKind::Bernstein) return TruncationPolicy::Exact;
  if (kind_ == FamilyKind::GeneralizedSampling && kernel_->compact()) return TruncationPolicy::Exact;
  return TruncationPolicy::TailBounded;
}

double OperatorFamily::default_tolerance() const {
  if (kind_ == FamilyKind::GeneralizedSampling && !kernel_->compact()) return 1e-6;
  return 1e-10;
}

double OperatorFamily::node(int n, std::int64_t k) const { return static_cast<double>(k) / n; }

std::pair<double, double> OperatorFamily::mesh_bounds(int n) const {
  if (n < 1) throw DomainError("mesh_bounds: n must be >= 1");
  return {0.999 / n, 1.0 / n};
}

void OperatorFamily::check_arguments(int n, double t) const {
  if (n < 1) throw DomainError(name() + ": n must be a positive integer, got " + std::to_string(n));
  if (!std::isfinite(t) || !domain().contains(t))
    throw DomainError(name() + ": t = " + std::to_string(t) + " lies outside the operator domain");
}

double OperatorFamily::basis(int n, std::int64_t k, double t) const {
  check_arguments(n, t);
  const double kd = static_cast<double>(k);
  switch (kind_) {
    case FamilyKind::GeneralizedSampling:
      return (*kernel_)(n * t - kd);
    case FamilyKind::SzaszMirakjan: {
      if (k < 0) return 0.0;
      if (t == 0.0) return k == 0 ? 1.0 : 0.0;
      return std::exp(detail::log_poisson(kd, n * t));
    }
    case FamilyKind::Baskakov: {
      if (k < 0) return 0.0;
      if (t == 0.0) return k == 0 ? 1.0 : 0.0;
      return std::exp(detail::log_negative_binomial(kd, n, 1.0 / (1.0 + t), t / (1.0 + t)));
    }
    case FamilyKind::Bernstein: {
      if (k < 0 || k > n) return 0.0;
      if (t == 0.0) return k == 0 ? 1.0 : 0.0;
      if (t == 1.0) return k == n ? 1.0 : 0.0;
      return std::exp(detail::log_binomial(kd, n, t, 1.0 - t));
    }
  }
  return 0.0;
}

namespace {

void check_window_size(std::int64_t size, const EvalOptions& options) {
  if (size > options.max_terms)
    throw TruncationError("truncation window of " + std::to_string(size) +
                          " terms exceeds the configured maximum of " + std::to_string(options.max_terms));
}

// Term ratios of a unimodal weight sequence on the naturals.
struct RatioModel {
  std::int64_t mode;
  double log_mode_weight;
  std::int64_t k_max;  // last admissible index; -1 for unbounded
  bool exact;          // sum every admissible index
};

// Walks outward from the mode with the ratio recurrences. Away from the mode
// the ratios are < 1 and monotone, so each side's remainder is bounded by the
// geometric series w_k r / (1 - r).
template <class Up, class Down>
BasisWindow walk_from_mode(const RatioModel& model, Up up, Down down, double tolerance,
                           const EvalOptions& options) {
  const double side_budget = 0.5 * tolerance;

  std::vector<double> upper{std::exp(model.log_mode_weight)};
  double tail_up = 0.0;
  for (std::int64_t k = model.mode;; ++k) {
    if (model.k_max >= 0 && k >= model.k_max) break;
    const double w = upper.back();
    const double r = up(k);
    if (!model.exact && r < 1.0 && w * r / (1.0 - r) <= side_budget) {
      tail_up = w * r / (1.0 - r);
      break;
    }
    upper.push_back(w * r);
    check_window_size(static_cast<std::int64_t>(upper.size()), options);
  }

  std::vector<double> lower;  // weights for mode-1, mode-2, ...
  double tail_down = 0.0;
  double w = upper.front();
  for (std::int64_t k = model.mode; k > 0; --k) {
    const double r = down(k);
    if (!model.exact && r < 1.0 && w * r / (1.0 - r) <= side_budget) {
      tail_down = w * r / (1.0 - r);
      break;
    }
    w *= r;
    lower.push_back(w);
    check_window_size(static_cast<std::int64_t>(upper.size() + lower.size()), options);
  }

  BasisWindow window;
  window.k_min = model.mode - static_cast<std::int64_t>(lower.size());
  window.weights.reserve(lower.size() + upper.size());
  window.weights.assign(lower.rbegin(), lower.rend());
  window.weights.insert(window.weights.end(), upper.begin(), upper.end());
  window.tail_bound = tail_up + tail_down;
  return window;
}

BasisWindow point_mass(std::int64_t k) { return BasisWindow{k, {1.0}, 0.0}; }

}  // namespace

BasisWindow OperatorFamily::basis_window(int n, double t, const EvalOptions& options) const {
  check_arguments(n, t);
  const double tolerance = options.tolerance.value_or(default_tolerance());
  if (!(tolerance > 0.0)) throw DomainError(name() + ": tolerance must be positive");

  switch (kind_) {
    case FamilyKind::GeneralizedSampling: {
      const double x = n * t;
      const KernelWindow kw = kernel_->window(x, tolerance);
      check_window_size(kw.size(), options);
      BasisWindow window;
      window.k_min = kw.k_min;
      window.tail_bound = kw.tail_bound;
      window.weights.resize(static_cast<std::size_t>(std::max<std::int64_t>(kw.size(), 0)));
      kernel_->translates(x, kw.k_min, window.weights);
      return window;
    }
    case FamilyKind::SzaszMirakjan: {
      if (t == 0.0) return point_mass(0);
      const double x = n * t;
      const auto mode = static_cast<std::int64_t>(std::floor(x));
      const double md = static_cast<double>(mode);
      const RatioModel model{mode, detail::log_poisson(md, x), -1, false};
      return walk_from_mode(
          model, [x](std::int64_t k) { return x / static_cast<double>(k + 1); },
          [x](std::int64_t k) { return static_cast<double>(k) / x; }, tolerance, options);
    }
    case FamilyKind::Baskakov: {
      if (t == 0.0) return point_mass(0);
      const double q = t / (1.0 + t);
      const double nd = n;
      const auto mode = static_cast<std::int64_t>(std::floor((nd - 1.0) * t));
      const double md = static_cast<double>(mode);
      const double log_mode = detail::log_negative_binomial(md, nd, 1.0 / (1.0 + t), q);
      const RatioModel model{mode, log_mode, -1, false};
      return walk_from_mode(
          model, [nd, q](std::int64_t k) { return (nd + static_cast<double>(k)) / static_cast<double>(k + 1) * q; },
          [nd, q](std::int64_t k) {
            const double kd = static_cast<double>(k);
            return kd / ((nd + kd - 1.0) * q);
          },
          tolerance, options);
    }
    case FamilyKind::Bernstein: {
      if (t == 0.0) return point_mass(0);
      if (t == 1.0) return point_mass(n);
      check_window_size(n + 1, options);
      const double nd = n;
      const double odds = t / (1.0 - t);
      const auto mode = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor((nd + 1.0) * t)), 0, n);
      const double md = static_cast<double>(mode);
      const double log_mode = detail::log_binomial(md, nd, t, 1.0 - t);
      const RatioModel model{mode, log_mode, n, true};
      BasisWindow window = walk_from_mode(
          model, [nd, odds](std::int64_t k) { return (nd - static_cast<double>(k)) / static_cast<double>(k + 1) * odds; },
          [nd, odds](std::int64_t k) {
            const double kd = static_cast<double>(k);
            return kd / ((nd - kd + 1.0) * odds);
          },
          tolerance, options);
      window.tail_bound = 0.0;
      return window;
    }
  }
  return {};
}

Evaluation evaluate(const OperatorFamily& family, const ScalarFunction& f, int n, double t,
                    const EvalOptions& options) {
  const BasisWindow window = family.basis_window(n, t, options);
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < window.weights.size(); ++i) {
    const double w = window.weights[i];
    if (w == 0.0) continue;
    const std::int64_t k = window.k_min + static_cast<std::int64_t>(i);
    const double sample = f(family.node(n, k));
    if (!std::isfinite(sample))
      throw NonFiniteSample(family.name() + ": non-finite sample at node " + std::to_string(family.node(n, k)));
    sum.add(sample * w);
  }
  return {sum.value(), window.certificate()};
}

double tail_mass(const OperatorFamily& family, int n, double t, double delta, const EvalOptions& options) {
  if (!(delta > 0.0)) throw DomainError("tail_mass: delta must be positive");
  const BasisWindow window = family.basis_window(n, t, options);
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < window.weights.size(); ++i) {
    const std::int64_t k = window.k_min + static_cast<std::int64_t>(i);
    if (std::abs(family.node(n, k) - t) >= delta) sum.add(std::abs(window.weights[i]));
  }
  return sum.value();
}

}  // namespace discop
