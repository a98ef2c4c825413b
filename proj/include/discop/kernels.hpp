#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace discop {

using ScalarFunction = std::function<double(double)>;

double sinc(double t);

/// Fejér kernel F(t) = sinc(t/2)^2 / 2.
double fejer(double t);

/// B-spline of order m via the truncated-power closed form; M_1 is the
/// indicator of the closed interval [-1/2, 1/2]. Throws DomainError for m < 1.
double bspline(int m, double t);

struct CompactSupport {
  double halfwidth;
};

/// |chi(t)| <= constant * |t|^-exponent for |t| >= 1.
struct PolynomialDecay {
  double constant;
  double exponent;
};

using KernelSupport = std::variant<CompactSupport, PolynomialDecay>;

/// Integer translates k in [k_min, k_max] whose neglected complement has
/// total absolute mass at most tail_bound.
struct KernelWindow {
  std::int64_t k_min;
  std::int64_t k_max;
  double tail_bound;

  std::int64_t size() const { return k_max < k_min ? 0 : k_max - k_min + 1; }
};

/// Fills out[i] = chi(x - (k_min + i)); an optional fast path for long windows.
using TranslateFunction = std::function<void(double x, std::int64_t k_min, std::span<double> out)>;

class SamplingKernel {
 public:
  SamplingKernel(std::string name, ScalarFunction fn, KernelSupport support, TranslateFunction translates = {});

  double operator()(double t) const { return fn_(t); }
  /// out[i] = chi(x - (k_min + i)).
  void translates(double x, std::int64_t k_min, std::span<double> out) const;

  const std::string& name() const { return name_; }
  const KernelSupport& support() const { return support_; }
  bool compact() const { return std::holds_alternative<CompactSupport>(support_); }

  /// Window of k for the translates chi(x - k) such that the omitted terms
  /// sum to at most `tolerance` in absolute value. Exact (tail 0) for
  /// compactly supported kernels.
  KernelWindow window(double x, double tolerance) const;

  /// Interval probed by continuity and metadata checks.
  std::pair<double, double> probe_range() const;

 private:
  std::string name_;
  ScalarFunction fn_;
  KernelSupport support_;
  TranslateFunction translates_;
};

SamplingKernel fejer_kernel();
SamplingKernel bspline_kernel(int m);

struct KernelValidationOptions {
  /// (delta, n) pairs at which the tail sum over |k/n - t| >= delta is probed.
  std::vector<std::pair<double, int>> tail_probes{{0.1, 10}, {0.1, 100}, {0.5, 10}, {0.5, 100}};
  /// Absolute running sum above which the series is declared divergent.
  double divergence_ceiling = 1e6;
  /// Windows longer than this are refused.
  std::int64_t max_terms = std::int64_t{1} << 27;
  /// Largest admissible adjacent difference on the continuity grid.
  double continuity_tolerance = 1e-2;
  int continuity_points = 10000;
};

struct KernelValidationReport {
  double max_partition_defect = 0.0;
  /// Upper estimate: truncated absolute sum plus the certified tail bound.
  double abs_sum_sup = 0.0;
  std::map<std::pair<double, int>, double> tail_mass;
  double max_adjacent_jump = 0.0;
  bool support_consistent = true;

  bool passes(double tolerance, double continuity_tolerance = 1e-2) const {
    return max_partition_defect < tolerance && max_adjacent_jump < continuity_tolerance &&
           support_consistent;
  }
};

/// Probes the kernel axioms: partition of unity, absolute summability, the
/// decay of the tail mass, continuity and the support/decay metadata.
KernelValidationReport validate_kernel(const SamplingKernel& kernel, std::span<const double> probe_grid,
                                       double tolerance, const KernelValidationOptions& options = {});

/// Evenly spaced probes on [0, 1]; enough by 1-periodicity of the translate sums.
std::vector<double> standard_probe_grid(int points = 11);

}  // namespace discop
