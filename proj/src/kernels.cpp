#include "discop/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discop/error.hpp"
#include "summation.hpp"

namespace discop {

double sinc(double t) {
  if (t == 0.0) return 1.0;
  const double x = std::numbers::pi * t;
  return std::sin(x) / x;
}

double fejer(double t) {
  const double s = sinc(0.5 * t);
  return 0.5 * s * s;
}

double bspline(int m, double t) {
  if (m < 1) throw DomainError("bspline: order must be >= 1, got " + std::to_string(m));
  // Evaluating at |t| makes the result exactly even.
  const double a = std::abs(t);
  const double half = 0.5 * m;
  if (m == 1) return a <= 0.5 ? 1.0 : 0.0;
  if (a >= half) return 0.0;

  double sum = 0.0;
  double binom = 1.0;  // C(m, j)
  for (int j = 0; j <= m; ++j) {
    const double base = half + a - j;
    if (base <= 0.0) break;
    const double term = binom * std::pow(base, m - 1);
    sum += (j % 2 == 0) ? term : -term;
    binom = binom * (m - j) / (j + 1);
  }
  double factorial = 1.0;
  for (int i = 2; i < m; ++i) factorial *= i;
  return std::max(sum / factorial, 0.0);
}

SamplingKernel::SamplingKernel(std::string name, ScalarFunction fn, KernelSupport support,
                               TranslateFunction translates)
    : name_(std::move(name)), fn_(std::move(fn)), support_(support), translates_(std::move(translates)) {
  if (!fn_) throw DomainError("SamplingKernel: empty function");
  if (const auto* c = std::get_if<CompactSupport>(&support_)) {
    if (!(c->halfwidth > 0.0) || !std::isfinite(c->halfwidth))
      throw DomainError("SamplingKernel: compact support halfwidth must be positive and finite");
  } else {
    const auto& d = std::get<PolynomialDecay>(support_);
    if (!(d.constant > 0.0) || !(d.exponent >= 2.0) || !std::isfinite(d.constant) ||
        !std::isfinite(d.exponent))
      throw DomainError("SamplingKernel: decay needs constant > 0 and exponent >= 2");
  }
}

void SamplingKernel::translates(double x, std::int64_t k_min, std::span<double> out) const {
  if (translates_) {
    translates_(x, k_min, out);
    return;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn_(x - static_cast<double>(k_min + static_cast<std::int64_t>(i)));
}

namespace {

// Bound on sum_{|x-k| > R} C |x-k|^-p, both sides, for R >= 1.
double decay_tail(const PolynomialDecay& d, double radius) {
  const double p = d.exponent;
  return 2.0 * d.constant * (std::pow(radius, -p) + std::pow(radius, 1.0 - p) / (p - 1.0));
}

}  // namespace

KernelWindow SamplingKernel::window(double x, double tolerance) const {
  if (!(tolerance > 0.0)) throw DomainError("kernel window: tolerance must be positive");
  if (const auto* c = std::get_if<CompactSupport>(&support_)) {
    return {static_cast<std::int64_t>(std::ceil(x - c->halfwidth)),
            static_cast<std::int64_t>(std::floor(x + c->halfwidth)), 0.0};
  }
  const auto& d = std::get<PolynomialDecay>(support_);
  double hi = 1.0;
  while (decay_tail(d, hi) > tolerance) {
    hi *= 2.0;
    if (hi > 1e15) throw TruncationError("kernel window: tolerance unreachable for " + name_);
  }
  double lo = std::max(1.0, 0.5 * hi);
  if (decay_tail(d, lo) <= tolerance) hi = lo;
  for (int i = 0; i < 60 && hi - lo > 0.5; ++i) {
    const double mid = 0.5 * (lo + hi);
    (decay_tail(d, mid) > tolerance ? lo : hi) = mid;
  }
  return {static_cast<std::int64_t>(std::ceil(x - hi)), static_cast<std::int64_t>(std::floor(x + hi)),
          decay_tail(d, hi)};
}

std::pair<double, double> SamplingKernel::probe_range() const {
  if (const auto* c = std::get_if<CompactSupport>(&support_)) return {-c->halfwidth, c->halfwidth};
  return {-8.0, 8.0};
}

namespace {

// sin^2(pi (x - k) / 2) only depends on the parity of k, so one sine and one
// cosine serve the whole window.
void fejer_translates(double x, std::int64_t k_min, std::span<double> out) {
  constexpr double pi = std::numbers::pi;
  const double r = x - 2.0 * std::round(0.5 * x);
  const double s = std::sin(0.5 * pi * r), c = std::cos(0.5 * pi * r);
  const double even = s * s, odd = c * c;
  constexpr double scale = 2.0 / (pi * pi);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t k = k_min + static_cast<std::int64_t>(i);
    const double d = x - static_cast<double>(k);
    if (d == 0.0) {
      out[i] = 0.5;
    } else {
      out[i] = ((k & 1) == 0 ? even : odd) * scale / (d * d);
    }
  }
}

}  // namespace

SamplingKernel fejer_kernel() {
  return SamplingKernel("fejer", &fejer, PolynomialDecay{2.0 / (std::numbers::pi * std::numbers::pi), 2.0},
                        &fejer_translates);
}

SamplingKernel bspline_kernel(int m) {
  if (m < 1) throw DomainError("bspline_kernel: order must be >= 1, got " + std::to_string(m));
  return SamplingKernel("bspline" + std::to_string(m), [m](double t) { return bspline(m, t); },
                        CompactSupport{0.5 * m});
}

std::vector<double> standard_probe_grid(int points) {
  if (points < 2) throw DomainError("standard_probe_grid: need at least 2 points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
  return grid;
}

namespace {

// Visits chi(x - k) for k_min <= k <= k_max in fixed-size chunks.
template <class Visit>
void for_each_translate(const SamplingKernel& kernel, double x, std::int64_t k_min, std::int64_t k_max, Visit visit) {
  constexpr std::int64_t kChunk = 4096;
  std::vector<double> buf(static_cast<std::size_t>(std::clamp<std::int64_t>(k_max - k_min + 1, 0, kChunk)));
  for (std::int64_t k0 = k_min; k0 <= k_max; k0 += kChunk) {
    const auto len = static_cast<std::size_t>(std::min(kChunk, k_max - k0 + 1));
    const std::span<double> out(buf.data(), len);
    kernel.translates(x, k0, out);
    for (std::size_t i = 0; i < len; ++i) visit(k0 + static_cast<std::int64_t>(i), out[i]);
  }
}

struct TranslateSums {
  double signed_sum;
  double abs_sum;
  double tail_bound;
};

TranslateSums translate_sums(const SamplingKernel& kernel, double x, double tolerance,
                             const KernelValidationOptions& options) {
  const KernelWindow w = kernel.window(x, tolerance);
  if (w.size() > options.max_terms)
    throw TruncationError("validate_kernel: window of " + std::to_string(w.size()) +
                          " terms exceeds the configured maximum");
  detail::CompensatedSum sum;
  detail::CompensatedSum abs_sum;
  for_each_translate(kernel, x, w.k_min, w.k_max, [&](std::int64_t, double v) {
    if (!std::isfinite(v)) throw KernelError("validate_kernel: non-finite kernel value");
    sum.add(v);
    abs_sum.add(std::abs(v));
    if (abs_sum.value() > options.divergence_ceiling)
      throw KernelError("validate_kernel: absolute translate sum of " + kernel.name() +
                        " exceeds the divergence ceiling");
  });
  return {sum.value(), abs_sum.value(), w.tail_bound};
}

}  // namespace

KernelValidationReport validate_kernel(const SamplingKernel& kernel, std::span<const double> probe_grid,
                                       double tolerance, const KernelValidationOptions& options) {
  if (probe_grid.empty()) throw DomainError("validate_kernel: empty probe grid");
  if (!(tolerance > 0.0)) throw DomainError("validate_kernel: tolerance must be positive");

  KernelValidationReport report;
  for (double t : probe_grid) {
    const TranslateSums s = translate_sums(kernel, t, tolerance, options);
    report.max_partition_defect = std::max(report.max_partition_defect, std::abs(s.signed_sum - 1.0));
    report.abs_sum_sup = std::max(report.abs_sum_sup, s.abs_sum + s.tail_bound);
  }

  for (const auto& probe : options.tail_probes) {
    const auto [delta, n] = probe;
    if (!(delta > 0.0) || n < 1) throw DomainError("validate_kernel: tail probes need delta > 0, n >= 1");
    double sup = 0.0;
    for (double t : probe_grid) {
      const double x = n * t;
      const KernelWindow w = kernel.window(x, tolerance);
      if (w.size() > options.max_terms) throw TruncationError("validate_kernel: tail window too large");
      detail::CompensatedSum tail;
      for_each_translate(kernel, x, w.k_min, w.k_max, [&](std::int64_t k, double v) {
        if (std::abs(static_cast<double>(k) / n - t) >= delta) tail.add(std::abs(v));
      });
      sup = std::max(sup, tail.value() + w.tail_bound);
    }
    report.tail_mass[probe] = sup;
  }

  const auto [lo, hi] = kernel.probe_range();
  const int points = std::max(options.continuity_points, 2);
  double prev = kernel(lo);
  for (int i = 1; i < points; ++i) {
    const double v = kernel(lo + (hi - lo) * i / (points - 1));
    report.max_adjacent_jump = std::max(report.max_adjacent_jump, std::abs(v - prev));
    prev = v;
  }

  if (const auto* c = std::get_if<CompactSupport>(&kernel.support())) {
    for (int i = 1; i <= 64; ++i) {
      const double t = c->halfwidth + 3.0 * i / 64.0;
      if (kernel(t) != 0.0 || kernel(-t) != 0.0) report.support_consistent = false;
    }
  } else {
    const auto& d = std::get<PolynomialDecay>(kernel.support());
    for (int i = 0; i <= 512; ++i) {
      const double t = 1.0 + 49.0 * i / 512.0;
      const double bound = d.constant * std::pow(t, -d.exponent) * (1.0 + 1e-12);
      if (std::abs(kernel(t)) > bound || std::abs(kernel(-t)) > bound) report.support_consistent = false;
    }
  }
  return report;
}

}  // namespace discop
