#pragma once

#include <cmath>
#include <numbers>

// Log probability masses in saddle-point form (Loader 2000), accurate to a
// few ulps where the plain lgamma difference cancels catastrophically.
namespace discop::detail {

/// log(k!) - [(k + 1/2) log k - k + log sqrt(2 pi)]
inline double stirlerr(double n) {
  constexpr double S0 = 1.0 / 12, S1 = 1.0 / 360, S2 = 1.0 / 1260, S3 = 1.0 / 1680, S4 = 1.0 / 1188;
  if (n <= 15.0) return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - 0.5 * std::log(2 * std::numbers::pi);
  const double nn = n * n;
  if (n > 500) return (S0 - S1 / nn) / n;
  if (n > 80) return (S0 - (S1 - S2 / nn) / nn) / n;
  if (n > 35) return (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / n;
  return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n;
}

/// x log(x / m) + m - x, without cancellation for x close to m.
inline double bd0(double x, double m) {
  if (std::abs(x - m) < 0.1 * (x + m)) {
    double v = (x - m) / (x + m);
    double s = (x - m) * v;
    double ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / m) + m - x;
}

/// log P(X = k), X ~ Poisson(lambda), lambda > 0.
inline double log_poisson(double k, double lambda) {
  if (k == 0.0) return -lambda;
  return -stirlerr(k) - bd0(k, lambda) - 0.5 * std::log(2 * std::numbers::pi * k);
}

/// log P(X = k), X ~ Binomial(n, p), with q = 1 - p passed separately.
inline double log_binomial(double k, double n, double p, double q) {
  if (k == 0.0) return p < 0.1 ? -bd0(n, n * q) - n * p : n * std::log(q);
  if (k == n) return q < 0.1 ? -bd0(n, n * p) - n * q : n * std::log(p);
  const double lc = stirlerr(n) - stirlerr(k) - stirlerr(n - k) - bd0(k, n * p) - bd0(n - k, n * q);
  const double lf = std::log(2 * std::numbers::pi) + std::log(k) + std::log1p(-k / n);
  return lc - 0.5 * lf;
}

/// log of C(n + k - 1, k) q^k p^n, through n / (n + k) * P(Binomial(n + k, p) = n).
inline double log_negative_binomial(double k, double n, double p, double q) {
  return std::log(n / (n + k)) + log_binomial(n, n + k, p, q);
}

}  // namespace discop::detail
