#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discop/kernels.hpp"

namespace discop {

struct Interval {
  double lo;
  double hi;

  bool contains(double t) const { return t >= lo && t <= hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class FamilyKind { GeneralizedSampling, SzaszMirakjan, Baskakov, Bernstein };

/// Index set J of the node sequence: all integers, naturals, or {0, ..., n}.
enum class IndexSet { Integers, Naturals, UpToN };

enum class TruncationPolicy { Exact, TailBounded };

struct TruncationCertificate {
  std::int64_t k_min;
  std::int64_t k_max;
  /// Upper bound on sum |K_{n,k}(t)| over the indices left out.
  double tail_bound;
};

/// Basis values K_{n,k}(t) for k = k_min .. k_min + weights.size() - 1.
struct BasisWindow {
  std::int64_t k_min = 0;
  std::vector<double> weights;
  double tail_bound = 0.0;

  std::int64_t k_max() const { return k_min + static_cast<std::int64_t>(weights.size()) - 1; }
  TruncationCertificate certificate() const { return {k_min, k_max(), tail_bound}; }
};

struct EvalOptions {
  /// Budget for the neglected basis mass; the family default when unset.
  std::optional<double> tolerance;
  /// Windows longer than this raise TruncationError.
  std::int64_t max_terms = std::int64_t{1} << 24;
};

/// A discrete operator S_n f(t) = sum_k f(nu_{n,k}) K_{n,k}(t) with nodes
/// nu_{n,k} = k/n. Immutable; safe to share across threads.
class OperatorFamily {
 public:
  FamilyKind kind() const { return kind_; }
  std::string name() const;
  Interval domain() const;
  IndexSet index_set() const;
  TruncationPolicy truncation() const;
  double default_tolerance() const;
  const std::optional<SamplingKernel>& kernel() const { return kernel_; }

  double node(int n, std::int64_t k) const;
  /// Single basis value, computed in log space.
  double basis(int n, std::int64_t k, double t) const;
  /// (lambda_n, Lambda_n) with lambda_n < nu_{n,k+1} - nu_{n,k} <= Lambda_n.
  std::pair<double, double> mesh_bounds(int n) const;

  /// All basis values needed at (n, t), with a certified tail.
  BasisWindow basis_window(int n, double t, const EvalOptions& options = {}) const;

  /// Throws DomainError unless n >= 1 and t lies in the domain.
  void check_arguments(int n, double t) const;

 private:
  friend OperatorFamily make_generalized_sampling(const SamplingKernel&, double);
  friend OperatorFamily make_szasz_mirakjan();
  friend OperatorFamily make_baskakov();
  friend OperatorFamily make_bernstein();

  explicit OperatorFamily(FamilyKind kind, std::optional<SamplingKernel> kernel = std::nullopt)
      : kind_(kind), kernel_(std::move(kernel)) {}

  FamilyKind kind_;
  std::optional<SamplingKernel> kernel_;
};

/// Generalized sampling operator with kernel chi: I = R, J = Z, K_{n,k}(t) = chi(nt - k).
/// The kernel is validated first; a KernelError is raised if it fails.
/// `tolerance` of 0 selects the family default.
OperatorFamily make_generalized_sampling(const SamplingKernel& kernel, double tolerance = 0.0);
OperatorFamily make_szasz_mirakjan();
OperatorFamily make_baskakov();
OperatorFamily make_bernstein();

struct Evaluation {
  double value;
  TruncationCertificate certificate;
};

Evaluation evaluate(const OperatorFamily& family, const ScalarFunction& f, int n, double t,
                    const EvalOptions& options = {});

/// Sum of |K_{n,k}(t)| over the nodes with |nu_{n,k} - t| >= delta, from the
/// truncated window (the certificate tail is not added).
double tail_mass(const OperatorFamily& family, int n, double t, double delta, const EvalOptions& options = {});

}  // namespace discop
