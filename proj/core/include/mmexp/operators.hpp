#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mmexp/kernel.hpp"
#include "mmexp/lattice.hpp"
#include "mmexp/quadrature.hpp"
#include "mmexp/target.hpp"

namespace mmexp {

/// What the Kantorovich operator does with the top cell [k_hi/n, (k_hi+1)/n]
/// when it reaches past ln b.
enum class Extension {
  clamp_at_b,     ///< F(e^u) := F(b) for u > ln b
  truncate_cell,  ///< mean over [k_hi/n, ln b] only
};

/// How values outside [0, 1] are brought into the lattice [0, 1].
enum class RangePolicy {
  assert_unit_range,  ///< throw RangeViolation
  clip_to_unit,       ///< clamp into [0, 1]; the comparison target is clamped too
  affine_rescale,     ///< map the declared range onto [0, 1], map results back
};

enum class OperatorKind { gm, mk };

std::string_view to_string(Extension e);
std::string_view to_string(RangePolicy p);
std::string_view to_string(OperatorKind k);
Extension parse_extension(std::string_view name);
RangePolicy parse_range_policy(std::string_view name);
OperatorKind parse_operator_kind(std::string_view name);

struct OperatorConfig {
  LogKernel kernel;
  double a = 1.0;
  double b = 2.0;
  int n = 1;
  QuadratureSpec quadrature{};
  Extension extension = Extension::clamp_at_b;
  RangePolicy range_policy = RangePolicy::clip_to_unit;

  /// Throws ConfigError / EmptyWindow.
  IndexWindow window() const { return index_window(a, b, n); }
};

/// F value -> lattice value in [0, 1] under the policy.
double to_unit(RangePolicy policy, const TargetFunction& f, double value);
/// Lattice value -> F units (identity except for affine-rescale).
double from_unit(RangePolicy policy, const TargetFunction& f, double unit);
/// The value an operator output should be compared against.
double comparison_value(RangePolicy policy, double value);

/// Max-min exponential sampling operator bound to one target and configuration.
///
/// Construction samples F at the nodes e^{k/n} (gm) or computes the cell
/// means n int_{k/n}^{(k+1)/n} F(e^u) du (mk) once; evaluation at z is then
///   max_k min(c_k, Psi(n ln z - k) / max_j Psi(n ln z - j)).
/// Instances are immutable and can be evaluated concurrently.
class MaxMinOperator {
 public:
  MaxMinOperator(TargetFunction f, OperatorConfig cfg, OperatorKind kind);

  /// Operator value at z in F units. Throws DomainError for z outside [a, b].
  double operator()(double z) const;
  /// Operator value at z in the lattice [0, 1].
  double unit_value(double z) const;

  const IndexWindow& window() const noexcept { return window_; }
  OperatorKind kind() const noexcept { return kind_; }
  const OperatorConfig& config() const noexcept { return cfg_; }
  const TargetFunction& target() const noexcept { return f_; }
  /// Lattice-space samples or cell means; entry i belongs to k = k_lo + i.
  std::span<const double> coefficients() const noexcept { return coefficients_; }

 private:
  TargetFunction f_;
  OperatorConfig cfg_;
  OperatorKind kind_;
  IndexWindow window_;
  std::vector<double> coefficients_;
};

/// max_k min(F(e^{k/n}), w_k(z)).
double gm_apply(const TargetFunction& f, const OperatorConfig& cfg, double z);

/// n int_{k/n}^{(k+1)/n} F(e^u) du in lattice units, using cfg.quadrature,
/// splitting at F's breakpoints, and honouring cfg.extension past ln b.
double cell_mean(const TargetFunction& f, const OperatorConfig& cfg, std::int64_t k);

/// max_k min(cell_mean(k), w_k(z)).
double mk_apply(const TargetFunction& f, const OperatorConfig& cfg, double z);

/// Elementwise evaluation; failures are rethrown as GridPointError carrying the index.
std::vector<double> apply_on_grid(const TargetFunction& f, const OperatorConfig& cfg,
                                  std::span<const double> grid, OperatorKind kind);

}  // namespace mmexp
