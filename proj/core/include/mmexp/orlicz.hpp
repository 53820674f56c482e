#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmexp/operators.hpp"
#include "mmexp/target.hpp"

namespace mmexp {

enum class PhiKind { power, exponential, custom };

/// Analytic or sampled verdict on eta(2u) <= M eta(u).
struct Delta2Verdict {
  bool holds = false;
  /// The constant M when `holds`, otherwise the u at which the ratio diverges.
  double constant_or_witness = 0.0;
};

/// A convex phi-function eta: continuous, nondecreasing, eta(0) = 0,
/// eta(u) > 0 for u > 0, convex.
class PhiFunction {
 public:
  /// eta(u) = u^p, p > 1.
  static PhiFunction power(double p);
  /// eta(u) = exp(u^alpha) - 1, alpha > 0.
  static PhiFunction exponential(double alpha);
  static PhiFunction custom(std::string name, std::function<double(double)> eval);

  double operator()(double u) const;

  PhiKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  const std::string& name() const noexcept { return name_; }
  /// Known Delta2 status for the analytic kinds (2^p for powers, fails for exponentials).
  const std::optional<Delta2Verdict>& known_delta2() const noexcept { return delta2_; }

 private:
  PhiFunction(PhiKind kind, double parameter, std::string name)
      : kind_(kind), parameter_(parameter), name_(std::move(name)) {}

  PhiKind kind_;
  double parameter_;
  std::string name_;
  std::function<double(double)> custom_;
  std::optional<Delta2Verdict> delta2_;
};

/// "power:p", "exp:alpha" (or "exponential:alpha").
PhiFunction parse_phi_function(std::string_view spec);

struct ModularValue {
  double value = 0.0;
  bool divergent = false;
  int cells = 0;
};

/// I_eta[g] = int_a^b eta(|g(z)|) dz / z, integrated in u = ln z over `cells`
/// uniform cells with 8-point Gauss-Legendre inside each and splits at
/// `breakpoints` (given in z). Requires cells >= 16 and a < b.
ModularValue modular(const PhiFunction& eta, const std::function<double(double)>& g, double a, double b,
                     int cells, std::span<const double> breakpoints = {});

ModularValue modular(const PhiFunction& eta, const TargetFunction& f, double a, double b, int cells);

/// inf { l > 0 : I_eta[F / l] <= 1 } by bracketing from sup|F| and bisection
/// to relative tolerance `tol`. Returns 0 when F vanishes on the sample grid.
double luxemburg_norm(const PhiFunction& eta, const TargetFunction& f, double a, double b, double tol,
                      int cells = 64);

/// sup over the grid of eta(2u) / eta(u). Holds (with M = that sup) when the
/// ratio varies by less than 10% over the top decade of the grid; otherwise
/// fails with the u of the largest ratio as witness.
Delta2Verdict delta2_check(const PhiFunction& eta, std::span<const double> u_grid);

/// I_eta[lambda (MK_n F - F)] over [a, b], the operator evaluated at every
/// quadrature node of `grid_cells` cells. F is compared in lattice-consistent
/// units (clipped under clip-to-unit).
double modular_error(const PhiFunction& eta, double lambda, const TargetFunction& f,
                     const OperatorConfig& cfg, int grid_cells);

/// Same, for an already constructed operator.
double modular_error(const PhiFunction& eta, double lambda, const MaxMinOperator& op, int grid_cells);

struct ModularRow {
  std::string eta;
  double lambda = 0.0;
  int n = 0;
  double modular_error = 0.0;
};

/// Header `eta,lambda,n,modular_error`.
std::string modular_rows_csv(std::span<const ModularRow> rows);

}  // namespace mmexp
