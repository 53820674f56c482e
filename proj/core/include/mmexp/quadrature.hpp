#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace mmexp {

enum class QuadratureRule { gauss_legendre, composite_simpson };

std::string_view to_string(QuadratureRule rule);
QuadratureRule parse_quadrature_rule(std::string_view name);

/// `points` is the Gauss-Legendre order, or the number of Simpson
/// subintervals (rounded up to even). Must be >= 2.
struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::gauss_legendre;
  int points = 8;
};

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the three-term recurrence.
class GaussLegendre {
 public:
  explicit GaussLegendre(int points);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  double integrate(const std::function<double(double)>& f, double lo, double hi) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// A reusable integrator for one QuadratureSpec.
class Integrator {
 public:
  explicit Integrator(QuadratureSpec spec);

  const QuadratureSpec& spec() const noexcept { return spec_; }

  double operator()(const std::function<double(double)>& f, double lo, double hi) const;

  /// Splits [lo, hi] at every breakpoint strictly inside it and sums the pieces.
  double piecewise(const std::function<double(double)>& f, double lo, double hi,
                   std::span<const double> breakpoints) const;

 private:
  QuadratureSpec spec_;
  GaussLegendre gauss_;
};

}  // namespace mmexp
