#include "mmexp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mmexp/error.hpp"

namespace mmexp {

std::string_view to_string(QuadratureRule rule) {
  return rule == QuadratureRule::gauss_legendre ? "gauss-legendre" : "composite-simpson";
}

QuadratureRule parse_quadrature_rule(std::string_view name) {
  if (name == "gauss-legendre" || name == "gl") return QuadratureRule::gauss_legendre;
  if (name == "composite-simpson" || name == "simpson") return QuadratureRule::composite_simpson;
  throw ConfigError("unknown quadrature rule '" + std::string(name) + "'");
}

GaussLegendre::GaussLegendre(int points) {
  if (points < 1) throw ConfigError("Gauss-Legendre order must be >= 1");
  const int n = points;
  nodes_.assign(n, 0.0);
  weights_.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1);
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    weights_[n - 1 - i] = weights_[i];
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double lo, double hi) const {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
  return sum * half;
}

namespace {

int checked_points(const QuadratureSpec& spec) {
  if (spec.points < 2) throw ConfigError("quadrature needs at least 2 points");
  return spec.points;
}

double simpson(const std::function<double(double)>& f, double lo, double hi, int intervals) {
  const int m = intervals + (intervals % 2);
  const double h = (hi - lo) / m;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < m; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

}  // namespace

Integrator::Integrator(QuadratureSpec spec) : spec_(spec), gauss_(checked_points(spec)) {}

double Integrator::operator()(const std::function<double(double)>& f, double lo, double hi) const {
  if (hi == lo) return 0.0;
  if (spec_.rule == QuadratureRule::gauss_legendre) return gauss_.integrate(f, lo, hi);
  return simpson(f, lo, hi, spec_.points);
}

double Integrator::piecewise(const std::function<double(double)>& f, double lo, double hi,
                             std::span<const double> breakpoints) const {
  double total = 0.0;
  double left = lo;
  std::vector<double> cuts;
  for (double c : breakpoints) {
    if (c > lo && c < hi) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts) {
    total += (*this)(f, left, c);
    left = c;
  }
  total += (*this)(f, left, hi);
  return total;
}

}  // namespace mmexp
