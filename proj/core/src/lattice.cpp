#include "mmexp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "mmexp/error.hpp"

namespace mmexp {
namespace {

constexpr double kSnap = 1e-9;
constexpr double kDomainSlack = 1e-12;

std::int64_t snapped_ceil(double x, double tol) {
  const double r = std::round(x);
  if (std::abs(x - r) <= tol) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

std::int64_t snapped_floor(double x, double tol) {
  const double r = std::round(x);
  if (std::abs(x - r) <= tol) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::floor(x));
}

}  // namespace

double IndexWindow::node(std::int64_t k) const {
  return std::clamp(std::exp(static_cast<double>(k) / n), a, b);
}

IndexWindow index_window(double a, double b, int n) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
    std::ostringstream msg;
    msg << "interval must satisfy 0 < a < b, got [" << a << ", " << b << "]";
    throw ConfigError(msg.str());
  }
  if (n < 1) throw ConfigError("sample density n must be >= 1");
  IndexWindow w;
  w.a = a;
  w.b = b;
  w.n = n;
  const double tol = kSnap * n;
  w.k_lo = snapped_ceil(n * std::log(a), tol);
  w.k_hi = snapped_floor(n * std::log(b), tol);
  if (w.k_lo > w.k_hi) {
    std::ostringstream msg;
    msg << "empty index window for n = " << n << " on [" << a << ", " << b << "]: ceil(n ln a) = "
        << w.k_lo << " > floor(n ln b) = " << w.k_hi;
    throw EmptyWindow(msg.str());
  }
  return w;
}

WeightVector weights(const LogKernel& kernel, const IndexWindow& window, double z) {
  if (!(z >= window.a * (1.0 - kDomainSlack) && z <= window.b * (1.0 + kDomainSlack))) {
    std::ostringstream msg;
    msg << "evaluation point " << z << " outside [" << window.a << ", " << window.b << "]";
    throw DomainError(msg.str());
  }
  WeightVector out;
  out.window = window;
  out.z = z;
  out.weights.resize(window.size());
  const double s0 = window.n * std::log(z);
  double denom = 0.0;
  for (std::size_t i = 0; i < out.weights.size(); ++i) {
    const double psi = kernel(s0 - static_cast<double>(window.k_lo + static_cast<std::int64_t>(i)));
    out.weights[i] = psi;
    denom = std::max(denom, psi);
  }
  if (denom < kernel.value_at_e() - 1e-12) {
    std::ostringstream msg;
    msg << "normalising maximum " << denom << " below Psi(e) = " << kernel.value_at_e()
        << " at z = " << z;
    throw DegenerateDenominator(msg.str());
  }
  out.denominator = denom;
  for (double& w : out.weights) w /= denom;
  return out;
}

std::vector<std::int64_t> gamma_window(const IndexWindow& window, double z, double gamma) {
  std::vector<std::int64_t> out;
  const double lz = std::log(z);
  // Absorb the rounding of ln z so that offsets equal to gamma are included.
  const double reach = gamma + 1e-12;
  for (std::int64_t k = window.k_lo; k <= window.k_hi; ++k) {
    if (std::abs(static_cast<double>(k) / window.n - lz) <= reach) out.push_back(k);
  }
  return out;
}

double maxmin_combine(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw ConfigError("maxmin_combine: " + std::to_string(values.size()) + " values but " +
                      std::to_string(weights.size()) + " weights");
  }
  if (values.empty()) return 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    best = std::max(best, std::min(values[i], weights[i]));
  }
  return best;
}

double maxmin_combine(std::span<const double> values, const WeightVector& weights) {
  return maxmin_combine(values, std::span<const double>(weights.weights));
}

double join(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return *std::max_element(values.begin(), values.end());
}

double meet(std::span<const double> values) {
  if (values.empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(values.begin(), values.end());
}

}  // namespace mmexp
