#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mmexp/kernel.hpp"

namespace mmexp {

/// Sample indices k = ceil(n ln a) .. floor(n ln b) of the exponential nodes e^{k/n}.
struct IndexWindow {
  double a = 1.0;
  double b = 1.0;
  int n = 1;
  std::int64_t k_lo = 0;
  std::int64_t k_hi = -1;

  std::size_t size() const noexcept { return k_hi < k_lo ? 0 : static_cast<std::size_t>(k_hi - k_lo + 1); }
  bool contains(std::int64_t k) const noexcept { return k >= k_lo && k <= k_hi; }
  std::size_t offset(std::int64_t k) const noexcept { return static_cast<std::size_t>(k - k_lo); }
  /// e^{k/n}, clamped into [a, b] against last-bit rounding.
  double node(std::int64_t k) const;
};

/// Ceil/floor of n ln a, n ln b with values within 1e-9 n of an integer snapped
/// to that integer. Throws ConfigError unless 0 < a < b and n >= 1, and
/// EmptyWindow when the window has no index.
IndexWindow index_window(double a, double b, int n);

/// Normalised kernel weights Psi(e^{-k} z^n) / max_j Psi(e^{-j} z^n) over a window.
struct WeightVector {
  IndexWindow window;
  double z = 1.0;
  std::vector<double> weights;  // weights[i] belongs to k = window.k_lo + i
  double denominator = 0.0;

  double at(std::int64_t k) const { return weights.at(window.offset(k)); }
};

/// Throws DomainError for z outside [a, b] and DegenerateDenominator when the
/// normalising maximum falls below Psi(e).
WeightVector weights(const LogKernel& kernel, const IndexWindow& window, double z);

/// {k in window : |k/n - ln z| <= gamma}, in increasing order.
std::vector<std::int64_t> gamma_window(const IndexWindow& window, double z, double gamma);

/// max_k min(values[k], weights[k]). Throws ConfigError on a length mismatch.
double maxmin_combine(std::span<const double> values, std::span<const double> weights);
double maxmin_combine(std::span<const double> values, const WeightVector& weights);

/// Lattice join / meet over a finite family; join of an empty family is 0.
double join(std::span<const double> values);
double meet(std::span<const double> values);

}  // namespace mmexp
