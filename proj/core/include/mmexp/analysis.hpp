#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmexp/kernel.hpp"
#include "mmexp/target.hpp"

namespace mmexp {

inline constexpr int kDefaultScanPoints = 512;

struct ModulusEstimate {
  double rho = 0.0;
  double value = 0.0;
  int grid_points = 0;
};

/// Logarithmic modulus of smoothness
///   Omega(F, rho) = sup { |F(s) - F(t)| : s, t in [a, b], |ln s - ln t| <= rho }
/// estimated by a pairwise scan over a log-uniform grid, plus the pairs
/// (s, s e^{+-rho}) for every grid point s. A lower bound of the true sup.
ModulusEstimate log_modulus(const TargetFunction& f, double rho, int grid_points = kDefaultScanPoints);

/// Omega(F, rho_n) v A_v / (Psi(e) n^v rho_n^v): the sup-error certificate of the gm operator.
double gm_rate_bound(const TargetFunction& f, const LogKernel& kernel, int n, double rho_n, double v);

/// Omega(F, rho_n) + (Omega(F, rho_n) v A_v / (Psi(e) n^v rho_n^v)) for the Kantorovich operator.
double mk_rate_bound(const TargetFunction& f, const LogKernel& kernel, int n, double rho_n, double v);

/// The default null sequence rho_n = n^{-1/2}.
double default_rho(int n);

enum class Measure {
  linear,  ///< dz
  log,     ///< dz / z
};

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view name);

struct ErrorNorms {
  double sup = 0.0;
  double l1 = 0.0;
};

/// sup_i |F(z_i) - approx_i| and the trapezoidal integral of |F - approx| over
/// the grid in the chosen measure. Throws ConfigError on a length mismatch.
ErrorNorms error_norms(const TargetFunction& f, std::span<const double> approx,
                       std::span<const double> grid, Measure measure = Measure::linear);
ErrorNorms error_norms(std::span<const double> target, std::span<const double> approx,
                       std::span<const double> grid, Measure measure = Measure::linear);

/// Negated least-squares slope of ln(error) against ln(n). Needs >= 3 samples;
/// throws NumericError if any error is <= 0 (exact reproduction has no finite order).
double fit_order(std::span<const std::pair<int, double>> samples);

/// max |F(s) - F(t)| / |ln s - ln t|^tau over log-uniform grid pairs.
double holder_constant(const TargetFunction& f, double tau, int grid_points = kDefaultScanPoints);

struct RateSample {
  int n = 0;
  double error = 0.0;
  double bound = 0.0;
};

struct RateReport {
  std::string function;
  std::string kernel;
  std::string op;
  std::vector<RateSample> samples;
  double fitted_order = 0.0;
  double theoretical_order = 0.0;

  std::string to_json() const;
  /// Header `n,error,bound`, six decimals.
  std::string to_csv() const;
};

/// log-uniform grid of `points` values covering [a, b], endpoints exact.
std::vector<double> log_uniform_grid(double a, double b, int points);
/// uniform grid of `points` values covering [a, b], endpoints exact.
std::vector<double> uniform_grid(double a, double b, int points);

}  // namespace mmexp
