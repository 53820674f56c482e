#pragma once

// Brute-force reference implementations. Nothing here calls into mmexp
// numerics: sigmoids, kernels, index sets and cell means are recomputed from
// their definitions so the library can be checked against them.

#include <functional>
#include <vector>

namespace oracle {

enum class Sigmoid { logistic, tanh, ramp, three_level };

inline constexpr Sigmoid kAllSigmoids[] = {Sigmoid::logistic, Sigmoid::tanh, Sigmoid::ramp, Sigmoid::three_level};

double sigmoid(Sigmoid kind, double x);

/// Psi(z) = (sigmoid(ln z + 1) - sigmoid(ln z - 1)) / 2.
double kernel_at(Sigmoid kind, double z);

/// Every k with a <= e^{k/n} <= b, found by scanning.
std::vector<long> window(double a, double b, int n);

/// max_k min(c_k, Psi(e^{-k} z^n) / max_j Psi(e^{-j} z^n)), with z^n formed
/// explicitly. `coefficient(k)` supplies the sample or cell mean.
double maxmin_direct(Sigmoid kind, double a, double b, int n, double z, const std::function<double(long)>& coefficient);

double gm_direct(Sigmoid kind, const std::function<double(double)>& f, double a, double b, int n, double z);

/// c0 + c1 u + c2 u^2 + c3 u^3 with u = ln z.
struct Cubic {
  double c[4] = {0, 0, 0, 0};
  double at_u(double u) const;
  double at_z(double z) const;
  /// Exact integral over [lo, hi] in u.
  double integral(double lo, double hi) const;
};

/// n int_{k/n}^{(k+1)/n} F(e^u) du in closed form, holding F at F(b) past ln b.
double cubic_cell_mean(const Cubic& p, double b, int n, long k);

double mk_direct(Sigmoid kind, const Cubic& p, double a, double b, int n, double z);

}  // namespace oracle
