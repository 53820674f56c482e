#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mmexp {

/// A function F on [a, b] subset of R+ to be approximated.
///
/// `breakpoints` lists points of [a, b] (in z) where F may jump or kink;
/// integrators split there. `lo`/`hi` is the declared range used by the
/// affine-rescale range policy.
struct TargetFunction {
  std::string name;
  std::function<double(double)> eval;
  double a = 1.0;
  double b = 1.0;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> breakpoints;

  double operator()(double z) const { return eval(z); }
};

/// F = c on [a, b].
TargetFunction constant_function(double c, double a, double b);

/// F(z) = ln z on [a, b].
TargetFunction log_linear_function(double a, double b);

/// Wraps an arbitrary callable; the declared range is sampled at 2001 log-uniform points.
TargetFunction make_target(std::string name, std::function<double(double)> eval, double a, double b,
                           std::vector<double> breakpoints = {});

}  // namespace mmexp
