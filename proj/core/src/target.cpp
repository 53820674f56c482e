#include "mmexp/target.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mmexp/error.hpp"

namespace mmexp {

TargetFunction constant_function(double c, double a, double b) {
  TargetFunction f;
  f.name = "constant(" + std::to_string(c) + ")";
  f.eval = [c](double) { return c; };
  f.a = a;
  f.b = b;
  f.lo = std::min(0.0, c);
  f.hi = std::max(1.0, c);
  return f;
}

TargetFunction log_linear_function(double a, double b) {
  if (!(a > 0.0) || !(b > a)) throw ConfigError("log-linear needs 0 < a < b");
  TargetFunction f;
  f.name = "log-linear";
  f.eval = [](double z) { return std::log(z); };
  f.a = a;
  f.b = b;
  f.lo = std::log(a);
  f.hi = std::log(b);
  return f;
}

TargetFunction make_target(std::string name, std::function<double(double)> eval, double a, double b,
                           std::vector<double> breakpoints) {
  if (!(a > 0.0) || !(b > a)) throw ConfigError("target interval needs 0 < a < b");
  TargetFunction f;
  f.name = std::move(name);
  f.eval = std::move(eval);
  f.a = a;
  f.b = b;
  f.breakpoints = std::move(breakpoints);
  double lo = f.eval(a);
  double hi = lo;
  const double la = std::log(a);
  const double lb = std::log(b);
  for (int i = 0; i <= 2000; ++i) {
    const double v = f.eval(std::clamp(std::exp(la + (lb - la) * i / 2000.0), a, b));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1.0;
  f.lo = lo;
  f.hi = hi;
  return f;
}

}  // namespace mmexp
