#include "mmexp/builtins.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "mmexp/error.hpp"
#include "mmexp/expression.hpp"

namespace mmexp {
namespace {

void check_unit_domain(double x, const char* name) {
  if (!(x >= 0.0 && x <= 2.0)) {
    std::ostringstream msg;
    msg << name << " is defined on [0, 2], got x = " << x;
    throw DomainError(msg.str());
  }
}

void check_interval(double a, double b, const char* name) {
  if (!(a > 0.0) || !(b > a)) throw ConfigError(std::string(name) + " needs 0 < a < b");
  if (b > 2.0) {
    std::ostringstream msg;
    msg << name << " is defined on [0, 2]; interval [" << a << ", " << b << "] leaves it";
    throw DomainError(msg.str());
  }
}

double f_branch(int branch, double x) {
  switch (branch) {
    case 0: return 0.25 + 0.1 * x;
    case 1: return 0.85 - 0.05 * std::sin(5.0 * x);
    case 2: return 0.4 + 0.1 * x * x;
    default: return 0.65 + 0.02 * std::cos(3.0 * x);
  }
}

constexpr std::array<double, 3> kFBreaks{0.4, 0.75, 1.25};

}  // namespace

double builtin_f(double x) {
  check_unit_domain(x, "f");
  if (x <= kFBreaks[0]) return f_branch(0, x);
  if (x <= kFBreaks[1]) return f_branch(1, x);
  if (x <= kFBreaks[2]) return f_branch(2, x);
  return f_branch(3, x);
}

double builtin_g(double x) {
  check_unit_domain(x, "g");
  const double x2 = x * x;
  return 0.2 + std::exp(std::sin(x)) * std::sin(x2) / (1.0 + x2 * x2);
}

double Jump::magnitude() const { return std::abs(right - left); }

std::array<Jump, 3> builtin_f_jumps() {
  std::array<Jump, 3> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = Jump{kFBreaks[i], f_branch(i, kFBreaks[i]), f_branch(i + 1, kFBreaks[i])};
  }
  return out;
}

TargetFunction f_piecewise_target(double a, double b) {
  check_interval(a, b, "f");
  TargetFunction f;
  f.name = "f-piecewise";
  f.eval = builtin_f;
  f.a = a;
  f.b = b;
  f.lo = 0.0;
  f.hi = 1.0;
  f.breakpoints.assign(kFBreaks.begin(), kFBreaks.end());
  return f;
}

TargetFunction g_oscillatory_target(double a, double b) {
  check_interval(a, b, "g");
  TargetFunction g;
  g.name = "g-oscillatory";
  g.eval = builtin_g;
  g.a = a;
  g.b = b;
  g.lo = 0.0;
  g.hi = 1.2;
  return g;
}

TargetFunction parse_function_spec(std::string_view spec, double a, double b) {
  if (spec == "f" || spec == "f-piecewise") return f_piecewise_target(a, b);
  if (spec == "g" || spec == "g-oscillatory") return g_oscillatory_target(a, b);
  if (spec == "log-linear") return log_linear_function(a, b);
  if (spec.starts_with("constant:")) {
    const std::string tail(spec.substr(9));
    std::size_t used = 0;
    double c = 0.0;
    try {
      c = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size()) throw ConfigError("bad constant in '" + std::string(spec) + "'");
    return constant_function(c, a, b);
  }
  if (spec.starts_with("expr:")) {
    const Expression expr = Expression::parse(spec.substr(5));
    return make_target(std::string(spec), [expr](double x) { return expr(x); }, a, b);
  }
  throw ConfigError("unknown function '" + std::string(spec) +
                    "' (expected f, g, log-linear, constant:<c> or expr:<expression>)");
}

}  // namespace mmexp
