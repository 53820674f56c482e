#pragma once

#include <array>
#include <string_view>

#include "mmexp/target.hpp"

namespace mmexp {

/// Piecewise test function on [0, 2] with branch points 0.4, 0.75, 1.25
/// (each branch closed on the right). Throws DomainError outside [0, 2].
double builtin_f(double x);

/// g(x) = 0.2 + e^{sin x} sin(x^2) / (1 + x^4) on [0, 2]. Exceeds 1 near x = 1.
double builtin_g(double x);

struct Jump {
  double at = 0.0;
  double left = 0.0;   ///< f(at), the closed branch
  double right = 0.0;  ///< limit from the right
  double magnitude() const;
};

/// Jumps of builtin_f at its three branch points.
std::array<Jump, 3> builtin_f_jumps();

TargetFunction f_piecewise_target(double a, double b);
TargetFunction g_oscillatory_target(double a, double b);

/// Resolves "f" / "f-piecewise", "g" / "g-oscillatory", "log-linear",
/// "constant:<c>" and "expr:<expression in x>" on [a, b].
TargetFunction parse_function_spec(std::string_view spec, double a, double b);

}  // namespace mmexp
