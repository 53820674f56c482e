#include "mmexp/activation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mmexp/error.hpp"

namespace mmexp {

std::string_view to_string(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::logistic: return "logistic";
    case ActivationKind::hyperbolic_tangent: return "tanh";
    case ActivationKind::ramp: return "ramp";
    case ActivationKind::three_level: return "three-level";
    case ActivationKind::custom: return "custom";
  }
  return "custom";
}

ActivationKind parse_activation_kind(std::string_view name) {
  if (name == "logistic") return ActivationKind::logistic;
  if (name == "tanh" || name == "hyperbolic-tangent") return ActivationKind::hyperbolic_tangent;
  if (name == "ramp") return ActivationKind::ramp;
  if (name == "three-level") return ActivationKind::three_level;
  throw ConfigError("unknown kernel '" + std::string(name) +
                    "' (expected logistic, tanh, ramp or three-level)");
}

// Logistic and tanh decay exponentially, so any finite v witnesses the
// polynomial tail condition; 2 is recorded for both.
SigmoidalActivation SigmoidalActivation::logistic() {
  return {ActivationKind::logistic, "logistic", 2.0, true, true};
}

SigmoidalActivation SigmoidalActivation::hyperbolic_tangent() {
  return {ActivationKind::hyperbolic_tangent, "tanh", 2.0, true, true};
}

// The piecewise kinds vanish identically left of -1/2, so every v > 0 works;
// neither is concave on the positive axis in the required sense.
SigmoidalActivation SigmoidalActivation::ramp() {
  return {ActivationKind::ramp, "ramp", 2.0, false, false};
}

SigmoidalActivation SigmoidalActivation::three_level() {
  return {ActivationKind::three_level, "three-level", 2.0, false, false};
}

SigmoidalActivation SigmoidalActivation::from_kind(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::logistic: return logistic();
    case ActivationKind::hyperbolic_tangent: return hyperbolic_tangent();
    case ActivationKind::ramp: return ramp();
    case ActivationKind::three_level: return three_level();
    case ActivationKind::custom: break;
  }
  throw ConfigError("custom activations must be built with SigmoidalActivation::custom");
}

SigmoidalActivation SigmoidalActivation::custom(std::string name, std::function<double(double)> eval,
                                                double decay_exponent, bool smooth,
                                                bool concave_on_positive) {
  if (!eval) throw ConfigError("custom activation '" + name + "' has no evaluator");
  if (!(decay_exponent > 0.0)) throw ConfigError("decay exponent must be positive");
  SigmoidalActivation act{ActivationKind::custom, std::move(name), decay_exponent, smooth,
                          concave_on_positive};
  act.custom_ = std::move(eval);
  return act;
}

double SigmoidalActivation::operator()(double s) const {
  switch (kind_) {
    case ActivationKind::logistic:
      return 1.0 / (1.0 + std::exp(-s));
    case ActivationKind::hyperbolic_tangent:
      return 0.5 * (std::tanh(s) + 1.0);
    case ActivationKind::ramp:
      if (s < -0.5) return 0.0;
      if (s > 0.5) return 1.0;
      return s + 0.5;
    case ActivationKind::three_level:
      if (s < -0.5) return 0.0;
      if (s > 0.5) return 1.0;
      return 0.5;
    case ActivationKind::custom:
      return custom_(s);
  }
  return 0.0;
}

double SigmoidalActivation::symmetry_residual(std::span<const double> samples) const {
  double worst = 0.0;
  for (double s : samples) {
    worst = std::max(worst, std::abs((*this)(s) + (*this)(-s) - 1.0));
  }
  return worst;
}

}  // namespace mmexp
