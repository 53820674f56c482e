#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace mmexp {

enum class ActivationKind { logistic, hyperbolic_tangent, ramp, three_level, custom };

std::string_view to_string(ActivationKind kind);

/// Accepts "logistic", "tanh" (or "hyperbolic-tangent"), "ramp", "three-level".
/// Throws ConfigError for anything else.
ActivationKind parse_activation_kind(std::string_view name);

/// A sigmoidal function delta: nondecreasing, delta(-inf) = 0, delta(+inf) = 1.
///
/// Besides the function itself it carries the structural metadata the
/// convergence theory talks about: a decay exponent v witnessing the
/// polynomial left tail, smoothness, and whether delta is concave on the
/// positive half-line. The built-in kinds are evaluated by a switch; only
/// `custom` goes through a std::function.
class SigmoidalActivation {
 public:
  static SigmoidalActivation logistic();
  static SigmoidalActivation hyperbolic_tangent();
  static SigmoidalActivation ramp();
  static SigmoidalActivation three_level();
  static SigmoidalActivation from_kind(ActivationKind kind);
  static SigmoidalActivation custom(std::string name, std::function<double(double)> eval,
                                    double decay_exponent, bool smooth, bool concave_on_positive);

  double operator()(double s) const;

  ActivationKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  double decay_exponent() const noexcept { return decay_exponent_; }
  bool smooth() const noexcept { return smooth_; }
  bool satisfies_delta2_concavity() const noexcept { return concave_; }

  /// max |delta(s) + delta(-s) - 1| over the given samples.
  double symmetry_residual(std::span<const double> samples) const;

 private:
  SigmoidalActivation(ActivationKind kind, std::string name, double v, bool smooth, bool concave)
      : kind_(kind), name_(std::move(name)), decay_exponent_(v), smooth_(smooth), concave_(concave) {}

  ActivationKind kind_;
  std::string name_;
  double decay_exponent_;
  bool smooth_;
  bool concave_;
  std::function<double(double)> custom_;
};

}  // namespace mmexp
