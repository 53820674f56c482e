#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include "mmexp/activation.hpp"

namespace mmexp {

/// The bell-shaped density Psi(z) = 1/2 [delta(log z + 1) - delta(log z - 1)],
/// stored and evaluated in the log argument s = log z.
///
/// Everything downstream only ever needs Psi(e^{-k} z^n), which depends on
/// s = n log z - k alone, so the z form is never materialised.
class LogKernel {
 public:
  /// Builds Psi from delta. Throws ConfigError when delta fails the
  /// symmetry delta(s) + delta(-s) = 1 by more than 1e-9 on a sampled grid.
  explicit LogKernel(SigmoidalActivation activation);

  /// Psi(e^s).
  double operator()(double s) const;

  /// Psi(z) for z > 0.
  double at_z(double z) const;

  const SigmoidalActivation& activation() const noexcept { return activation_; }
  ActivationKind kind() const noexcept { return activation_.kind(); }
  const std::string& name() const noexcept { return activation_.name(); }

  /// Psi(e^s) = 0 for |s| > support_radius(); infinity when unbounded.
  double support_radius() const noexcept { return support_radius_; }
  bool compact() const noexcept { return support_radius_ < std::numeric_limits<double>::infinity(); }

  /// Psi(e), the lower bound of the normalising maximum.
  double value_at_e() const noexcept { return value_at_e_; }

 private:
  SigmoidalActivation activation_;
  double support_radius_;
  double value_at_e_;
};

LogKernel make_kernel(SigmoidalActivation activation);
LogKernel make_kernel(ActivationKind kind);

/// Tabulated closed forms of Psi(z) for the four built-in kernels, written in
/// the variable z. Used as an independent cross-check of the definition.
double closed_form_kernel(ActivationKind kind, double z);

/// |sum_{k=-K}^{K} Psi(e^{s-k}) - 1|. Requires K >= 2.
double partition_of_unity_residual(const LogKernel& kernel, double s, int truncation);

inline constexpr int kDefaultMomentTruncation = 60;
inline constexpr int kDefaultMomentGrid = 4096;

/// Grid estimate of the generalized absolute moment of order j:
/// sup_{s in [0,1)} max_{|k| <= K} Psi(e^{s-k}) |s - k|^j, scanned at m points.
/// The expression is 1-periodic in s, so one period suffices.
double moment(const LogKernel& kernel, double order, int truncation = kDefaultMomentTruncation,
              int grid = kDefaultMomentGrid);

/// JSON array of {kind, support_radius, value_at_e, moments: {"0","1","2"}}.
/// An unbounded support radius is written as null.
std::string kernel_catalogue_json(std::span<const LogKernel> kernels);

}  // namespace mmexp
