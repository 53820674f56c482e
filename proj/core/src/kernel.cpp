#include "mmexp/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmexp/error.hpp"

namespace mmexp {
namespace {

constexpr double kSymmetryTolerance = 1e-9;

double symmetry_probe(const SigmoidalActivation& act) {
  // Uniform grid on [-20, 20] plus the branch points of the piecewise kinds.
  std::vector<double> samples;
  samples.reserve(4010);
  for (int i = 0; i <= 4000; ++i) samples.push_back(-20.0 + 40.0 * i / 4000.0);
  for (double s : {0.5, 1.0, 1.5, 2.5}) samples.push_back(s);
  return act.symmetry_residual(samples);
}

}  // namespace

LogKernel::LogKernel(SigmoidalActivation activation)
    : activation_(std::move(activation)),
      support_radius_(std::numeric_limits<double>::infinity()),
      value_at_e_(0.0) {
  const double residual = symmetry_probe(activation_);
  if (!(residual <= kSymmetryTolerance)) {
    throw ConfigError("activation '" + activation_.name() +
                      "' is not symmetric: sampled |delta(s) + delta(-s) - 1| = " +
                      std::to_string(residual));
  }
  if (kind() == ActivationKind::ramp || kind() == ActivationKind::three_level) {
    support_radius_ = 1.5;
  }
  value_at_e_ = (*this)(1.0);
  if (!(value_at_e_ > 0.0)) {
    throw ConfigError("activation '" + activation_.name() + "' yields Psi(e) = 0");
  }
}

double LogKernel::operator()(double s) const {
  const double a = std::abs(s);
  switch (kind()) {
    case ActivationKind::ramp:
      if (a <= 0.5) return 0.5;
      if (a <= 1.5) return 0.5 * (1.5 - a);
      return 0.0;
    case ActivationKind::three_level:
      // Plateau is open, shoulders closed: this is exactly what the definition
      // gives and keeps sum_k Psi(e^{s-k}) = 1 at the branch points.
      if (a < 0.5) return 0.5;
      if (a <= 1.5) return 0.25;
      return 0.0;
    default:
      break;
  }
  // For smooth sigmoids evaluate the symmetric half so both sides round alike.
  return 0.5 * (activation_(a + 1.0) - activation_(a - 1.0));
}

double LogKernel::at_z(double z) const { return (*this)(std::log(z)); }

LogKernel make_kernel(SigmoidalActivation activation) { return LogKernel(std::move(activation)); }

LogKernel make_kernel(ActivationKind kind) { return LogKernel(SigmoidalActivation::from_kind(kind)); }

double closed_form_kernel(ActivationKind kind, double z) {
  if (!(z > 0.0)) throw DomainError("kernel argument must be positive");
  constexpr double e = std::numbers::e;
  const double e2 = e * e;
  switch (kind) {
    case ActivationKind::logistic:
      return z * (e2 - 1.0) / (2.0 * (z + e) * (e * z + 1.0));
    case ActivationKind::hyperbolic_tangent: {
      const double z2 = z * z;
      return 0.5 * z2 * (e2 * e2 - 1.0) / (z2 * (1.0 + e2 * e2 + e2 * z2) + e2);
    }
    case ActivationKind::ramp: {
      const double lz = std::log(z);
      if (z < std::exp(-1.5)) return 0.0;
      if (z < std::exp(-0.5)) return 0.5 * (lz + 1.5);
      if (z <= std::exp(0.5)) return 0.5;
      if (z <= std::exp(1.5)) return 0.5 * (-lz + 1.5);
      return 0.0;
    }
    case ActivationKind::three_level:
      if (z >= std::exp(-1.5) && z < std::exp(-0.5)) return 0.25;
      if (z >= std::exp(-0.5) && z <= std::exp(0.5)) return 0.5;
      if (z > std::exp(0.5) && z <= std::exp(1.5)) return 0.25;
      return 0.0;
    case ActivationKind::custom:
      break;
  }
  throw ConfigError("no closed form for custom kernels");
}

double partition_of_unity_residual(const LogKernel& kernel, double s, int truncation) {
  if (truncation < 2) throw ConfigError("partition of unity truncation must be >= 2");
  double sum = 0.0;
  for (int k = -truncation; k <= truncation; ++k) sum += kernel(s - k);
  return std::abs(sum - 1.0);
}

double moment(const LogKernel& kernel, double order, int truncation, int grid) {
  if (!(order >= 0.0)) throw ConfigError("moment order must be nonnegative");
  if (truncation < 1 || grid < 1) throw ConfigError("moment truncation and grid must be positive");
  double sup = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double s = static_cast<double>(i) / grid;
    for (int k = -truncation; k <= truncation; ++k) {
      const double d = s - k;
      const double psi = kernel(d);
      if (psi == 0.0) continue;
      sup = std::max(sup, psi * std::pow(std::abs(d), order));
    }
  }
  return sup;
}

std::string kernel_catalogue_json(std::span<const LogKernel> kernels) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& k : kernels) {
    nlohmann::ordered_json entry;
    entry["kind"] = k.name();
    entry["support_radius"] = k.compact() ? nlohmann::ordered_json(k.support_radius())
                                          : nlohmann::ordered_json(nullptr);
    entry["value_at_e"] = k.value_at_e();
    entry["moments"] = {{"0", moment(k, 0.0)}, {"1", moment(k, 1.0)}, {"2", moment(k, 2.0)}};
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

}  // namespace mmexp
