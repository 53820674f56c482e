#include "mmexp/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "mmexp/error.hpp"

namespace mmexp {

std::string_view to_string(Extension e) {
  return e == Extension::clamp_at_b ? "clamp-at-b" : "truncate-cell";
}

std::string_view to_string(RangePolicy p) {
  switch (p) {
    case RangePolicy::assert_unit_range: return "assert-unit-range";
    case RangePolicy::clip_to_unit: return "clip-to-unit";
    case RangePolicy::affine_rescale: return "affine-rescale";
  }
  return "clip-to-unit";
}

std::string_view to_string(OperatorKind k) { return k == OperatorKind::gm ? "gm" : "mk"; }

Extension parse_extension(std::string_view name) {
  if (name == "clamp-at-b") return Extension::clamp_at_b;
  if (name == "truncate-cell") return Extension::truncate_cell;
  throw ConfigError("unknown extension policy '" + std::string(name) + "'");
}

RangePolicy parse_range_policy(std::string_view name) {
  if (name == "assert-unit-range") return RangePolicy::assert_unit_range;
  if (name == "clip-to-unit") return RangePolicy::clip_to_unit;
  if (name == "affine-rescale") return RangePolicy::affine_rescale;
  throw ConfigError("unknown range policy '" + std::string(name) + "'");
}

OperatorKind parse_operator_kind(std::string_view name) {
  if (name == "gm") return OperatorKind::gm;
  if (name == "mk") return OperatorKind::mk;
  throw ConfigError("unknown operator '" + std::string(name) + "' (expected gm or mk)");
}

double to_unit(RangePolicy policy, const TargetFunction& f, double value) {
  switch (policy) {
    case RangePolicy::assert_unit_range:
      if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << "value " << value << " of " << f.name << " outside [0, 1]";
        throw RangeViolation(msg.str());
      }
      return value;
    case RangePolicy::clip_to_unit:
      return std::clamp(value, 0.0, 1.0);
    case RangePolicy::affine_rescale:
      return std::clamp((value - f.lo) / (f.hi - f.lo), 0.0, 1.0);
  }
  return value;
}

double from_unit(RangePolicy policy, const TargetFunction& f, double unit) {
  if (policy == RangePolicy::affine_rescale) return f.lo + unit * (f.hi - f.lo);
  return unit;
}

double comparison_value(RangePolicy policy, double value) {
  return policy == RangePolicy::clip_to_unit ? std::clamp(value, 0.0, 1.0) : value;
}

namespace {

double cell_mean_impl(const TargetFunction& f, const OperatorConfig& cfg, const IndexWindow& window,
                      const Integrator& integrate, std::int64_t k) {
  const double n = window.n;
  const double lo = static_cast<double>(k) / n;
  const double hi = static_cast<double>(k + 1) / n;
  const double lb = std::log(cfg.b);
  auto integrand = [&](double u) {
    const double z = std::clamp(std::exp(std::min(u, lb)), cfg.a, cfg.b);
    return to_unit(cfg.range_policy, f, f(z));
  };
  std::vector<double> cuts;
  cuts.reserve(f.breakpoints.size() + 1);
  for (double zb : f.breakpoints) {
    if (zb > 0.0) cuts.push_back(std::log(zb));
  }
  cuts.push_back(lb);

  if (cfg.extension == Extension::truncate_cell && hi > lb) {
    const double top = std::min(hi, lb);
    if (!(top > lo)) return to_unit(cfg.range_policy, f, f(cfg.b));
    return integrate.piecewise(integrand, lo, top, cuts) / (top - lo);
  }
  return n * integrate.piecewise(integrand, lo, hi, cuts);
}

void check_point(const IndexWindow& w, double z) {
  constexpr double slack = 1e-12;
  if (!(z >= w.a * (1.0 - slack) && z <= w.b * (1.0 + slack))) {
    std::ostringstream msg;
    msg << "evaluation point " << z << " outside [" << w.a << ", " << w.b << "]";
    throw DomainError(msg.str());
  }
}

}  // namespace

MaxMinOperator::MaxMinOperator(TargetFunction f, OperatorConfig cfg, OperatorKind kind)
    : f_(std::move(f)), cfg_(std::move(cfg)), kind_(kind), window_(cfg_.window()) {
  coefficients_.resize(window_.size());
  if (kind_ == OperatorKind::gm) {
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      const auto k = window_.k_lo + static_cast<std::int64_t>(i);
      coefficients_[i] = to_unit(cfg_.range_policy, f_, f_(window_.node(k)));
    }
  } else {
    const Integrator integrate(cfg_.quadrature);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      const auto k = window_.k_lo + static_cast<std::int64_t>(i);
      coefficients_[i] = cell_mean_impl(f_, cfg_, window_, integrate, k);
    }
  }
}

double MaxMinOperator::unit_value(double z) const {
  check_point(window_, z);
  z = std::clamp(z, window_.a, window_.b);
  const double s0 = window_.n * std::log(z);
  std::int64_t lo = window_.k_lo;
  std::int64_t hi = window_.k_hi;
  if (cfg_.kernel.compact()) {
    // Indices further than the support radius carry zero weight and cannot
    // raise the maximum of nonnegative terms; one extra index absorbs rounding.
    const double r = cfg_.kernel.support_radius();
    lo = std::max(lo, static_cast<std::int64_t>(std::ceil(s0 - r)) - 1);
    hi = std::min(hi, static_cast<std::int64_t>(std::floor(s0 + r)) + 1);
  }
  double denom = 0.0;
  thread_local std::vector<double> psi;
  psi.resize(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo + 1, 0)));
  for (std::int64_t k = lo; k <= hi; ++k) {
    const double p = cfg_.kernel(s0 - static_cast<double>(k));
    psi[static_cast<std::size_t>(k - lo)] = p;
    denom = std::max(denom, p);
  }
  if (denom < cfg_.kernel.value_at_e() - 1e-12) {
    std::ostringstream msg;
    msg << "normalising maximum " << denom << " below Psi(e) at z = " << z;
    throw DegenerateDenominator(msg.str());
  }
  double best = 0.0;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const double w = psi[static_cast<std::size_t>(k - lo)] / denom;
    best = std::max(best, std::min(coefficients_[window_.offset(k)], w));
  }
  return best;
}

double MaxMinOperator::operator()(double z) const {
  return from_unit(cfg_.range_policy, f_, unit_value(z));
}

double gm_apply(const TargetFunction& f, const OperatorConfig& cfg, double z) {
  return MaxMinOperator(f, cfg, OperatorKind::gm)(z);
}

double cell_mean(const TargetFunction& f, const OperatorConfig& cfg, std::int64_t k) {
  const IndexWindow window = cfg.window();
  if (!window.contains(k)) {
    throw ConfigError("cell index " + std::to_string(k) + " outside the window [" +
                      std::to_string(window.k_lo) + ", " + std::to_string(window.k_hi) + "]");
  }
  const Integrator integrate(cfg.quadrature);
  return cell_mean_impl(f, cfg, window, integrate, k);
}

double mk_apply(const TargetFunction& f, const OperatorConfig& cfg, double z) {
  return MaxMinOperator(f, cfg, OperatorKind::mk)(z);
}

std::vector<double> apply_on_grid(const TargetFunction& f, const OperatorConfig& cfg,
                                  std::span<const double> grid, OperatorKind kind) {
  const MaxMinOperator op(f, cfg, kind);
  std::vector<double> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      out.push_back(op(grid[i]));
    } catch (const Error& e) {
      throw GridPointError(e.code(), i,
                           "grid point " + std::to_string(i) + " (z = " + std::to_string(grid[i]) +
                               "): " + e.what());
    }
  }
  return out;
}

}  // namespace mmexp
