#include "mmexp/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "mmexp/analysis.hpp"
#include "mmexp/error.hpp"
#include "mmexp/quadrature.hpp"

namespace mmexp {

PhiFunction PhiFunction::power(double p) {
  if (!(p > 1.0)) throw ConfigError("power phi-function needs p > 1");
  std::ostringstream name;
  name << "power:" << p;
  PhiFunction eta(PhiKind::power, p, name.str());
  eta.delta2_ = Delta2Verdict{true, std::pow(2.0, p)};
  return eta;
}

PhiFunction PhiFunction::exponential(double alpha) {
  if (!(alpha > 0.0)) throw ConfigError("exponential phi-function needs alpha > 0");
  std::ostringstream name;
  name << "exp:" << alpha;
  PhiFunction eta(PhiKind::exponential, alpha, name.str());
  eta.delta2_ = Delta2Verdict{false, std::numeric_limits<double>::infinity()};
  return eta;
}

PhiFunction PhiFunction::custom(std::string name, std::function<double(double)> eval) {
  if (!eval) throw ConfigError("custom phi-function has no evaluator");
  PhiFunction eta(PhiKind::custom, 0.0, std::move(name));
  eta.custom_ = std::move(eval);
  return eta;
}

double PhiFunction::operator()(double u) const {
  switch (kind_) {
    case PhiKind::power: return std::pow(u, parameter_);
    case PhiKind::exponential: return std::expm1(std::pow(u, parameter_));
    case PhiKind::custom: return custom_(u);
  }
  return 0.0;
}

PhiFunction parse_phi_function(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string head(spec.substr(0, colon));
  double param = head == "power" ? 2.0 : 1.0;
  if (colon != std::string_view::npos) {
    const std::string tail(spec.substr(colon + 1));
    std::size_t used = 0;
    try {
      param = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tail.size() || tail.empty()) {
      throw ConfigError("bad phi-function parameter in '" + std::string(spec) + "'");
    }
  }
  if (head == "power") return PhiFunction::power(param);
  if (head == "exp" || head == "exponential") return PhiFunction::exponential(param);
  throw ConfigError("unknown phi-function '" + std::string(spec) + "' (expected power:p or exp:alpha)");
}

namespace {

const GaussLegendre& gauss8() {
  static const GaussLegendre rule(8);
  return rule;
}

}  // namespace

ModularValue modular(const PhiFunction& eta, const std::function<double(double)>& g, double a, double b,
                     int cells, std::span<const double> breakpoints) {
  if (!(a > 0.0) || !(a < b)) throw ConfigError("modular needs 0 < a < b");
  if (cells < 16) throw ConfigError("modular needs at least 16 cells");
  const double la = std::log(a);
  const double lb = std::log(b);
  std::vector<double> edges;
  edges.reserve(cells + 1 + breakpoints.size());
  for (int i = 0; i <= cells; ++i) edges.push_back(la + (lb - la) * i / cells);
  for (double zb : breakpoints) {
    if (zb > a && zb < b) edges.push_back(std::log(zb));
  }
  std::sort(edges.begin(), edges.end());
  auto integrand = [&](double u) {
    return eta(std::abs(g(std::clamp(std::exp(u), a, b))));
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] > edges[i]) total += gauss8().integrate(integrand, edges[i], edges[i + 1]);
  }
  ModularValue out;
  out.value = total;
  out.divergent = !std::isfinite(total);
  out.cells = cells;
  return out;
}

ModularValue modular(const PhiFunction& eta, const TargetFunction& f, double a, double b, int cells) {
  return modular(eta, f.eval, a, b, cells, f.breakpoints);
}

double luxemburg_norm(const PhiFunction& eta, const TargetFunction& f, double a, double b, double tol,
                      int cells) {
  if (!(tol > 0.0)) throw ConfigError("luxemburg_norm tolerance must be positive");
  double sup = 0.0;
  for (double z : log_uniform_grid(a, b, 2001)) sup = std::max(sup, std::abs(f(z)));
  if (sup == 0.0) return 0.0;

  auto level = [&](double l) {
    return modular(eta, [&](double z) { return f(z) / l; }, a, b, cells, f.breakpoints).value;
  };
  double lo = sup;
  double hi = sup;
  int steps = 0;
  if (level(hi) > 1.0) {
    while (level(hi) > 1.0) {
      lo = hi;
      hi *= 2.0;
      if (++steps > 200) throw NumericError("luxemburg_norm: modular exceeds 1 for every scale");
    }
  } else {
    while (level(lo) <= 1.0) {
      hi = lo;
      lo *= 0.5;
      if (++steps > 200) throw NumericError("luxemburg_norm: bracket did not close");
    }
  }
  // Invariant: level(lo) > 1 >= level(hi).
  for (int i = 0; i < 200 && (hi - lo) > tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (level(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Delta2Verdict delta2_check(const PhiFunction& eta, std::span<const double> u_grid) {
  if (u_grid.empty()) throw ConfigError("delta2_check needs a nonempty grid");
  const auto [min_it, max_it] = std::minmax_element(u_grid.begin(), u_grid.end());
  const double u_max = *max_it;
  if (*min_it > 1e-3 || u_max < 1e3) throw ConfigError("delta2_check grid must span [1e-3, 1e3]");
  double sup = 0.0;
  double arg_sup = u_grid.front();
  double top_lo = std::numeric_limits<double>::infinity();
  double top_hi = 0.0;
  for (double u : u_grid) {
    if (!(u > 0.0)) continue;
    const double r = eta(2.0 * u) / eta(u);
    if (!std::isfinite(r)) return {false, u};
    if (r > sup) {
      sup = r;
      arg_sup = u;
    }
    if (u >= u_max / 10.0) {
      top_lo = std::min(top_lo, r);
      top_hi = std::max(top_hi, r);
    }
  }
  if (top_hi - top_lo < 0.1 * top_lo) return {true, sup};
  return {false, arg_sup};
}

double modular_error(const PhiFunction& eta, double lambda, const MaxMinOperator& op, int grid_cells) {
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  const auto& f = op.target();
  const auto policy = op.config().range_policy;
  auto diff = [&](double z) { return lambda * (op(z) - comparison_value(policy, f(z))); };
  return modular(eta, diff, op.config().a, op.config().b, grid_cells, f.breakpoints).value;
}

double modular_error(const PhiFunction& eta, double lambda, const TargetFunction& f,
                     const OperatorConfig& cfg, int grid_cells) {
  return modular_error(eta, lambda, MaxMinOperator(f, cfg, OperatorKind::mk), grid_cells);
}

std::string modular_rows_csv(std::span<const ModularRow> rows) {
  std::ostringstream out;
  out << "eta,lambda,n,modular_error\n";
  for (const auto& r : rows) {
    out << r.eta << ',' << std::setprecision(17) << r.lambda << ',' << r.n << ',' << std::scientific
        << std::setprecision(9) << r.modular_error << std::defaultfloat << '\n';
  }
  return out.str();
}

}  // namespace mmexp
