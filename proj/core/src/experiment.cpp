#include "mmexp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>

#include "mmexp/builtins.hpp"
#include "mmexp/error.hpp"

namespace mmexp {

void Experiment::validate() const {
  if (n_list.empty()) throw ConfigError("experiment needs at least one n");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1) throw ConfigError("sample densities must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw ConfigError("n list must be strictly increasing");
  }
  if (!(a > 0.0) || !(b > a)) throw ConfigError("experiment interval needs 0 < a < b");
  if (eval_grid_points < 2) throw ConfigError("evaluation grid needs at least 2 points");
  if (operators.empty()) throw ConfigError("experiment selects no operator");
}

bool Experiment::runs(OperatorKind k) const {
  return std::find(operators.begin(), operators.end(), k) != operators.end();
}

OperatorConfig Experiment::operator_config(int n) const {
  return OperatorConfig{make_kernel(kernel), a, b, n, quadrature, extension, range_policy};
}

namespace {

ErrorReportRow compute_row(const Experiment& exp, const TargetFunction& f, std::span<const double> grid,
                           std::span<const double> target, int n) {
  const auto start = std::chrono::steady_clock::now();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  ErrorReportRow row{n, nan, nan, nan, nan, std::nullopt, 0.0};
  try {
    const OperatorConfig cfg = exp.operator_config(n);
    for (OperatorKind kind : {OperatorKind::gm, OperatorKind::mk}) {
      if (!exp.runs(kind)) continue;
      const auto approx = apply_on_grid(f, cfg, grid, kind);
      const ErrorNorms e = error_norms(target, approx, grid, exp.measure);
      if (kind == OperatorKind::gm) {
        row.gm_l1 = e.l1;
        row.gm_sup = e.sup;
      } else {
        row.mk_l1 = e.l1;
        row.mk_sup = e.sup;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::empty_window) throw;
    row = ErrorReportRow{n, nan, nan, nan, nan, std::string(to_string(e.code())), 0.0};
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<double> comparison_targets(const Experiment& exp, const TargetFunction& f,
                                       std::span<const double> grid) {
  std::vector<double> target(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) target[i] = comparison_value(exp.range_policy, f(grid[i]));
  return target;
}

}  // namespace

std::vector<ErrorReportRow> run_error_table(const Experiment& exp) {
  exp.validate();
  const TargetFunction f = parse_function_spec(exp.function, exp.a, exp.b);
  const auto grid = uniform_grid(exp.a, exp.b, exp.eval_grid_points);
  const auto target = comparison_targets(exp, f, grid);

  std::vector<std::future<ErrorReportRow>> pending;
  pending.reserve(exp.n_list.size());
  for (int n : exp.n_list) {
    pending.push_back(std::async(std::launch::async, [&, n] { return compute_row(exp, f, grid, target, n); }));
  }
  std::vector<ErrorReportRow> rows;
  rows.reserve(pending.size());
  for (auto& p : pending) rows.push_back(p.get());
  return rows;
}

CurveSet run_curves(const Experiment& exp, int grid_points) {
  exp.validate();
  const TargetFunction f = parse_function_spec(exp.function, exp.a, exp.b);
  CurveSet out;
  out.function = f.name;
  out.kernel = std::string(to_string(exp.kernel));
  out.grid = uniform_grid(exp.a, exp.b, grid_points);
  out.target = comparison_targets(exp, f, out.grid);
  for (int n : exp.n_list) {
    const OperatorConfig cfg = exp.operator_config(n);
    for (OperatorKind kind : exp.operators) {
      out.series.push_back(CurveSeries{kind, n, apply_on_grid(f, cfg, out.grid, kind)});
    }
  }
  return out;
}

RateReport run_rates(const Experiment& exp, OperatorKind op, double holder_exponent) {
  exp.validate();
  if (!(holder_exponent > 0.0) || holder_exponent > 1.0) throw ConfigError("Holder exponent must lie in (0, 1]");
  const TargetFunction f = parse_function_spec(exp.function, exp.a, exp.b);
  const auto grid = uniform_grid(exp.a, exp.b, exp.eval_grid_points);
  const auto target = comparison_targets(exp, f, grid);

  RateReport report;
  report.function = f.name;
  report.kernel = std::string(to_string(exp.kernel));
  report.op = std::string(to_string(op));
  report.theoretical_order = holder_exponent / (1.0 + holder_exponent);
  std::vector<std::pair<int, double>> fit;
  for (int n : exp.n_list) {
    const OperatorConfig cfg = exp.operator_config(n);
    const auto approx = apply_on_grid(f, cfg, grid, op);
    const double err = error_norms(target, approx, grid, exp.measure).sup;
    const double v = cfg.kernel.activation().decay_exponent();
    const double rho = default_rho(n);
    const double bound = op == OperatorKind::gm ? gm_rate_bound(f, cfg.kernel, n, rho, v)
                                                : mk_rate_bound(f, cfg.kernel, n, rho, v);
    report.samples.push_back(RateSample{n, err, bound});
    fit.emplace_back(n, err);
  }
  const bool fittable =
      fit.size() >= 3 && std::all_of(fit.begin(), fit.end(), [](const auto& s) { return s.second > 0.0; });
  report.fitted_order = fittable ? fit_order(fit) : std::numeric_limits<double>::quiet_NaN();
  return report;
}

}  // namespace mmexp
