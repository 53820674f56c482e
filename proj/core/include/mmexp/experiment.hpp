#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmexp/activation.hpp"
#include "mmexp/analysis.hpp"
#include "mmexp/operators.hpp"

namespace mmexp {

/// One approximation experiment: a target, a kernel, a list of sample
/// densities and the evaluation setup. Defaults reproduce the error tables:
/// f on [0.05, 2], ramp kernel, 400 uniform points, clip-to-unit.
struct Experiment {
  std::string function = "f";
  ActivationKind kernel = ActivationKind::ramp;
  std::vector<int> n_list{10, 25, 45, 75, 100, 120};
  double a = 0.05;
  double b = 2.0;
  int eval_grid_points = 400;
  std::vector<OperatorKind> operators{OperatorKind::gm, OperatorKind::mk};
  RangePolicy range_policy = RangePolicy::clip_to_unit;
  Extension extension = Extension::clamp_at_b;
  QuadratureSpec quadrature{};
  Measure measure = Measure::linear;

  /// Throws ConfigError unless n_list is nonempty and strictly increasing,
  /// 0 < a < b and the grid has at least 2 points.
  void validate() const;
  bool runs(OperatorKind k) const;
  OperatorConfig operator_config(int n) const;
};

struct ErrorReportRow {
  int n = 0;
  double gm_l1 = 0.0;
  double mk_l1 = 0.0;
  double gm_sup = 0.0;
  double mk_sup = 0.0;
  /// Set when the row could not be computed (e.g. "empty-window"); values are NaN then.
  std::optional<std::string> flag;
  /// Wall-clock seconds spent on the row; never serialised.
  double seconds = 0.0;
};

/// One row per n, in n_list order. Rows are computed concurrently; the result
/// is deterministic for a fixed experiment.
std::vector<ErrorReportRow> run_error_table(const Experiment& exp);

struct CurveSeries {
  OperatorKind op = OperatorKind::gm;
  int n = 0;
  std::vector<double> values;
};

/// Target and operator curves on a uniform grid, the data behind the figures.
struct CurveSet {
  std::string function;
  std::string kernel;
  std::vector<double> grid;
  std::vector<double> target;
  std::vector<CurveSeries> series;
};

/// Default figure resolution is 800 points.
CurveSet run_curves(const Experiment& exp, int grid_points = 800);

/// Sup-errors of one operator against the rate bound with rho_n = n^{-1/2},
/// on `eval_grid_points` uniform points. The fitted order needs at least
/// three densities; with fewer it is left NaN. `holder_exponent` sets the
/// theoretical order tau / (1 + tau).
RateReport run_rates(const Experiment& exp, OperatorKind op, double holder_exponent = 1.0);

}  // namespace mmexp
