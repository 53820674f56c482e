// mmexp: run max-min exponential sampling experiments from the command line.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mmexp/builtins.hpp"
#include "mmexp/config.hpp"
#include "mmexp/emit.hpp"
#include "mmexp/error.hpp"
#include "mmexp/experiment.hpp"
#include "mmexp/kernel.hpp"
#include "mmexp/orlicz.hpp"

namespace {

using namespace mmexp;

struct GlobalOptions {
  std::string kernel;
  std::string n;
  std::string interval;
  std::string function;
  std::string out;
  std::string format = "csv";
  std::string config;
  std::string range_policy;
  std::string extension;
  std::string quadrature;
  int quadrature_points = 0;
  int grid = 0;
  std::string measure;
  std::string operators;
};

// Config file first, then whatever was given on the command line.
Experiment build_experiment(const GlobalOptions& g) {
  Experiment exp;
  if (!g.config.empty()) apply_config(exp, load_config(g.config));
  ConfigMap flags;
  auto set = [&](const char* key, const std::string& v) {
    if (!v.empty()) flags[key] = ConfigEntry{v, 0};
  };
  set("kernel", g.kernel);
  set("n", g.n);
  set("interval", g.interval);
  set("function", g.function);
  set("range_policy", g.range_policy);
  set("extension", g.extension);
  set("quadrature", g.quadrature);
  set("measure", g.measure);
  set("operators", g.operators);
  if (g.quadrature_points > 0) set("quadrature_points", std::to_string(g.quadrature_points));
  if (g.grid > 0) set("grid", std::to_string(g.grid));
  try {
    apply_config(exp, flags);
  } catch (const ConfigError& e) {
    // Line numbers mean nothing for flags; drop the prefix.
    std::string what = e.what();
    const auto colon = what.find(": ");
    throw ConfigError(colon == std::string::npos ? what : what.substr(colon + 2));
  }
  exp.validate();
  return exp;
}

void write_output(const GlobalOptions& g, const std::string& content) {
  if (g.out.empty() || g.out == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
  } else {
    write_file(g.out, content);
  }
}

std::string fixed6(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<LogKernel> selected_kernels(const GlobalOptions& g) {
  std::vector<LogKernel> out;
  if (!g.kernel.empty()) {
    out.push_back(make_kernel(parse_activation_kind(g.kernel)));
    return out;
  }
  for (auto kind : {ActivationKind::logistic, ActivationKind::hyperbolic_tangent, ActivationKind::ramp,
                    ActivationKind::three_level}) {
    out.push_back(make_kernel(kind));
  }
  return out;
}

int run_table(const GlobalOptions& g, bool timing) {
  const Experiment exp = build_experiment(g);
  const auto rows = run_error_table(exp);
  if (timing) {
    for (const auto& r : rows) {
      std::cerr << "n=" << r.n << "  " << fixed6(r.seconds) << " s" << (r.flag ? "  [" + *r.flag + "]" : "") << '\n';
    }
  }
  const Format format = parse_format(g.format);
  const std::string fn = exp.function;
  const std::string kernel(to_string(exp.kernel));
  switch (format) {
    case Format::csv: write_output(g, table_csv(rows)); break;
    case Format::json: write_output(g, table_json(rows)); break;
    case Format::svg: write_output(g, table_svg(rows, kernel, fn)); break;
  }
  // Flagged rows are still written; the exit status reports them.
  int status = 0;
  for (const auto& r : rows) {
    if (r.flag) {
      std::cerr << "error: n=" << r.n << " flagged " << *r.flag << '\n';
      status = exit_code(ErrorCode::empty_window);
    }
  }
  return status;
}

int run_approx(const GlobalOptions& g, int points) {
  const Experiment exp = build_experiment(g);
  const CurveSet curves = run_curves(exp, points);
  switch (parse_format(g.format)) {
    case Format::csv: write_output(g, curves_csv(curves)); break;
    case Format::json: write_output(g, curves_json(curves)); break;
    case Format::svg: write_output(g, curves_svg(curves)); break;
  }
  return 0;
}

int run_kernels(const GlobalOptions& g) {
  const auto kernels = selected_kernels(g);
  const Format format = parse_format(g.format);
  if (format == Format::json) {
    write_output(g, kernel_catalogue_json(kernels));
    return 0;
  }
  if (format == Format::svg) throw ConfigError("kernels supports csv and json output");
  std::ostringstream out;
  out << "kernel,support_radius,decay_exponent,value_at_e,value_at_1\n";
  for (const auto& k : kernels) {
    out << k.name() << ',' << (k.compact() ? fixed6(k.support_radius()) : "inf") << ','
        << fixed6(k.activation().decay_exponent()) << ',' << fixed6(k.value_at_e()) << ',' << fixed6(k(0.0)) << '\n';
  }
  write_output(g, out.str());
  return 0;
}

int run_moments(const GlobalOptions& g, const std::vector<double>& orders, int truncation, int grid) {
  const auto kernels = selected_kernels(g);
  const Format format = parse_format(g.format);
  if (format == Format::svg) throw ConfigError("moments supports csv and json output");
  std::ostringstream csv;
  csv << "kernel,order,moment\n";
  nlohmann::ordered_json json = nlohmann::ordered_json::array();
  for (const auto& k : kernels) {
    for (double j : orders) {
      const double m = moment(k, j, truncation, grid);
      csv << k.name() << ',' << fixed6(j) << ',' << fixed6(m) << '\n';
      json.push_back({{"kernel", k.name()}, {"order", j}, {"moment", m}});
    }
  }
  write_output(g, format == Format::csv ? csv.str() : json.dump(2) + "\n");
  return 0;
}

int run_modular(const GlobalOptions& g, const std::string& phi_spec, const std::vector<double>& lambdas,
                const std::string& op_name, int cells) {
  const Experiment exp = build_experiment(g);
  const PhiFunction eta = parse_phi_function(phi_spec);
  const OperatorKind kind = parse_operator_kind(op_name);
  const TargetFunction f = parse_function_spec(exp.function, exp.a, exp.b);
  std::vector<ModularRow> rows;
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
    for (int n : exp.n_list) {
      const MaxMinOperator op(f, exp.operator_config(n), kind);
      rows.push_back(ModularRow{eta.name(), lambda, n, modular_error(eta, lambda, op, cells)});
    }
  }
  const Format format = parse_format(g.format);
  if (format == Format::svg) throw ConfigError("modular supports csv and json output");
  if (format == Format::csv) {
    write_output(g, modular_rows_csv(rows));
  } else {
    nlohmann::ordered_json json = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      json.push_back({{"eta", r.eta}, {"lambda", r.lambda}, {"n", r.n}, {"modular_error", r.modular_error}});
    }
    write_output(g, json.dump(2) + "\n");
  }
  return 0;
}

int run_rates_cmd(const GlobalOptions& g, const std::string& op_name, double tau) {
  const Experiment exp = build_experiment(g);
  const RateReport report = run_rates(exp, parse_operator_kind(op_name), tau);
  const Format format = parse_format(g.format);
  if (format == Format::svg) throw ConfigError("rates supports csv and json output");
  write_output(g, format == Format::csv ? report.to_csv() : report.to_json());
  std::cerr << "fitted order " << fixed6(report.fitted_order) << " (theory " << fixed6(report.theoretical_order)
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-min exponential sampling experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--kernel", g.kernel, "logistic, tanh, ramp or three-level");
  app.add_option("--n", g.n, "comma separated sample densities, e.g. 10,25,45");
  app.add_option("--interval", g.interval, "a,b with 0 < a < b");
  app.add_option("--function", g.function, "f, g, log-linear, constant:c or expr:<expression in x>");
  app.add_option("--out", g.out, "output file (stdout when omitted)");
  app.add_option("--format", g.format, "csv, json or svg");
  app.add_option("--config", g.config, "key = value settings file; flags win");
  app.add_option("--range-policy", g.range_policy, "clip-to-unit, assert-unit-range or affine-rescale");
  app.add_option("--extension", g.extension, "clamp-at-b or truncate-cell");
  app.add_option("--quadrature", g.quadrature, "gauss-legendre or composite-simpson");
  app.add_option("--quadrature-points", g.quadrature_points, "points per cell");
  app.add_option("--grid", g.grid, "evaluation grid points");
  app.add_option("--measure", g.measure, "linear or log L1 measure");
  app.add_option("--operators", g.operators, "gm, mk or gm,mk");

  auto* table = app.add_subcommand("table", "L1 and sup error table over n");
  bool timing = false;
  table->add_flag("--timing", timing, "wall-clock seconds per row on stderr");

  auto* approx = app.add_subcommand("approx", "target and operator curves");
  int points = 800;
  approx->add_option("--points", points, "curve resolution")->check(CLI::Range(2, 1000000));

  auto* kernels = app.add_subcommand("kernels", "kernel catalogue");

  auto* moments = app.add_subcommand("moments", "generalized absolute moments");
  std::vector<double> orders{0.0, 1.0, 2.0};
  int truncation = 60;
  int moment_grid = 4096;
  moments->add_option("--order", orders, "moment orders")->delimiter(',');
  moments->add_option("--truncation", truncation, "largest |k| summed");
  moments->add_option("--moment-grid", moment_grid, "points in [0, 1)");

  auto* modular_cmd = app.add_subcommand("modular", "Orlicz modular errors");
  std::string phi = "power:2";
  std::vector<double> lambdas{1.0};
  std::string modular_op = "mk";
  int cells = 512;
  modular_cmd->add_option("--phi", phi, "power:p or exp:alpha");
  modular_cmd->add_option("--lambda", lambdas, "scaling factors")->delimiter(',');
  modular_cmd->add_option("--operator", modular_op, "gm or mk");
  modular_cmd->add_option("--cells", cells, "integration cells");

  auto* rates = app.add_subcommand("rates", "sup errors against the rate bound");
  std::string rate_op = "mk";
  double tau = 1.0;
  rates->add_option("--operator", rate_op, "gm or mk");
  rates->add_option("--holder", tau, "log-Holder exponent of the target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table) return run_table(g, timing);
    if (*approx) return run_approx(g, points);
    if (*kernels) return run_kernels(g);
    if (*moments) return run_moments(g, orders, truncation, moment_grid);
    if (*modular_cmd) return run_modular(g, phi, lambdas, modular_op, cells);
    if (*rates) return run_rates_cmd(g, rate_op, tau);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
