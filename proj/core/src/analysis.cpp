#include "mmexp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mmexp/error.hpp"
#include "mmexp/lattice.hpp"

namespace mmexp {

std::string_view to_string(Measure m) { return m == Measure::linear ? "linear" : "log"; }

Measure parse_measure(std::string_view name) {
  if (name == "linear") return Measure::linear;
  if (name == "log") return Measure::log;
  throw ConfigError("unknown measure '" + std::string(name) + "' (expected linear or log)");
}

std::vector<double> log_uniform_grid(double a, double b, int points) {
  if (points < 2) throw ConfigError("grid needs at least 2 points");
  if (!(a > 0.0) || !(b > a)) throw ConfigError("log-uniform grid needs 0 < a < b");
  std::vector<double> g(points);
  const double la = std::log(a);
  const double lb = std::log(b);
  for (int i = 0; i < points; ++i) g[i] = std::exp(la + (lb - la) * i / (points - 1));
  g.front() = a;
  g.back() = b;
  return g;
}

std::vector<double> uniform_grid(double a, double b, int points) {
  if (points < 2) throw ConfigError("grid needs at least 2 points");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = a + (b - a) * i / (points - 1);
  g.front() = a;
  g.back() = b;
  return g;
}

ModulusEstimate log_modulus(const TargetFunction& f, double rho, int grid_points) {
  if (!(rho > 0.0)) throw ConfigError("modulus radius rho must be positive");
  if (grid_points < 64) throw ConfigError("log_modulus needs at least 64 grid points");
  const auto grid = log_uniform_grid(f.a, f.b, grid_points);
  std::vector<double> logs(grid.size());
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    logs[i] = std::log(grid[i]);
    vals[i] = f(grid[i]);
  }
  const double reach = rho * (1.0 + 1e-12);
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size() && logs[j] - logs[i] <= reach; ++j) {
      best = std::max(best, std::abs(vals[i] - vals[j]));
    }
    for (double sign : {-1.0, 1.0}) {
      const double t = grid[i] * std::exp(sign * rho);
      if (t >= f.a && t <= f.b) best = std::max(best, std::abs(vals[i] - f(t)));
    }
  }
  return {rho, best, grid_points};
}

double default_rho(int n) { return 1.0 / std::sqrt(static_cast<double>(n)); }

namespace {

double tail_term(const LogKernel& kernel, int n, double rho_n, double v) {
  const double a_v = moment(kernel, v);
  return a_v / (kernel.value_at_e() * std::pow(n * rho_n, v));
}

void check_rate_inputs(const TargetFunction& f, int n, double rho_n, double v) {
  if (!(rho_n > 0.0)) throw ConfigError("rho_n must be positive");
  if (!(v > 0.0)) throw ConfigError("decay exponent v must be positive");
  (void)index_window(f.a, f.b, n);
}

}  // namespace

double gm_rate_bound(const TargetFunction& f, const LogKernel& kernel, int n, double rho_n, double v) {
  check_rate_inputs(f, n, rho_n, v);
  const double omega = log_modulus(f, rho_n).value;
  return std::max(omega, tail_term(kernel, n, rho_n, v));
}

double mk_rate_bound(const TargetFunction& f, const LogKernel& kernel, int n, double rho_n, double v) {
  check_rate_inputs(f, n, rho_n, v);
  const double omega = log_modulus(f, rho_n).value;
  return omega + std::max(omega, tail_term(kernel, n, rho_n, v));
}

ErrorNorms error_norms(std::span<const double> target, std::span<const double> approx,
                       std::span<const double> grid, Measure measure) {
  if (target.size() != grid.size() || approx.size() != grid.size()) {
    throw ConfigError("error_norms: grid, target and approximation lengths differ");
  }
  ErrorNorms out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double e = std::abs(target[i] - approx[i]);
    out.sup = std::max(out.sup, e);
    if (i + 1 < grid.size()) {
      const double e1 = std::abs(target[i + 1] - approx[i + 1]);
      const double dz = measure == Measure::linear ? grid[i + 1] - grid[i]
                                                   : std::log(grid[i + 1] / grid[i]);
      out.l1 += 0.5 * (e + e1) * dz;
    }
  }
  return out;
}

ErrorNorms error_norms(const TargetFunction& f, std::span<const double> approx,
                       std::span<const double> grid, Measure measure) {
  if (approx.size() != grid.size()) throw ConfigError("error_norms: length mismatch");
  std::vector<double> target(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) target[i] = f(grid[i]);
  return error_norms(target, approx, grid, measure);
}

double fit_order(std::span<const std::pair<int, double>> samples) {
  if (samples.size() < 3) throw ConfigError("fit_order needs at least 3 samples");
  double sx = 0.0, sy = 0.0;
  for (const auto& [n, err] : samples) {
    if (!(err > 0.0)) {
      throw NumericError("fit_order: error " + std::to_string(err) + " at n = " + std::to_string(n) +
                         " is not positive; the order is unbounded");
    }
    sx += std::log(static_cast<double>(n));
    sy += std::log(err);
  }
  const double m = static_cast<double>(samples.size());
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, err] : samples) {
    const double dx = std::log(static_cast<double>(n)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(err) - my);
  }
  if (sxx == 0.0) throw ConfigError("fit_order needs at least two distinct n");
  return -sxy / sxx;
}

double holder_constant(const TargetFunction& f, double tau, int grid_points) {
  if (!(tau > 0.0 && tau <= 1.0)) throw ConfigError("Hoelder order tau must lie in (0, 1]");
  if (grid_points < 64) throw ConfigError("holder_constant needs at least 64 grid points");
  const auto grid = log_uniform_grid(f.a, f.b, grid_points);
  std::vector<double> logs(grid.size());
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    logs[i] = std::log(grid[i]);
    vals[i] = f(grid[i]);
  }
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double d = logs[j] - logs[i];
      if (d <= 0.0) continue;
      best = std::max(best, std::abs(vals[i] - vals[j]) / std::pow(d, tau));
    }
  }
  return best;
}

std::string RateReport::to_json() const {
  nlohmann::ordered_json j;
  j["function"] = function;
  j["kernel"] = kernel;
  j["operator"] = op;
  j["theoretical_order"] = theoretical_order;
  j["fitted_order"] = fitted_order;
  j["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : samples) {
    j["samples"].push_back({{"n", s.n}, {"error", s.error}, {"bound", s.bound}});
  }
  return j.dump(2) + "\n";
}

std::string RateReport::to_csv() const {
  std::ostringstream out;
  out << "n,error,bound\n" << std::fixed << std::setprecision(6);
  for (const auto& s : samples) out << s.n << ',' << s.error << ',' << s.bound << '\n';
  return out.str();
}

}  // namespace mmexp
