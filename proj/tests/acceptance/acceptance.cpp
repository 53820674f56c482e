// Acceptance checks. Usage: mmexp_acceptance <criterion 1..9 | all> [path to mmexp cli]
// Each criterion prints one PASS/FAIL line, preceded by any detail lines.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "lattice_laws.hpp"
#include "mmexp/analysis.hpp"
#include "mmexp/builtins.hpp"
#include "mmexp/experiment.hpp"
#include "mmexp/kernel.hpp"
#include "mmexp/operators.hpp"
#include "mmexp/orlicz.hpp"
#include "oracle.hpp"

using namespace mmexp;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

std::string cli_path;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

Outcome kernel_identities() {
  Stopwatch clock;
  auto g = testgen::rng(101);
  double compact_worst = 0.0, smooth_worst = 0.0, closed_worst = 0.0;
  for (auto kind : testgen::kBuiltinKinds) {
    const auto k = make_kernel(kind);
    const bool compact = k.compact();
    for (int i = 0; i < 1000; ++i) {
      const double s = testgen::uniform(g, 0.0, 1.0);
      const double r = partition_of_unity_residual(k, s, compact ? 2 : 60);
      (compact ? compact_worst : smooth_worst) = std::max(compact ? compact_worst : smooth_worst, r);
      const double z = testgen::uniform(g, 0.0, 20.0);
      if (z > 0.0) closed_worst = std::max(closed_worst, std::abs(closed_form_kernel(kind, z) - k.at_z(z)));
    }
  }
  const double t = clock.seconds();
  const bool ok = compact_worst <= 1e-12 && smooth_worst <= 1e-8 && closed_worst <= 1e-12 && t < 1.0;
  return {ok, "kernel identities: partition residual " + fmt("%.1e", compact_worst) + " (ramp, three-level) / " +
                  fmt("%.1e", smooth_worst) + " (logistic, tanh), closed-form gap " + fmt("%.1e", closed_worst) +
                  ", " + fmt("%.3f", t) + " s"};
}

Outcome lattice_inequalities() {
  Stopwatch clock;
  const auto tally = lattice_laws::check(100000, 202);
  const double t = clock.seconds();
  std::string detail;
  for (const auto& [law, count] : tally.violations) {
    if (count > 0) detail += " " + law + "=" + std::to_string(count);
  }
  const bool ok = tally.total() == 0 && t < 5.0;
  return {ok, "lattice inequalities: " + std::to_string(tally.total()) + " violations in " +
                  std::to_string(tally.instances) + " instances" + detail + ", " + fmt("%.3f", t) + " s"};
}

Outcome oracle_equivalence() {
  Stopwatch clock;
  auto g = testgen::rng(303);
  double worst = 0.0;
  int evaluations = 0;
  const double a = 0.6, b = 4.0;
  for (auto s : oracle::kAllSigmoids) {
    for (int n = 1; n <= 4; ++n) {
      const auto p = testgen::unit_cubic(g, a, b);
      const auto f = make_target("cubic", [p](double z) { return p.at_z(z); }, a, b);
      const OperatorConfig cfg{make_kernel(testgen::to_kind(s)), a, b, n};
      for (int i = 0; i < 20; ++i) {
        const double z = testgen::uniform(g, a, b);
        worst = std::max(worst, std::abs(gm_apply(f, cfg, z) - oracle::gm_direct(s, f.eval, a, b, n, z)));
        worst = std::max(worst, std::abs(mk_apply(f, cfg, z) - oracle::mk_direct(s, p, a, b, n, z)));
        evaluations += 2;
      }
    }
  }
  const double t = clock.seconds();
  return {worst <= 1e-14 && t < 1.0, "oracle equivalence: max deviation " + fmt("%.1e", worst) + " over " +
                                         std::to_string(evaluations) + " evaluations, " + fmt("%.3f", t) + " s"};
}

Outcome constant_reproduction() {
  Stopwatch clock;
  double worst = 0.0;
  const double a = 0.05, b = 2.0;
  const auto grid = uniform_grid(a, b, 100);
  for (auto kind : testgen::kBuiltinKinds) {
    for (int n : {5, 50}) {
      const OperatorConfig cfg{make_kernel(kind), a, b, n};
      for (double c : {0.0, 0.3, 1.0}) {
        const auto f = constant_function(c, a, b);
        for (auto op : {OperatorKind::gm, OperatorKind::mk}) {
          for (double v : apply_on_grid(f, cfg, grid, op)) worst = std::max(worst, std::abs(v - c));
        }
      }
    }
  }
  return {worst <= 1e-12,
          "constant reproduction: max deviation " + fmt("%.1e", worst) + ", " + fmt("%.3f", clock.seconds()) + " s"};
}

struct ReferenceTable {
  const char* function;
  double gm[6];
  double mk[6];
};

Outcome table_reproduction() {
  Stopwatch clock;
  const ReferenceTable tables[] = {
      {"f", {0.324257, 0.115541, 0.065467, 0.039184, 0.030253, 0.022967},
       {0.205913, 0.079010, 0.042613, 0.025282, 0.019063, 0.015536}},
      {"g", {0.344159, 0.190002, 0.133451, 0.103169, 0.091224, 0.085628},
       {0.270741, 0.156266, 0.114245, 0.091305, 0.082526, 0.078252}},
  };
  bool orderings = true, band = true;
  std::string failures;
  for (const auto& ref : tables) {
    Experiment exp;
    exp.function = ref.function;
    const auto rows = run_error_table(exp);
    std::printf("  %s:    n     gm_l1  reference   rel      mk_l1  reference   rel\n", ref.function);
    bool fn_order = true, fn_band = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const double rg = r.gm_l1 / ref.gm[i] - 1.0, rm = r.mk_l1 / ref.mk[i] - 1.0;
      std::printf("       %4d  %.6f  %.6f  %+6.1f%%  %.6f  %.6f  %+6.1f%%%s\n", r.n, r.gm_l1, ref.gm[i], 100 * rg,
                  r.mk_l1, ref.mk[i], 100 * rm, r.mk_l1 < r.gm_l1 ? "" : "  mk >= gm");
      if (std::abs(rg) > 0.35 || std::abs(rm) > 0.35) fn_band = false;
      if (!(r.mk_l1 < r.gm_l1)) fn_order = false;
      if (i > 0 && !(r.gm_l1 < rows[i - 1].gm_l1 && r.mk_l1 < rows[i - 1].mk_l1)) {
        std::printf("       error does not decrease from n=%d to n=%d\n", rows[i - 1].n, r.n);
        fn_order = false;
      }
    }
    if (!fn_order) failures += std::string(" ") + ref.function + ":ordering";
    if (!fn_band) failures += std::string(" ") + ref.function + ":band";
    orderings = orderings && fn_order;
    band = band && fn_band;
  }
  const double t = clock.seconds();
  // The band is reported; the orderings decide once the band is missed.
  const bool ok = orderings && t < 30.0;
  return {ok, std::string("reference L1 tables: ") + (band ? "within 35% band" : "outside 35% band") + ", orderings " +
                  (orderings ? "hold" : "violated") + (failures.empty() ? "" : " [" + failures.substr(1) + "]") +
                  ", " + fmt("%.3f", t) + " s"};
}

Outcome rate_certificates() {
  bool ok = true;
  double worst_margin = -1e300;
  Experiment exp;
  exp.function = "log-linear";
  exp.a = 1.0;
  exp.b = std::exp(1.0);
  exp.n_list = {25, 50, 100};
  for (auto kind : {ActivationKind::ramp, ActivationKind::logistic}) {
    exp.kernel = kind;
    for (auto op : {OperatorKind::gm, OperatorKind::mk}) {
      const auto report = run_rates(exp, op);
      for (const auto& s : report.samples) {
        std::printf("  %-8s %s n=%-4d sup error %.6f  bound %.6f\n", to_string(kind).data(), to_string(op).data(), s.n,
                    s.error, s.bound);
        worst_margin = std::max(worst_margin, s.error - s.bound);
        if (s.error > s.bound + 5e-3) ok = false;
      }
    }
  }
  return {ok, "rate certificates: largest (error - bound) = " + fmt("%.4f", worst_margin) + " with slack 0.005"};
}

Outcome holder_order() {
  Experiment exp;
  exp.function = "log-linear";
  exp.a = 1.0;
  exp.b = std::exp(1.0);
  exp.n_list = {10, 20, 40, 80, 160};
  const auto report = run_rates(exp, OperatorKind::mk);
  for (const auto& s : report.samples) std::printf("  n=%-4d mk sup error %.6f\n", s.n, s.error);
  return {report.fitted_order >= 0.35,
          "log-Holder order: fitted " + fmt("%.4f", report.fitted_order) + " against floor 0.35"};
}

Outcome modular_convergence() {
  const double a = 0.05, b = 2.0;
  const int cells = 512;
  const OperatorConfig c10{make_kernel(ActivationKind::ramp), a, b, 10};
  const OperatorConfig c120{make_kernel(ActivationKind::ramp), a, b, 120};
  bool ok = true;
  std::string detail;
  for (const char* name : {"f", "g"}) {
    const auto f = parse_function_spec(name, a, b);
    const auto square = PhiFunction::power(2.0);
    const double e10 = modular_error(square, 1.0, f, c10, cells), e120 = modular_error(square, 1.0, f, c120, cells);
    std::printf("  %s  u^2      lambda=1      n=10 %.6e  n=120 %.6e  ratio %.3f\n", name, e10, e120, e120 / e10);
    if (!(e120 <= 0.5 * e10)) ok = false;

    const auto expo = PhiFunction::exponential(1.0);
    int found = -1;
    for (int k = 0; k <= 10 && found < 0; ++k) {
      const double lambda = std::ldexp(1.0, -k);
      const double x10 = modular_error(expo, lambda, f, c10, cells), x120 = modular_error(expo, lambda, f, c120, cells);
      std::printf("  %s  e^u - 1  lambda=2^-%-2d  n=10 %.6e  n=120 %.6e  ratio %.3f\n", name, k, x10, x120, x120 / x10);
      if (x120 <= 0.5 * x10) found = k;
    }
    if (found < 0) ok = false;
    detail += std::string(" ") + name + (found >= 0 ? ":lambda=2^-" + std::to_string(found) : ":none");
  }
  return {ok, "modular convergence: u^2 halves at lambda=1 for f and g, e^u - 1 halving scale" + detail};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  if (cli_path.empty()) return {false, "determinism: no CLI path given"};
  const auto dir = std::filesystem::temp_directory_path() / "mmexp_acceptance";
  std::filesystem::create_directories(dir);
  bool identical = true, schema = true;
  const std::regex row(R"(^[0-9]+(,([0-9]+\.[0-9]{6}|nan)){4}$)");
  for (const char* fn : {"f", "g"}) {
    for (const char* format : {"csv", "json"}) {
      std::vector<std::string> runs;
      for (int rep = 0; rep < 3; ++rep) {
        const auto out = dir / (std::string(fn) + "_" + std::to_string(rep) + "." + format);
        const std::string cmd = "\"" + cli_path + "\" table --function " + fn + " --format " + format + " --out \"" +
                                out.string() + "\"";
        if (std::system(cmd.c_str()) != 0) return {false, "determinism: CLI failed: " + cmd};
        runs.push_back(read_file(out));
      }
      for (const auto& r : runs) identical = identical && r == runs.front();
      if (std::string(format) == "csv") {
        std::istringstream lines(runs.front());
        std::string line;
        std::getline(lines, line);
        if (line != "n,gm_l1,mk_l1,gm_sup,mk_sup") schema = false;
        int count = 0;
        while (std::getline(lines, line)) {
          ++count;
          if (!std::regex_match(line, row)) schema = false;
        }
        if (count != 6) schema = false;
      }
    }
  }
  return {identical && schema, std::string("determinism: repeated table runs ") +
                                   (identical ? "byte-identical" : "differ") + ", csv schema " +
                                   (schema ? "exact" : "mismatch")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mmexp_acceptance <1..9|all> [mmexp cli path]\n";
    return 2;
  }
  const std::string which = argv[1];
  if (argc > 2) cli_path = argv[2];

  const std::vector<std::function<Outcome()>> criteria{
      kernel_identities,  lattice_inequalities,   oracle_equivalence,  constant_reproduction, table_reproduction,
      rate_certificates,  holder_order,     modular_convergence, determinism,
  };
  std::vector<int> selected;
  if (which == "all") {
    for (int i = 1; i <= 9; ++i) selected.push_back(i);
  } else {
    const int i = std::atoi(which.c_str());
    if (i < 1 || i > 9) {
      std::cerr << "criterion must be 1..9 or all\n";
      return 2;
    }
    selected.push_back(i);
  }
  int failed = 0;
  for (int i : selected) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(i - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", i, o.summary.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
