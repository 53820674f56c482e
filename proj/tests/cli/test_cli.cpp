#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr discarded; captures stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + MMEXP_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mmexp_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, TableCsvHeaderAndRows) {
  const auto r = run("table --function g --n 10,25");
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,gm_l1,mk_l1,gm_sup,mk_sup");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("10,", 0), 0u);
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("25,", 0), 0u);
}

TEST(Cli, TableIsDeterministic) {
  EXPECT_EQ(run("table --function f").out, run("table --function f").out);
  EXPECT_EQ(run("table --function g --format json").out, run("table --function g --format json").out);
}

TEST(Cli, WritesToFile) {
  const auto path = scratch("table.svg");
  std::filesystem::remove(path);
  ASSERT_EQ(run("table --format svg --out \"" + path.string() + "\"").status, 0);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_NE(s.str().find("<svg"), std::string::npos);
}

TEST(Cli, ConfigFileAndFlagOverride) {
  const auto path = scratch("run.cfg");
  std::ofstream(path) << "# small run\nfunction = g\nn = 10\n";
  const auto from_file = run("table --config \"" + path.string() + "\"");
  ASSERT_EQ(from_file.status, 0);
  EXPECT_EQ(from_file.out, run("table --function g --n 10").out);
  const auto overridden = run("table --config \"" + path.string() + "\" --n 25");
  ASSERT_EQ(overridden.status, 0);
  EXPECT_NE(overridden.out.find("\n25,"), std::string::npos);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run("kernels").status, 0);
  EXPECT_EQ(run("kernels").out.rfind("kernel,support_radius", 0), 0u);
  EXPECT_EQ(run("moments --kernel ramp").status, 0);
  EXPECT_EQ(run("approx --n 10 --points 50").status, 0);
  EXPECT_EQ(run("modular --n 10,120").status, 0);
  EXPECT_EQ(run("rates --function log-linear --interval 1,2.718281828459045").status, 0);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("table --kernel nonsense").status, 2);
  EXPECT_EQ(run("table --n 0").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("table --function 'sin(x'").status, 2);
  EXPECT_EQ(run("table --interval 1.9,2 --n 5").status, 3);
  EXPECT_EQ(run("table --function g --range-policy assert-unit-range").status, 3);
  EXPECT_EQ(run("table --out /nonexistent-dir/x.csv").status, 4);
  EXPECT_EQ(run("table --config /nonexistent-dir/run.cfg").status, 4);
}
