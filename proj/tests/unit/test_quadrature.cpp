#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mmexp/error.hpp"
#include "mmexp/quadrature.hpp"

using namespace mmexp;

TEST(GaussLegendre, NodesAndWeights) {
  const GaussLegendre two(2);
  EXPECT_NEAR(two.nodes()[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(two.weights()[0], 1.0, 1e-15);
  for (int m : {1, 3, 8, 20}) {
    const GaussLegendre rule(m);
    double sum = 0.0;
    for (double w : rule.weights()) sum += w;
    EXPECT_NEAR(sum, 2.0, 1e-14) << m;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
      EXPECT_NEAR(rule.nodes()[i], -rule.nodes()[rule.nodes().size() - 1 - i], 1e-15);
    }
  }
  EXPECT_THROW(GaussLegendre(0), ConfigError);
}

TEST(GaussLegendre, ExactForPolynomials) {
  const GaussLegendre rule(8);
  for (int d = 0; d <= 15; ++d) {
    const double got = rule.integrate([d](double x) { return std::pow(x, d); }, 0.5, 2.0);
    const double want = (std::pow(2.0, d + 1) - std::pow(0.5, d + 1)) / (d + 1);
    EXPECT_NEAR(got, want, 1e-12 * std::max(1.0, want)) << d;
  }
}

TEST(Integrator, SimpsonRoundsToEven) {
  const Integrator simpson(QuadratureSpec{QuadratureRule::composite_simpson, 3});
  EXPECT_NEAR(simpson([](double x) { return x * x * x; }, 0.0, 1.0), 0.25, 1e-15);
  const Integrator fine(QuadratureSpec{QuadratureRule::composite_simpson, 200});
  EXPECT_NEAR(fine([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846), 2.0, 1e-8);
}

TEST(Integrator, PiecewiseSplitsAtJumps) {
  const Integrator gl(QuadratureSpec{});
  auto step = [](double x) { return x < 0.3 ? 1.0 : 5.0; };
  const std::vector<double> cuts{0.3, -4.0, 7.0};
  EXPECT_NEAR(gl.piecewise(step, 0.0, 1.0, cuts), 0.3 + 3.5, 1e-14);
  EXPECT_GT(std::abs(gl(step, 0.0, 1.0) - 3.8), 1e-3);
}

TEST(Integrator, RejectsTooFewPoints) {
  EXPECT_THROW(Integrator(QuadratureSpec{QuadratureRule::gauss_legendre, 1}), ConfigError);
  EXPECT_THROW(Integrator(QuadratureSpec{QuadratureRule::composite_simpson, 0}), ConfigError);
}

TEST(Integrator, RuleNames) {
  EXPECT_EQ(parse_quadrature_rule("gauss-legendre"), QuadratureRule::gauss_legendre);
  EXPECT_EQ(parse_quadrature_rule("simpson"), QuadratureRule::composite_simpson);
  EXPECT_EQ(to_string(QuadratureRule::composite_simpson), "composite-simpson");
  EXPECT_THROW(parse_quadrature_rule("trapezoid"), ConfigError);
}
