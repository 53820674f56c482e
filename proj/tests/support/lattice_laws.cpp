#include "lattice_laws.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "generators.hpp"
#include "mmexp/lattice.hpp"

namespace lattice_laws {

std::size_t Tally::total() const {
  std::size_t n = 0;
  for (const auto& [name, count] : violations) n += count;
  return n;
}

Tally check(std::size_t instances, std::uint64_t seed, double tol) {
  using mmexp::join;
  using mmexp::maxmin_combine;
  auto g = testgen::rng(seed);
  Tally t;
  t.instances = instances;
  for (const char* law : {"max-difference", "min-lipschitz", "min-subadditive", "min-scaling", "combine-monotone",
                          "combine-lipschitz", "combine-subadditive", "combine-pseudo-linear"}) {
    t.violations[law] = 0;
  }
  auto fail = [&](const char* law, bool ok) {
    if (!ok) ++t.violations[law];
  };

  for (std::size_t i = 0; i < instances; ++i) {
    const auto len = static_cast<std::size_t>(testgen::uniform_int(g, 1, 16));
    const auto x = testgen::unit_vector(g, len);
    const auto y = testgen::unit_vector(g, len);
    auto w = testgen::unit_vector(g, len);
    w[static_cast<std::size_t>(testgen::uniform_int(g, 0, static_cast<int>(len) - 1))] = 1.0;

    std::vector<double> diff(len), lo(len), hi(len), sum_a(len), sum_b(len), sum(len), mixed(len);
    for (std::size_t k = 0; k < len; ++k) {
      diff[k] = std::abs(x[k] - y[k]);
      lo[k] = std::min(x[k], y[k]);
      hi[k] = std::max(x[k], y[k]);
      // Split x into two parts that add back up to at most 1.
      sum_a[k] = x[k] * testgen::uniform(g, 0.0, 1.0);
      sum_b[k] = (x[k] - sum_a[k]) * testgen::uniform(g, 0.0, 1.0);
      sum[k] = sum_a[k] + sum_b[k];
    }

    // |V x - V y| <= V |x - y|
    fail("max-difference", std::abs(join(x) - join(y)) <= join(diff) + tol);

    // |q ^ r - q ^ s| <= q ^ |r - s|, r ^ t + s ^ t >= (r + s) ^ t
    const double q = x[0], r = y[0], s = w[0];
    fail("min-lipschitz", std::abs(std::min(q, r) - std::min(q, s)) <= std::min(q, std::abs(r - s)) + tol);
    const double tt = testgen::uniform(g, 0.0, 2.0);
    fail("min-subadditive", std::min(q, tt) + std::min(r, tt) + tol >= std::min(q + r, tt));

    // lambda V (x ^ y) = V (lambda x ^ lambda y)
    const double lambda = testgen::uniform(g, 0.01, 10.0);
    std::vector<double> lx(len), ly(len);
    for (std::size_t k = 0; k < len; ++k) {
      lx[k] = lambda * x[k];
      ly[k] = lambda * y[k];
    }
    fail("min-scaling", std::abs(lambda * maxmin_combine(x, y) - maxmin_combine(lx, ly)) <= tol * lambda);

    fail("combine-monotone", maxmin_combine(lo, w) <= maxmin_combine(hi, w) + tol);
    fail("combine-lipschitz",
         std::abs(maxmin_combine(x, w) - maxmin_combine(y, w)) <= maxmin_combine(diff, w) + tol);
    fail("combine-subadditive", maxmin_combine(sum, w) <= maxmin_combine(sum_a, w) + maxmin_combine(sum_b, w) + tol);

    const double alpha = testgen::uniform(g, 0.0, 1.0), beta = testgen::uniform(g, 0.0, 1.0);
    for (std::size_t k = 0; k < len; ++k) mixed[k] = std::max(std::min(alpha, x[k]), std::min(beta, y[k]));
    const double lhs = maxmin_combine(mixed, w);
    const double rhs = std::max(std::min(alpha, maxmin_combine(x, w)), std::min(beta, maxmin_combine(y, w)));
    fail("combine-pseudo-linear", std::abs(lhs - rhs) <= tol);
  }
  return t;
}

}  // namespace lattice_laws
