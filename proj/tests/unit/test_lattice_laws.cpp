#include <gtest/gtest.h>

#include "lattice_laws.hpp"

TEST(LatticeLaws, HoldOnRandomInstances) {
  const auto tally = lattice_laws::check(20000, 77);
  for (const auto& [law, count] : tally.violations) EXPECT_EQ(count, 0u) << law;
}
