#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "sedenion/cd_core.hpp"
#include "sedenion/io.hpp"

namespace sedenion::testing {

inline element random_element(std::mt19937_64& rng, int level = max_level) {
  std::normal_distribution<double> g(0.0, 1.0);
  element x(level);
  for (std::size_t m = 0; m < x.dim(); ++m) x[m] = g(rng);
  return x;
}

inline ::testing::AssertionResult near_element(const element& a, const element& b, double tol) {
  const double d = norm(a.promoted(max_level) - b.promoted(max_level));
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << format_sedenion(a) << " vs " << format_sedenion(b)
                                       << " differ by " << d;
}

}  // namespace sedenion::testing
