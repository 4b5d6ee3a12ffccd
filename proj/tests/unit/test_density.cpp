#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "leelab/density.hpp"
#include "oracles.hpp"

using namespace leelab;

TEST_SUITE("density") {
  TEST_CASE("alpha-regular toy") {
    AssociationSpec spec;
    spec.magnitude = 0;
    spec.class_sizes = {4};
    spec.codegrees = {3};
    spec.left_size = 2;
    spec.right_size = 6;
    CHECK(alpha_regular_bounds(spec).upper == 6);
    spec.codegrees = {0};
    CHECK_THROWS_AS(alpha_regular_bounds(spec), std::domain_error);
  }

  TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(2, 1, 3) == 4);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    for (int p : {2, 3, 5})
      for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= std::min(n, 2); ++k)
          CHECK(gaussian_binomial(n, k, p) == static_cast<unsigned long>(oracle::subspaces(p, n, k).size()));
  }

  TEST_CASE("nonlinear count bounds") {
    auto b = nonlinear_code_bounds(Space(3, 2), 2, 1);
    CHECK(b.lower == 36);
    CHECK(b.upper == 36);
    b = nonlinear_code_bounds(Space(4, 2), 2, 1);
    CHECK(b.upper == 80);
    CHECK(b.theta == 1);
    for (int m : {3, 4})
      for (long S = 2; S <= 4; ++S) {
        const auto nb = nonlinear_code_bounds(Space(m, 2), S, 1);
        const Ratio F(oracle::close_codes(m, 2, S, 1));
        CHECK(nb.lower <= F);
        CHECK(F <= nb.upper);
      }
    CHECK_THROWS_AS(nonlinear_code_bounds(Space(3, 1), 3, 1), std::domain_error);
  }

  TEST_CASE("nonlinear density") {
    auto d = nonlinear_density_bounds(Space(3, 2), 2, 1);
    CHECK(d.lower == 0);
    CHECK(d.upper == 0);
    d = nonlinear_density_bounds(Space(4, 2), 2, 1);
    CHECK(d.lower == Ratio(1, 3));
    CHECK(nonlinear_density_exact(Space(4, 2), 2, 1).density == Ratio(1, 3));
    CHECK(nonlinear_density_exact(Space(4, 2), 3, 1).density == 0);
    CHECK(nonlinear_density_exact(Space(5, 2), 1, 3).density == 1);
    CHECK(nonlinear_density_exact(Space(3, 2), 9, 1).density == 0);
  }

  TEST_CASE("linear bounds") {
    auto b = linear_code_bounds(3, 2, 1, 1);
    CHECK(b.lower == 4);
    CHECK(b.upper == 8);
    CHECK(linear_density_exact(3, 2, 1, 1).close == 4);
    CHECK(linear_code_bounds(2, 3, 1, 1).upper == 6);
    CHECK(linear_density_exact(2, 3, 1, 1).close == 6);
    const auto d = linear_density_bounds(3, 2, 1, 1);
    CHECK(d.raw_lower == -1);
    CHECK(d.lower == 0);
    CHECK(d.upper == 0);
    CHECK(linear_density_exact(3, 2, 1, 1).density == 0);
    CHECK(linear_density_exact(2, 2, 2, 1).density == 0);
    const auto e5 = linear_density_exact(5, 2, 1, 1);
    CHECK(e5.total == 6);
    const auto d5 = linear_density_bounds(5, 2, 1, 1);
    CHECK(d5.lower <= e5.density);
    CHECK(e5.density <= d5.upper);
    CHECK_THROWS_AS(linear_code_bounds(4, 2, 1, 1), std::domain_error);
  }

  TEST_CASE("trends") {
    const auto lin = linear_lower_trend(3, 1, 1, {3, 5, 7, 11, 13});
    CHECK(lin.direction == TrendDirection::increasing);
    for (const auto& r : lin.rows) CHECK(*r.exact < 1);
    const auto nl = nonlinear_density_trend(2, 2, 1, {4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK(nl.direction == TrendDirection::increasing);
    CHECK(linear_lower_trend(3, 1, 1, {5}).direction == TrendDirection::single);
    CHECK(plotkin_density_trend(3, 1, {3, 5, 7, 11, 13}).direction == TrendDirection::decreasing);
  }
}
