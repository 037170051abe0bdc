#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quadrics/bounds.hpp"
#include "quadrics/strata.hpp"

using namespace quadrics;

TEST_CASE("milnor_projective") {
  // n d (2d-1)^(n-1)
  CHECK(milnor_projective(3, 2) == 54);
  CHECK(milnor_projective(5, 1) == 5);
  CHECK(milnor_projective(1, 3) == 3);
  // quadratic specialization: 2n 3^(n-1)
  for (int n = 1; n <= 20; ++n)
    CHECK(milnor_projective(n, 2) ==
          Integer(2 * n) * pow_integer(3, static_cast<unsigned long>(n - 1)));
}

TEST_CASE("basu_s") {
  CHECK(basu_s(1, 2).exact == 7);
  CHECK(basu_s(1, 1).exact == Rational(5, 2));
  CHECK(basu_s(1, 1).ceiling == 3);
  // growth trend: log s(k,n) / log n climbs toward k+1 as n doubles
  for (int k = 2; k <= 4; ++k) {
    double previous_gap = 1e300;
    for (int n = 64; n <= 4096; n *= 2) {
      const double value = basu_s(k, n).exact.get_d();
      const double ratio = std::log(value) / std::log(n);
      const double gap = std::abs(ratio - (k + 1));
      CHECK(gap < previous_gap);
      previous_gap = gap;
    }
    CHECK(previous_gap < 0.15);
  }
}

TEST_CASE("det_variety_bound") {
  CHECK(det_variety_bound(2, 4, 4, 3) == 18);  // delta = max(2, 1) = 2
  CHECK(det_variety_bound(1, 3, 1, 1) == 3);   // delta = 3, k=1 collapses
  CHECK(det_variety_bound(5, 3, 3, 2) == 45);  // delta = 5
}

TEST_CASE("hirzebruch_chi dual routes") {
  CHECK(hirzebruch_chi(2, 2) == 4);
  CHECK(hirzebruch_chi(3, 2) == 0);
  for (int delta = 1; delta <= 12; ++delta)
    CHECK(hirzebruch_chi(2, delta) == 2 * delta);  // points by Bezout
  // series route and closed sum are asserted equal internally; sweep them
  for (int k = 2; k <= 8; ++k)
    for (int delta = 1; delta <= 12; ++delta) CHECK_NOTHROW(hirzebruch_chi(k, delta));
}

TEST_CASE("ci_betti") {
  CHECK(ci_betti(3, 2) == 4);  // elliptic curve: 1 + 2 + 1
  CHECK(ci_betti(2, 2) == 4);  // four points
  CHECK(ci_betti(2, 1) == 2);  // two points
}

TEST_CASE("ci_betti_bound dominates ci_betti") {
  CHECK(ci_betti_bound(3, 2).ceiling == 14);
  CHECK(ci_betti_bound(2, 5).ceiling == 11);
  for (int k = 2; k <= 6; ++k)
    for (int delta = 1; delta <= 20; ++delta) {
      CAPTURE(k);
      CAPTURE(delta);
      CHECK(Rational(ci_betti(k, delta)) <= ci_betti_bound(k, delta).exact);
    }
}

TEST_CASE("spherical_bound") {
  CHECK(spherical_bound(2, 5).exact == Rational(81, 8));
  CHECK(spherical_bound(2, 5).ceiling == 11);
  CHECK(spherical_bound(1, 7).ceiling == 1);  // k=1 keeps only (2d)^0
  // k=4 at d = n+1 has leading term 8 d^3 plus 45 d^2
  for (int n = 1; n <= 8; ++n) {
    const Integer d(n + 1);
    CHECK(spherical_bound(4, n + 1).exact == Rational(8 * d * d * d + 45 * d * d));
  }
}

TEST_CASE("numerical_bound") {
  for (int n = 1; n <= 10; ++n) CHECK(numerical_bound(1, n).ceiling == n + 1);
  // k=2, n=3: 4 + (1/2) spherical(2, 4) = 4 + (1/2)(8 + 1/8)
  CHECK(numerical_bound(2, 3).exact == Rational(4) + Rational(65, 16));
  CHECK(numerical_bound(2, 3).ceiling == 9);
  // growth: the ratio against n^(k-1) stays bounded as n doubles
  for (int k = 2; k <= 4; ++k) {
    for (int n = 16; n <= 512; n *= 2) {
      const double ratio = numerical_bound(k, n).exact.get_d() /
                           std::pow(static_cast<double>(n), k - 1);
      CHECK(ratio < 40.0);
    }
  }
}

TEST_CASE("bounds are monotone in n and d") {
  for (int k = 1; k <= 5; ++k)
    for (int n = 1; n < 20; ++n) {
      CHECK(numerical_bound(k, n).exact <= numerical_bound(k, n + 1).exact);
      CHECK(milnor_projective(n, 2) <= milnor_projective(n + 1, 2));
      CHECK(basu_s(k, n).exact <= basu_s(k, n + 1).exact);
      CHECK(spherical_bound(k, n).exact <= spherical_bound(k, n + 1).exact);
    }
}

TEST_CASE("topological_bound_from_data") {
  CHECK(topological_bound_from_data(2, 2, 1, {6}).bound == 4);
  CHECK(topological_bound_from_data(1, 2, 0, {4}).bound == 0);
  CHECK(topological_bound_from_data(4, 3, 3, {}).bound == 5);  // mu = nu
  CHECK_THROWS_AS(topological_bound_from_data(3, 1, 2, {}), std::invalid_argument);
  const TopologicalBound odd = topological_bound_from_data(2, 1, 0, {3});
  CHECK(odd.rounded_up);
  CHECK(odd.bound == 3);  // 3 - 2 + 3/2 = 5/2, ceiling 3
}

TEST_CASE("reference constants") {
  const ReferenceConstants rc = reference_constants();
  REQUIRE(rc.ck.size() == 5);
  CHECK(rc.ck[0] == std::pair<int, Rational>{2, Rational(2)});
  CHECK(rc.ck[2].second == Rational(2, 3));
  CHECK(rc.ck[4].second == Rational(2, 15));
  CHECK(rc.max_complexity_two_quadrics(7) == 14);
  CHECK(rc.refined_three_quadrics(4) == 20);
  CHECK(barvinok_bound(3, 4) == "n^(4*3)");
}
