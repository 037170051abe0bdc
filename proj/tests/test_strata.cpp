#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadrics/strata.hpp"

using namespace quadrics;

TEST_CASE("codim") {
  CHECK(codim(1) == 1);
  CHECK(codim(2) == 3);
  CHECK(codim(0) == 0);
}

TEST_CASE("sigma_k by integer search") {
  CHECK(sigma_k(1) == 0);
  CHECK(sigma_k(2) == 1);
  CHECK(sigma_k(3) == 1);
  CHECK(sigma_k(4) == 2);
  // unique r with r(r+1)/2 < k <= (r+1)(r+2)/2
  for (int k = 1; k <= 200; ++k) {
    const int r = sigma_k(k);
    CHECK(r * (r + 1) / 2 < k);
    CHECK(k <= (r + 1) * (r + 2) / 2);
  }
}

TEST_CASE("grassmannian and discriminant Betti numbers") {
  CHECK(grassmannian_betti(1, 3) == 3);
  CHECK(grassmannian_betti(2, 4) == 6);
  CHECK(grassmannian_betti(0, 9) == 1);
  CHECK_THROWS_AS(grassmannian_betti(5, 4), std::invalid_argument);

  CHECK(discriminant_betti(3) == 8);
  CHECK(discriminant_betti(1) == 2);
  CHECK(discriminant_betti(10) == 1024);
  for (int n = 1; n <= 30; ++n)
    CHECK(discriminant_betti(n) == pow_integer(2, static_cast<unsigned long>(n)));
}

TEST_CASE("harris_tu_degree") {
  for (int n = 1; n <= 12; ++n) CHECK(harris_tu_degree(1, n) == n);
  CHECK(harris_tu_degree(2, 3) == 4);  // degree of the Veronese surface
  // integrality across the whole sweep
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n; ++r) CHECK_NOTHROW(harris_tu_degree(r, n));
  // corank n is the zero matrix alone; brute evaluation of the product
  for (int n = 1; n <= 12; ++n) {
    Rational product(1);
    for (int a = 0; a < n; ++a)
      product *= Rational(binomial(static_cast<unsigned long>(n + a),
                                   static_cast<unsigned long>(n - a))) /
                 Rational(binomial(static_cast<unsigned long>(2 * a + 1),
                                   static_cast<unsigned long>(a)));
    CHECK(Rational(harris_tu_degree(n, n)) == product);
    CHECK(harris_tu_degree(n, n) == 1);
  }
}

TEST_CASE("stratum_decomposition") {
  const IntervalFamily f1 = stratum_decomposition(1, 3);
  CHECK(f1.intervals == std::vector<std::vector<int>>{{0}, {1}, {2}});
  const IntervalFamily f2 = stratum_decomposition(2, 4);
  CHECK(f2.intervals == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(stratum_decomposition(4, 3).intervals.empty());
  for (int l = 1; l <= 10; ++l)
    for (int r = 1; r <= l; ++r)
      CHECK(static_cast<int>(stratum_decomposition(r, l).intervals.size()) ==
            l - r + 1);
}

TEST_CASE("stratum descriptors") {
  const StratumDescriptor d = stratum_descriptor(2);
  CHECK(d.codim == 3);
  CHECK(d.smallest_nonempty_k == 4);
}
