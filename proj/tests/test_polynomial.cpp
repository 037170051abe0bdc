#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "quadrics/polynomial.hpp"

using namespace quadrics;

namespace {
Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}
}  // namespace

TEST_CASE("arithmetic and derivative") {
  const Polynomial p = poly({1, 2, 3});  // 1 + 2t + 3t^2
  const Polynomial q = poly({0, 1});     // t
  CHECK((p * q).coeffs() == poly({0, 1, 2, 3}).coeffs());
  CHECK((p + q).coeffs() == poly({1, 3, 3}).coeffs());
  CHECK(p.derivative().coeffs() == poly({2, 6}).coeffs());
  CHECK(p(Rational(2)) == 17);
}

TEST_CASE("remainder and gcd") {
  const Polynomial p = poly({-4, 0, 1});  // (t-2)(t+2)
  const Polynomial q = poly({-2, 1});     // t - 2
  CHECK(p.remainder(q).is_zero());
  const Polynomial g = p.gcd(poly({-6, 1, 1}));  // gcd with (t+3)(t-2)
  CHECK(g.coeffs() == poly({-2, 1}).coeffs());   // monic t - 2
}

TEST_CASE("squarefree detection") {
  CHECK(poly({-4, 0, 1}).is_squarefree());
  CHECK_FALSE((poly({-2, 1}) * poly({-2, 1})).is_squarefree());
  CHECK(poly({1, 0, 1}).is_squarefree());
}

TEST_CASE("root counting") {
  CHECK(count_real_roots(poly({1, 0, 1})) == 0);      // t^2 + 1
  CHECK(count_real_roots(poly({-4, 0, 1})) == 2);     // t^2 - 4
  CHECK(count_real_roots(poly({0, -1, 0, 1})) == 3);  // t(t-1)(t+1)
}

TEST_CASE("isolation separates and brackets roots") {
  // roots at -2, 0, 1/3, 5
  const Polynomial p = poly({2, 1}) * poly({0, 1}) *
                       Polynomial({Rational(-1, 3), Rational(1)}) * poly({-5, 1});
  const auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 4);
  const std::vector<Rational> expected = {Rational(-2), Rational(0),
                                          Rational(1, 3), Rational(5)};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CHECK(roots[i].lo <= expected[i]);
    CHECK(expected[i] <= roots[i].hi);
    if (i + 1 < roots.size()) CHECK(roots[i].hi < roots[i + 1].lo);
  }
}

TEST_CASE("isolation on random products of distinct linear factors") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      const long num = static_cast<long>(rng() % 41) - 20;
      const long den = 1 + static_cast<long>(rng() % 6);
      const Rational r = make_rational(num, den);
      bool duplicate = false;
      for (const auto& existing : roots) duplicate |= existing == r;
      if (!duplicate) roots.push_back(r);
    }
    Polynomial p = Polynomial::constant(Rational(1));
    for (const auto& r : roots) p = p * Polynomial({-r, Rational(1)});
    const auto isolated = isolate_real_roots(p);
    CAPTURE(trial);
    REQUIRE(isolated.size() == roots.size());
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(isolated[i].lo <= roots[i]);
      CHECK(roots[i] <= isolated[i].hi);
      if (i + 1 < isolated.size()) CHECK(isolated[i].hi < isolated[i + 1].lo);
    }
  }
}
