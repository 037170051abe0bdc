#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "quadrics/errors.hpp"
#include "quadrics/instance.hpp"
#include "quadrics/pencil2.hpp"

using namespace quadrics;

namespace {

QForm offdiag2(const Rational& value) {
  QForm q(2);
  q.set_entry(1, 0, value);
  return q;
}

// The three running fixtures.
QuadricSystem constant_rank_pencil() {
  return QuadricSystem(1, {QForm::diagonal({Rational(1), Rational(-1)}),
                           offdiag2(Rational(1))});
}

QuadricSystem axis_pencil() {
  return QuadricSystem(1, {QForm::diagonal({Rational(1), Rational(0)}),
                           QForm::diagonal({Rational(0), Rational(1)})});
}

QuadricSystem two_conics() {
  return QuadricSystem(
      2, {QForm::diagonal({Rational(1), Rational(1), Rational(-1)}),
          QForm::diagonal({Rational(1, 4), Rational(4), Rational(-1)})});
}

}  // namespace

TEST_CASE("circle_polynomial fixtures") {
  const QForm p2 = QForm::identity(2);

  // det = eps^2 - 1 < 0 on the whole circle
  const CirclePolynomial constant_rank =
      circle_polynomial(constant_rank_pencil(), Rational(1, 4), p2);
  CHECK(count_real_roots(constant_rank.poly) == 0);
  CHECK(constant_rank.value_at_infinity != 0);

  // det = (w1 - eps)(w2 - eps): four crossings
  const CirclePolynomial axes =
      circle_polynomial(axis_pencil(), Rational(1, 4), p2);
  CHECK(count_real_roots(axes.poly) == 4);

  // eps = 0 degenerates at the excluded point as well
  const CirclePolynomial unperturbed =
      circle_polynomial(axis_pencil(), Rational(0), p2);
  CHECK(count_real_roots(unperturbed.poly) == 3);
  CHECK(unperturbed.value_at_infinity == 0);
  const RootIsolation iso = sturm_count(unperturbed);
  CHECK(iso.root_at_infinity);
  CHECK(iso.root_count == 4);
}

TEST_CASE("sturm_count basics and the transversality gate") {
  CirclePolynomial cp;
  cp.n = 0;
  cp.poly = Polynomial({Rational(1), Rational(0), Rational(1)});  // t^2 + 1
  cp.value_at_infinity = Rational(1);
  CHECK(sturm_count(cp).root_count == 0);

  cp.poly = Polynomial({Rational(-4), Rational(0), Rational(1)});  // t^2 - 4
  const RootIsolation iso = sturm_count(cp);
  CHECK(iso.root_count == 2);
  REQUIRE(iso.intervals.size() == 2);
  CHECK(iso.intervals[0].hi < iso.intervals[1].lo);

  // a squared factor must signal NotTransversal
  cp.poly = Polynomial({Rational(4), Rational(-4), Rational(1)});  // (t-2)^2
  CHECK_THROWS_AS(sturm_count(cp), NotTransversal);
}

TEST_CASE("index_profile on the axis pencil") {
  const PencilAnalysis analysis =
      index_profile(axis_pencil(), Rational(1, 4), QForm::identity(2));
  CHECK(analysis.root_count == 4);
  CHECK(analysis.mu == 2);
  CHECK(analysis.nu == 0);
  CHECK(analysis.bound == 0);
  CHECK(analysis.transversal);
  // wrap arc contains omega = (-1, 0) where the form is negative definite
  REQUIRE(analysis.arc_labels.size() == 4);
  CHECK(analysis.arc_labels[0] == 2);
  // circular pattern rotates {0,1,2,1}
  std::vector<int> sorted = analysis.arc_labels;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("index_profile on the constant-rank pencil") {
  const PencilAnalysis analysis =
      index_profile(constant_rank_pencil(), Rational(1, 4), QForm::identity(2));
  CHECK(analysis.root_count == 0);
  CHECK(analysis.mu == 1);
  CHECK(analysis.nu == 1);
  CHECK(analysis.bound == 2);  // n + 1
}

TEST_CASE("index_profile on the two-conic fixture") {
  const PencilAnalysis analysis =
      index_profile(two_conics(), Rational(1, 16), QForm::identity(3));
  CHECK(analysis.root_count == 6);
  CHECK(analysis.mu == 2);
  CHECK(analysis.nu == 1);
  CHECK(analysis.bound == 4);
}

TEST_CASE("index_profile rejects a root at the excluded point") {
  CHECK_THROWS_AS(index_profile(axis_pencil(), Rational(0), QForm::identity(2)),
                  NotGeneric);
}

TEST_CASE("instance bound is invariant under rational rotations of the pencil") {
  // (3/5, 4/5) rotation: the parameter circle maps onto itself.
  const Rational c(3, 5), s(4, 5);
  for (const QuadricSystem& sys :
       {axis_pencil(), constant_rank_pencil(), two_conics()}) {
    const QForm rotated1 = sys.forms[0] * c + sys.forms[1] * s;
    const QForm rotated2 = sys.forms[0] * (-s) + sys.forms[1] * c;
    const QuadricSystem rotated(sys.n, {rotated1, rotated2});
    const Rational eps(1, 16);
    const QForm p = QForm::identity(sys.n + 1);
    const PencilAnalysis a = index_profile(sys, eps, p);
    const PencilAnalysis b = index_profile(rotated, eps, p);
    CHECK(a.root_count == b.root_count);
    CHECK(a.mu == b.mu);
    CHECK(a.nu == b.nu);
    CHECK(a.bound == b.bound);
  }
}

TEST_CASE("arc sublevels satisfy the half-boundary identity") {
  for (const QuadricSystem& sys : {axis_pencil(), two_conics()}) {
    const PencilAnalysis analysis =
        index_profile(sys, Rational(1, 16), QForm::identity(sys.n + 1));
    for (int j = analysis.nu; j < analysis.mu; ++j) {
      const ArcSublevel sub = arc_sublevel(analysis.arc_labels, j);
      CAPTURE(j);
      CHECK(sub.components > 0);
      CHECK(2 * sub.components == sub.boundary_points);
    }
    // full circle: no boundary
    const ArcSublevel full = arc_sublevel(analysis.arc_labels, analysis.mu);
    CHECK(full.components == 1);
    CHECK(full.boundary_points == 0);
  }
}

TEST_CASE("random pencils: degree bound and branch bounds") {
  std::mt19937_64 rng(17);
  int analyzed = 0;
  for (std::uint64_t seed = 1; analyzed < 60 && seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const QuadricSystem sys = to_system(gen_instance(seed, 2, n));
    try {
      const PencilAnalysis analysis =
          index_profile(sys, Rational(1, 64), QForm::identity(n + 1));
      ++analyzed;
      CHECK(analysis.root_count <= 2 * (n + 1));
      CHECK(analysis.bound <= 2 * n);
      if (analysis.mu == analysis.nu) CHECK(analysis.bound == n + 1);
    } catch (const NotTransversal&) {
    } catch (const NotGeneric&) {
    }
  }
  CHECK(analyzed >= 50);
}
