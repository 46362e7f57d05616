#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vesicle/enumerate.hpp"
#include "vesicle/errors.hpp"
#include "vesicle/qseries.hpp"

using namespace vesicle;

TEST_SUITE("qseries") {

TEST_CASE("q-Pochhammer") {
  CHECK(q_pochhammer(0.3, 0.7, 0) == 1.0);
  CHECK(q_pochhammer(0.5, 0.5, 2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(q_pochhammer(1.0, 0.4, 3) == 0.0);
  CHECK_THROWS_AS(q_pochhammer(0.5, 0.5, -1), DomainError);
}

TEST_CASE("H against exact rational summation") {
  using oracle::Rational;
  CHECK(qbessel_h({0.0, 0.4, 0.5}) == 1.0);
  // 0.1, 0.5 and the other arguments below are exact binary fractions only
  // for q; the rationals use the decimal values.
  const double h = qbessel_h({0.1, 0.1, 0.5});
  const double exact = static_cast<double>(oracle::qbessel_h_exact(Rational(1, 10), Rational(1, 10), Rational(1, 2), 30));
  CHECK(h == doctest::Approx(exact).epsilon(1e-15));
  CHECK(h == doctest::Approx(0.8982838693316949).epsilon(1e-15));

  const struct {
    int xn, xd, yn, yd, qn, qd;
  } pts[] = {{3, 10, 1, 5, 9, 10}, {1, 4, 1, 4, 3, 4}, {2, 1, 1, 3, 1, 2}, {1, 20, 3, 1, 1, 5}};
  for (const auto& p : pts) {
    const Rational x(p.xn, p.xd), y(p.yn, p.yd), q(p.qn, p.qd);
    const double want = static_cast<double>(oracle::qbessel_h_exact(x, y, q, 60));
    CAPTURE(static_cast<double>(x));
    CHECK(qbessel_h({static_cast<double>(x), static_cast<double>(y), static_cast<double>(q)}) ==
          doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("H domain and failure modes") {
  CHECK_THROWS_AS(qbessel_h({0.1, 0.1, 1.0}), DomainError);
  CHECK_THROWS_AS(qbessel_h({0.1, 0.1, 1.2}), DomainError);
  CHECK_THROWS_AS(qbessel_h({-0.1, 0.1, 0.5}), DomainError);
  // (qy; q)_n vanishes at y = 1/q
  CHECK_THROWS_AS(qbessel_h({0.1, 2.0, 0.5}), SingularityError);
  // terms ~ e^{x/(1-q)}: more than eight digits cancel
  CHECK_THROWS_AS(qbessel_h({0.25, 0.25, 0.999}), ConvergenceError);
  TruncationPolicy tight;
  tight.max_terms = 3;
  CHECK_THROWS_AS(qbessel_h({0.2, 0.2, 0.9}, tight), ConvergenceError);
}

TEST_CASE("staircase function: three routes") {
  CHECK(staircase_gf_explicit({0.0, 0.3, 0.5}) == 0.0);
  CHECK(staircase_gf_q1(0.2, 0.2) == doctest::Approx((0.6 - std::sqrt(0.2)) / 2).epsilon(1e-15));
  CHECK(staircase_gf_q1(0.2, 0.2) == doctest::Approx(0.076393).epsilon(1e-5));

  // q = 1: the continued fraction reproduces the quadratic root
  for (double t : {0.05, 0.1, 0.2, 0.24}) {
    CfracOptions opt;
    opt.tail = TailStart::Zero;
    CHECK(staircase_gf_cfrac({t, t, 1.0}, opt) == doctest::Approx(staircase_gf_q1(t, t)).epsilon(1e-12));
    opt.tail = TailStart::LocalFixedPoint;
    CHECK(staircase_gf_cfrac({t, t, 1.0}, opt) == doctest::Approx(staircase_gf_q1(t, t)).epsilon(1e-14));
  }
  // q < 1: H ratio and continued fraction
  for (const XYPoint p : {XYPoint{0.2, 0.2, 0.5}, XYPoint{0.3, 0.1, 0.9}, XYPoint{0.1, 0.5, 0.7},
                          XYPoint{0.5, 0.05, 0.3}}) {
    CAPTURE(p.x);
    CHECK(staircase_gf_explicit(p) == doctest::Approx(staircase_gf_cfrac(p)).epsilon(1e-12));
  }
  // near q = 1 the explicit route gives up; the continued fraction does not
  CHECK_THROWS_AS(staircase_gf_explicit({0.2, 0.2, 0.99}), ConvergenceError);
  CfracOptions local;
  local.tail = TailStart::LocalFixedPoint;
  CHECK(staircase_gf_cfrac({0.2, 0.2, 0.99}, local) == doctest::Approx(staircase_gf_q1(0.2, 0.2)).epsilon(2e-2));
  CHECK(staircase_gf({0.2, 0.2, 1.0 - 1e-9}) == doctest::Approx(staircase_gf_q1(0.2, 0.2)).epsilon(1e-7));
}

TEST_CASE("staircase function: small-x,y expansion starts at q x y") {
  const double x = 1e-4, y = 2e-4, q = 0.6;
  CHECK(staircase_gf_explicit({x, y, q}) / (q * x * y) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("functional equation") {
  CHECK(functional_equation_residual({0.0, 0.3, 0.5}) == 0.0);
  CHECK(functional_equation_residual({0.2, 0.2, 0.5}) < 1e-12);
  CHECK(functional_equation_residual({0.3, 0.1, 0.9}) < 1e-12);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uq(0.3, 0.95), ux(0.0, 0.25);
  for (int i = 0; i < 100; ++i) {
    const XYPoint p{ux(rng), ux(rng), uq(rng)};
    CHECK(functional_equation_residual(p) < 1e-12);
  }
}

TEST_CASE("q = 1 closed form and the branch point") {
  CHECK(vesicle_gf_q1(2.5, 0.0, 0.0) == 1.0);
  const double s = (0.8 - std::sqrt(0.6)) / 2;
  CHECK(s == doctest::Approx(0.012702).epsilon(1e-4));
  CHECK(vesicle_gf_q1(1.0, 0.1, 0.1) == doctest::Approx(1.0 / (1.0 - 0.2 - s)).epsilon(1e-14));
  CHECK(vesicle_gf_q1(1.0, 0.1, 0.1) == doctest::Approx(1.270).epsilon(1e-3));
  // radicand at x = y = 1/4 is zero
  CHECK(staircase_gf_q1(0.25, 0.25) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(staircase_gf_q1(0.26, 0.25), SingularityError);
  CHECK_THROWS_AS(vesicle_gf_q1(1.0, 0.26, 0.26), SingularityError);
  // beyond the simple pole at c = 2 (t_p = 0.2071...)
  CHECK_THROWS_AS(vesicle_gf_q1(2.0, 0.22, 0.22), SingularityError);
}

TEST_CASE("vesicle function representations agree") {
  CHECK(vesicle_gf_necklace(3.0, {0, 0, 0.5}) == 1.0);
  CHECK(vesicle_gf_cfrac(3.0, {0, 0, 0.5}, 5) == 1.0);
  CHECK(vesicle_gf_cfrac(1.0, {0.1, 0.1, 1.0}) == doctest::Approx(vesicle_gf_q1(1.0, 0.1, 0.1)).epsilon(1e-12));
  CHECK(vesicle_gf_cfrac(1.0, {0.1, 0.1, 0.5}) ==
        doctest::Approx(vesicle_gf_necklace(1.0, {0.1, 0.1, 0.5})).epsilon(1e-12));
  CHECK(vesicle_gf_necklace(1.0, {0.1, 0.1, 1.0}) == doctest::Approx(vesicle_gf_q1(1.0, 0.1, 0.1)).epsilon(1e-14));
  CHECK_THROWS_AS(vesicle_gf_necklace(5.0, {0.2, 0.2, 0.5}), SingularityError);
  CHECK_THROWS_AS(vesicle_gf_cfrac(1.0, {0.1, 0.1, 0.5}, 0), DomainError);
}

TEST_CASE("G substitution, symmetry and monotonicity") {
  CHECK(length_gf({1, 2, 1, 0.1}) == doctest::Approx(vesicle_gf_q1(1, 0.05, 0.2)).epsilon(1e-15));
  CHECK(length_gf({1.3, 2, 0.6, 0.1}) == doctest::Approx(length_gf({1.3, 0.5, 0.6, 0.1})).epsilon(1e-13));
  CHECK(length_gf({1.3, 3, 1, 0.1}) == doctest::Approx(length_gf({1.3, 1.0 / 3, 1, 0.1})).epsilon(1e-14));
  // t -> 0: G = 1 + Z_1 t + ..., Z_1 = c (s + 1/s)
  const double t = 1e-7;
  CHECK((length_gf({2, 1, 0.7, t}) - 1.0) / t == doctest::Approx(4.0).epsilon(1e-5));
  double prev = 0;
  for (double tt = 0.02; tt < 0.2; tt += 0.02) {
    const double g = length_gf({1.5, 1, 0.8, tt});
    CHECK(g > prev);
    prev = g;
  }
  CHECK(length_gf({1.6, 1, 0.8, 0.1}) > length_gf({1.5, 1, 0.8, 0.1}));
  CHECK_THROWS_AS(length_gf({1, 1, 1.5, 0.1}), DomainError);
  CHECK_THROWS_AS(length_gf({1, 1, 0.5, std::nullopt}), DomainError);
}

TEST_CASE("series in t") {
  const SeriesInT series = length_series(12);
  REQUIRE(series.coefficients.size() == 13);
  CHECK(series.coefficients[0] == LaurentPoly3::constant(1));
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(series.coefficients[n] == brute_force_partition(n));
  }
  CHECK(series.coefficients[12].coefficient({4, 0, 8}) > 0);
  CHECK_THROWS_AS(length_series(kMaxSeriesOrder + 1), BoundsError);
  CHECK_THROWS_AS(length_series(-1), BoundsError);
}

TEST_CASE("series evaluates to G inside the radius") {
  const SeriesInT series = length_series(24);
  const double c = 1.2, s = 0.8, q = 0.5, t = 0.05;
  long double sum = 0, tn = 1;
  for (const auto& z : series.coefficients) {
    sum += z.evaluate(c, s, q) * tn;
    tn *= t;
  }
  CHECK(static_cast<double>(sum) == doctest::Approx(length_gf({c, s, q, t})).epsilon(1e-13));
}

}  // TEST_SUITE
