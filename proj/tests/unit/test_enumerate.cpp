#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "vesicle/enumerate.hpp"
#include "vesicle/errors.hpp"

using namespace vesicle;

namespace {

LaurentPoly3 poly(std::initializer_list<std::pair<Monomial, int>> terms) {
  LaurentPoly3 p;
  for (const auto& [m, k] : terms) p.add_term(m, k);
  return p;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("small partition polynomials") {
  CHECK(brute_force_partition(0) == LaurentPoly3::constant(1));
  CHECK(brute_force_partition(1) == poly({{{1, 1, 0}, 1}, {{1, -1, 0}, 1}}));
  CHECK(brute_force_partition(2) ==
        poly({{{2, -2, 0}, 1}, {{2, 0, 0}, 2}, {{2, 2, 0}, 1}, {{1, 0, 1}, 1}}));
}

TEST_CASE("config stats") {
  SUBCASE("coincident walks") {
    for (const char* w : {"E", "NNEN", "ENENNNEE"}) {
      const auto st = config_stats(WalkPairConfig::from_strings(w, w));
      CHECK(st.area == 0);
      CHECK(st.contacts == st.length);
    }
  }
  SUBCASE("unit square") {
    const auto st = config_stats(WalkPairConfig::from_strings("NE", "EN"));
    CHECK(st == ConfigStats{2, 1, 0, 1});
  }
  SUBCASE("twelve-step example with four contacts and eight plaquettes") {
    const auto cfg = WalkPairConfig::from_strings("NENENEEENNEE", "EENNEEENENNE");
    const auto st = config_stats(cfg);
    CHECK(st.length == 12);
    CHECK(st.contacts == 4);
    CHECK(st.area == 8);
    CHECK(cfg.top_string() == "NENENEEENNEE");
  }
  SUBCASE("rejects crossing, unequal length and different endpoints") {
    CHECK_THROWS_AS(config_stats(WalkPairConfig::from_strings("EN", "NE")), InvariantError);
    CHECK_THROWS_AS(config_stats(WalkPairConfig::from_strings("NE", "E")), InvariantError);
    CHECK_THROWS_AS(config_stats(WalkPairConfig::from_strings("NN", "NE")), InvariantError);
  }
  CHECK_THROWS_AS(WalkPairConfig::from_strings("NX", "EN"), DomainError);
}

TEST_CASE("enumeration agrees with the 4^n mask oracle") {
  for (int n = 0; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(brute_force_partition(n) == oracle::partition_polynomial(n));
  }
}

TEST_CASE("unweighted counts are Catalan numbers") {
  for (int n = 0; n <= 13; ++n) {
    CAPTURE(n);
    CHECK(brute_force_partition(n).total() == oracle::catalan(n + 1));
  }
}

TEST_CASE("polynomial invariants") {
  BigInt previous = 0;
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const LaurentPoly3 z = brute_force_partition(n);
    CHECK(z.s_reflected() == z);
    CHECK(z.all_coefficients_positive());
    for (const auto& [m, k] : z.terms()) CHECK(((m.s - n) % 2 + 2) % 2 == 0);
    CHECK(z.total() > previous);
    previous = z.total();
  }
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(brute_force_partition(-1), BoundsError);
  CHECK_THROWS_AS(brute_force_partition(kMaxEnumerationLength + 1), BoundsError);
  int count = 0;
  for_each_pair(3, [&](const WalkPairConfig&) { ++count; });
  CHECK(count == 14);
  CHECK(enumerate_pairs(4).size() == 42);
}

TEST_CASE("transfer matrix examples") {
  CHECK(transfer_partition(2, {1, 1, 1, {}}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(transfer_partition(1, {2, 1, 0.5, {}}) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(transfer_partition(0, {3, 0.2, 0.7, {}}) == 1.0L);
}

TEST_CASE("transfer matrix matches the enumeration polynomial") {
  const ModelPoint points[] = {{1, 1, 1, {}}, {2, 1, 0.5, {}}, {0.75, 3, 0.9, {}}, {4.0 / 3.0, 0.25, 1.25, {}},
                               {1.5, 0.5, 0.3, {}}};
  for (int n = 0; n <= 12; ++n) {
    const LaurentPoly3 z = brute_force_partition(n);
    for (const auto& p : points) {
      CAPTURE(n);
      CAPTURE(p.c);
      const long double exact = z.evaluate(p.c, p.s, p.q);
      const long double dp = transfer_partition(n, p);
      CHECK(std::abs(dp - exact) <= 1e-12L * exact);
      CHECK(std::abs(log_transfer_partition(n, p) - std::log(exact)) <= 1e-12L * std::max(1.0L, std::log(exact)));
    }
  }
}

TEST_CASE("transfer matrix reports overflow") {
  CHECK_THROWS_AS(transfer_partition(4000, {1, 1, 2.0, {}}), OverflowError);
  CHECK_THROWS_AS(transfer_partition(5, {0, 1, 1, {}}), DomainError);
  CHECK_THROWS_AS(transfer_partition(5, {1, -1, 1, {}}), DomainError);
  // in range for the log form at moderate n
  CHECK(std::isfinite(static_cast<double>(log_transfer_partition(2000, {1, 1, 1, {}}))));
}

TEST_CASE("mean observables") {
  SUBCASE("examples") {
    auto m1 = mean_observables(1, {1, 1, 1, {}});
    CHECK(m1.contacts == doctest::Approx(1.0));
    CHECK(m1.area == doctest::Approx(0.0));
    auto m2 = mean_observables(2, {1, 1, 1, {}});
    CHECK(m2.contacts == doctest::Approx(9.0 / 5.0));
    CHECK(m2.area == doctest::Approx(1.0 / 5.0));
    auto m0 = mean_observables(0, {2, 3, 0.5, {}});
    CHECK(m0.contacts == 0.0L);
    CHECK(m0.area == 0.0L);
  }
  SUBCASE("weighted averages over the oracle configurations") {
    const ModelPoint p{1.7, 0.6, 0.8, {}};
    const auto all = mean_observables_upto(10, p);
    for (int n = 1; n <= 10; ++n) {
      long double z = 0, zm = 0, za = 0;
      for (const auto& st : oracle::all_pairs(n)) {
        const long double w = std::pow(1.7L, st.contacts) * std::pow(0.6L, st.height) * std::pow(0.8L, st.area);
        z += w;
        zm += w * st.contacts;
        za += w * st.area;
      }
      CAPTURE(n);
      CHECK(static_cast<double>(all[n].contacts) == doctest::Approx(static_cast<double>(zm / z)).epsilon(1e-12));
      CHECK(static_cast<double>(all[n].area) == doctest::Approx(static_cast<double>(za / z)).epsilon(1e-12));
      CHECK(static_cast<double>(mean_observables(n, p).area) ==
            doctest::Approx(static_cast<double>(all[n].area)).epsilon(1e-14));
    }
  }
}

TEST_CASE("bound phase area density from long walks") {
  // <a>_{2n} - <a>_n over n approaches the area per unit length; at c = 2
  // this is sqrt(2)/4 (see area_density_q1_s1).
  const auto means = mean_observables_upto(4000, {2, 1, 1, {}});
  const double slope = static_cast<double>((means[4000].area - means[2000].area) / 2000);
  CHECK(slope == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-4));
  const double contacts = static_cast<double>((means[4000].contacts - means[2000].contacts) / 2000);
  CHECK(contacts == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-4));
}

TEST_CASE("finite-size exponent input checks") {
  const int three[] = {10, 20, 40};
  CHECK_THROWS_AS(finite_size_exponent(Observable::Area, {1, 1, 1, {}}, three), FitDomainError);
  const int unsorted[] = {10, 40, 20, 80};
  CHECK_THROWS_AS(finite_size_exponent(Observable::Area, {1, 1, 1, {}}, unsorted), FitDomainError);
  const int grid[] = {100, 200, 400, 800};
  const auto fit = finite_size_exponent(Observable::Area, {1, 1, 0.9, {}}, grid);
  CHECK(fit.exponent == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("length grid") {
  const auto g = length_grid(125, 1000, 10);
  CHECK(g.front() == 125);
  CHECK(g.back() == 1000);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK(length_grid(2, 5, 10).size() == 4);
  CHECK_THROWS_AS(length_grid(10, 5, 3), DomainError);
}

}  // TEST_SUITE
