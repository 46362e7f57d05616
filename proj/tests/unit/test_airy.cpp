#include <cmath>

#include <boost/math/special_functions/airy.hpp>

#include "doctest.h"
#include "vesicle/airy.hpp"
#include "vesicle/errors.hpp"

using namespace vesicle;

TEST_SUITE("airy") {

TEST_CASE("values at the origin") {
  CHECK(airy_ai_at_zero() == doctest::Approx(0.355028053887817239).epsilon(1e-15));
  CHECK(airy_ai_prime_at_zero() == doctest::Approx(-0.258819403792806798).epsilon(1e-15));
  const AiryValue a = airy(0.0);
  CHECK(std::abs(a.ai - 0.3550280538878172) < 1e-12);
  CHECK(std::abs(a.ai_prime + 0.2588194037928068) < 1e-12);
  CHECK(a.z == 0.0);
}

TEST_CASE("agrees with Boost.Math across the domain") {
  for (double z = -12.0; z <= 12.0; z += 0.37) {
    CAPTURE(z);
    const AiryValue a = airy(z);
    const double ai = boost::math::airy_ai(z), dai = boost::math::airy_ai_prime(z);
    // relative where the value is sizeable, absolute near zeros
    CHECK(std::abs(a.ai - ai) <= 1e-12 * std::max(std::abs(ai), 1e-3));
    CHECK(std::abs(a.ai_prime - dai) <= 1e-12 * std::max(std::abs(dai), 1e-3));
  }
}

TEST_CASE("Wronskian Ai Bi' - Ai' Bi = 1/pi") {
  for (double z : {-7.5, -2.0, 0.3, 4.0, 11.0}) {
    const AiryValue a = airy(z);
    const double w = a.ai * boost::math::airy_bi_prime(z) - a.ai_prime * boost::math::airy_bi(z);
    CHECK(w == doctest::Approx(1.0 / M_PI).epsilon(1e-11));
  }
}

TEST_CASE("first zeros") {
  CHECK(airy_ai_first_zero() == doctest::Approx(-2.33810741045976703849).epsilon(1e-15));
  CHECK(airy_ai_first_zero() == doctest::Approx(boost::math::airy_ai_zero<double>(1)).epsilon(1e-14));
  const double a1p = airy_ai_prime_first_zero();
  CHECK(a1p == doctest::Approx(-1.0187929716474710890).epsilon(1e-15));
  CHECK(std::abs(boost::math::airy_ai_prime(a1p)) < 1e-14);
  // Ai > 0 to the right of a_1
  for (double z = -2.3; z <= 12.0; z += 0.1) CHECK(airy(z).ai > 0.0);
}

TEST_CASE("domain") {
  CHECK_NOTHROW(airy(12.0));
  CHECK_NOTHROW(airy(-12.0));
  CHECK_THROWS_AS(airy(12.01), DomainError);
  CHECK_THROWS_AS(airy(-40.0), DomainError);
  CHECK_THROWS_AS(airy(std::nan("")), DomainError);
}

}  // TEST_SUITE
