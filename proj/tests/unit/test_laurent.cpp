#include "doctest.h"
#include "vesicle/errors.hpp"
#include "vesicle/laurent_poly.hpp"

using namespace vesicle;

TEST_SUITE("laurent") {

TEST_CASE("zero coefficients are dropped") {
  LaurentPoly3 p = LaurentPoly3::monomial({1, 2, 0}, 3);
  p.add_term({1, 2, 0}, -3);
  CHECK(p.empty());
  CHECK(p == LaurentPoly3{});
  CHECK(to_string(p) == "0");
}

TEST_CASE("arithmetic") {
  const auto a = LaurentPoly3::monomial({1, 1, 0}) + LaurentPoly3::monomial({1, -1, 0});
  const auto sq = a * a;
  CHECK(sq.coefficient({2, 0, 0}) == 2);
  CHECK(sq.coefficient({2, 2, 0}) == 1);
  CHECK(sq.coefficient({2, -2, 0}) == 1);
  CHECK(sq.coefficient({0, 0, 0}) == 0);
  CHECK(a.shifted(1, -1, 2).coefficient({2, 0, 2}) == 1);
  CHECK(sq.s_reflected() == sq);
  CHECK(sq.total() == 4);
  CHECK(sq.evaluate(2, 1, 1) == doctest::Approx(16.0));
  CHECK(sq.evaluate(1, 2, 1) == doctest::Approx(6.25));
}

TEST_CASE("big coefficients") {
  BigInt big("123456789012345678901234567890");
  const auto p = LaurentPoly3::monomial({0, 0, 3}, big);
  const auto sq = p * p;
  CHECK(sq.coefficient({0, 0, 6}) == big * big);
  CHECK(laurent_from_json(to_json(sq)) == sq);
}

TEST_CASE("canonical JSON") {
  LaurentPoly3 p;
  p.add_term({2, 2, 0}, 1);
  p.add_term({1, 0, 1}, 1);
  p.add_term({2, -2, 0}, 1);
  p.add_term({2, 0, 0}, 2);
  const auto j = to_json(p);
  CHECK(j.dump() ==
        R"([{"c":1,"coeff":"1","q":1,"s":0},{"c":2,"coeff":"1","q":0,"s":-2},)"
        R"({"c":2,"coeff":"2","q":0,"s":0},{"c":2,"coeff":"1","q":0,"s":2}])");
  CHECK(laurent_from_json(j) == p);
  CHECK(to_string(p) == "c*q + c^2*s^-2 + 2*c^2 + c^2*s^2");
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::object()), DomainError);
}

}  // TEST_SUITE
