#pragma once

#include <compare>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace vesicle {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent triple of a monomial c^c s^s q^q. The s exponent may be negative.
struct Monomial {
  int c = 0;
  int s = 0;
  int q = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Polynomial in c and q, Laurent in s, with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so equality of two
/// polynomials is equality of their term maps.
class LaurentPoly3 {
public:
  using Terms = std::map<Monomial, BigInt>;

  LaurentPoly3() = default;
  explicit LaurentPoly3(Terms terms);

  static LaurentPoly3 constant(const BigInt& value);
  static LaurentPoly3 monomial(Monomial m, const BigInt& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m (zero when absent).
  BigInt coefficient(const Monomial& m) const;

  /// Adds coeff * m in place.
  void add_term(const Monomial& m, const BigInt& coeff);

  LaurentPoly3& operator+=(const LaurentPoly3& other);
  friend LaurentPoly3 operator+(LaurentPoly3 a, const LaurentPoly3& b) { return a += b; }
  friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b);

  /// Multiplies every monomial by c^dc s^ds q^dq.
  LaurentPoly3 shifted(int dc, int ds, int dq) const;

  /// Value at a numeric point, accumulated in extended precision.
  long double evaluate(long double c, long double s, long double q) const;

  /// Sum of all coefficients (the value at c = s = q = 1).
  BigInt total() const;

  bool all_coefficients_positive() const;

  /// Image under s -> 1/s.
  LaurentPoly3 s_reflected() const;

  friend bool operator==(const LaurentPoly3&, const LaurentPoly3&) = default;

private:
  Terms terms_;
};

/// Canonical form: array of {"c", "s", "q", "coeff"} objects sorted by
/// (c, s, q), coefficient as a decimal string.
nlohmann::json to_json(const LaurentPoly3& p);
LaurentPoly3 laurent_from_json(const nlohmann::json& j);

/// Human-readable rendering, e.g. "c^2*s^-2 + 2*c^2 + c*q".
std::string to_string(const LaurentPoly3& p);

}  // namespace vesicle
