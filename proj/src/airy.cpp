#include "vesicle/airy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vesicle/errors.hpp"

namespace vesicle {
namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

struct Constants {
  Wide ai0;
  Wide ai0_prime;
};

const Constants& constants() {
  static const Constants k = [] {
    const Wide three = 3;
    const Wide third = Wide(1) / 3;
    Constants c;
    c.ai0 = 1 / (pow(three, 2 * third) * boost::math::tgamma(2 * third));
    c.ai0_prime = -1 / (pow(three, third) * boost::math::tgamma(third));
    return c;
  }();
  return k;
}

// Newton iteration with the derivative supplied by `step`.
template <class Step>
double newton(double z, Step step) {
  for (int it = 0; it < 60; ++it) {
    const double dz = step(z);
    z -= dz;
    if (std::abs(dz) < 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

AiryValue airy(double z) {
  if (!(std::abs(z) <= kAiryMaxAbsArgument)) {
    throw DomainError("airy: |z| must be <= 12, got " + std::to_string(z));
  }
  const Wide w = z;
  const Wide w3 = w * w * w;
  const Wide eps = Wide("1e-48");

  // f = sum a_k, a_0 = 1, a_{k+1} = a_k z^3 / ((3k+2)(3k+3))
  // g = sum b_k, b_0 = z, b_{k+1} = b_k z^3 / ((3k+3)(3k+4))
  // f' = sum p_k, p_1 = z^2/2, p_{k+1} = p_k z^3 / (3k (3k+2))
  // g' = sum r_k, r_0 = 1, r_{k+1} = r_k z^3 / ((3k+1)(3k+3))
  Wide a = 1, b = w, p = w * w / 2, r = 1;
  Wide f = a, g = b, fp = p, gp = r;
  for (int k = 0; k < 400; ++k) {
    a *= w3 / ((3 * k + 2) * (3 * k + 3));
    b *= w3 / ((3 * k + 3) * (3 * k + 4));
    r *= w3 / ((3 * k + 1) * (3 * k + 3));
    if (k >= 1) p *= w3 / ((3 * k) * (3 * k + 2));
    f += a;
    g += b;
    gp += r;
    if (k >= 1) fp += p;
    const Wide biggest = std::max({Wide(abs(a)), Wide(abs(b)), Wide(abs(p)), Wide(abs(r))});
    if (k > 2 && biggest < eps) break;
  }
  const auto& k = constants();
  AiryValue out;
  out.z = z;
  out.ai = static_cast<double>(k.ai0 * f + k.ai0_prime * g);
  out.ai_prime = static_cast<double>(k.ai0 * fp + k.ai0_prime * gp);
  return out;
}

double airy_ai_at_zero() { return static_cast<double>(constants().ai0); }
double airy_ai_prime_at_zero() { return static_cast<double>(constants().ai0_prime); }

double airy_ai_first_zero() {
  static const double zero = newton(-2.3, [](double z) {
    const AiryValue v = airy(z);
    return v.ai / v.ai_prime;
  });
  return zero;
}

double airy_ai_prime_first_zero() {
  // Ai'' = z Ai.
  static const double zero = newton(-1.0, [](double z) {
    const AiryValue v = airy(z);
    return v.ai_prime / (z * v.ai);
  });
  return zero;
}

}  // namespace vesicle
