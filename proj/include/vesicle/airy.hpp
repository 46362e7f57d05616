#pragma once

namespace vesicle {

struct AiryValue {
  double z = 0.0;
  double ai = 0.0;
  double ai_prime = 0.0;
};

/// Largest |z| accepted by airy().
inline constexpr double kAiryMaxAbsArgument = 12.0;

/// Ai and Ai' from the two Maclaurin solutions f, g of w'' = z w,
///   Ai = Ai(0) f + Ai'(0) g,
/// summed in 50-digit binary floating point so the cancellation for large
/// |z| stays below double precision. Throws DomainError for |z| > 12.
AiryValue airy(double z);

/// Ai(0) = 3^{-2/3} / Gamma(2/3) and Ai'(0) = -3^{-1/3} / Gamma(1/3).
double airy_ai_at_zero();
double airy_ai_prime_at_zero();

/// a_1, the first (negative) zero of Ai.
double airy_ai_first_zero();

/// a'_1, the first (negative) zero of Ai'.
double airy_ai_prime_first_zero();

}  // namespace vesicle
