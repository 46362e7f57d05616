#include <string>

#include "vesicle/errors.hpp"
#include "vesicle/qseries.hpp"

namespace vesicle {
namespace {

// Within t-degree n every monomial of S is x^{n_x} y^{n_y} q^a with
// x = t/s, y = t s, so its s exponent is h = n_y - n_x and n_x = (n - h) / 2.
// Replacing x by q x multiplies it by q^{n_x}.
LaurentPoly3 substitute_qx(const LaurentPoly3& p, int degree) {
  LaurentPoly3 out;
  for (const auto& [m, k] : p.terms()) out.add_term({m.c, m.s, m.q + (degree - m.s) / 2}, k);
  return out;
}

const LaurentPoly3 kX = LaurentPoly3::monomial({0, -1, 0});
const LaurentPoly3 kY = LaurentPoly3::monomial({0, 1, 0});

}  // namespace

SeriesInT length_series(int order) {
  if (order < 0 || order > kMaxSeriesOrder) {
    throw BoundsError("series order must be in [0, " + std::to_string(kMaxSeriesOrder) + "], got " +
                      std::to_string(order));
  }
  const auto size = static_cast<std::size_t>(order) + 1;

  // S = [q x + S(q x)] [y + S], solved degree by degree: both factors start
  // at degree 1, so degree n of S only needs S up to degree n - 1.
  std::vector<LaurentPoly3> staircase(size), left(size), right(size);
  for (int n = 1; n <= order; ++n) {
    LaurentPoly3 s_n;
    for (int i = 1; i < n; ++i) s_n += left[i] * right[n - i];
    staircase[n] = std::move(s_n);
    left[n] = substitute_qx(staircase[n], n);
    right[n] = staircase[n];
    if (n == 1) {
      left[n] += kX.shifted(0, 0, 1);
      right[n] += kY;
    }
  }

  // Necklace: F = 1 / (1 - P) with P = c (x + y + S), i.e. F_n = sum_i P_i F_{n-i}.
  std::vector<LaurentPoly3> bead(size);
  for (int n = 1; n <= order; ++n) {
    LaurentPoly3 p = staircase[n];
    if (n == 1) p += kX + kY;
    bead[n] = p.shifted(1, 0, 0);
  }
  SeriesInT series;
  series.coefficients.resize(size);
  series.coefficients[0] = LaurentPoly3::constant(1);
  for (int n = 1; n <= order; ++n) {
    LaurentPoly3 f_n;
    for (int i = 1; i <= n; ++i) f_n += bead[i] * series.coefficients[n - i];
    series.coefficients[n] = std::move(f_n);
  }
  return series;
}

}  // namespace vesicle
