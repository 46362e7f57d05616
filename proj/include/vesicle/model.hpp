#pragma once

#include <optional>

namespace vesicle {

/// A parameter point of the vesicle model: contact fugacity c, pull
/// fugacity s, area fugacity q and (optionally) the length fugacity t.
struct ModelPoint {
  double c = 1.0;
  double s = 1.0;
  double q = 1.0;
  std::optional<double> t;
};

/// Step-direction variables of the generating function F(c, x, y, q).
/// Under the length substitution x = t / s and y = t * s.
struct XYPoint {
  double x = 0.0;
  double y = 0.0;
  double q = 1.0;
};

inline XYPoint to_xy(double t, double s, double q) { return {t / s, t * s, q}; }

/// Throws DomainError unless c, s, q are finite and strictly positive.
void require_positive_fugacities(double c, double s, double q);

}  // namespace vesicle
