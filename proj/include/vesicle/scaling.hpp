#pragma once

#include <span>
#include <vector>

namespace vesicle {

/// Result of a power-law fit y ~ amplitude * x^exponent on log-log axes.
struct ScalingFit {
  double exponent = 0.0;   // least-squares slope over the whole window
  double amplitude = 0.0;  // exp(intercept) of the same fit
  double window_min = 0.0;
  double window_max = 0.0;
  double max_residual = 0.0;  // worst |log y - fitted log y|

  // Local slopes between consecutive points and the value obtained by
  // extrapolating them to the asymptotic end of the window.
  std::vector<double> successive_slopes;
  double extrapolated_exponent = 0.0;

  // Amplitude of the law at a prescribed exponent, extrapolated to the
  // asymptotic end (set only by fits that are given a reference exponent).
  double extrapolated_amplitude = 0.0;
};

/// Which end of the window is the asymptotic one.
enum class Asymptote { ZeroLimit, InfiniteLimit };

/// Least-squares log-log fit. Throws FitDomainError on non-positive data,
/// mismatched sizes or fewer than two points.
ScalingFit fit_power_law(std::span<const double> xs, std::span<const double> ys);

/// Successive-slope extrapolation: the local slopes between consecutive points
/// are regressed on g(x_mid) = x_mid^{+correction} (ZeroLimit) or
/// x_mid^{-correction} (InfiniteLimit) using the `tail` points closest to the
/// asymptote, and the intercept g = 0 is returned.
double extrapolate_slopes(std::span<const double> xs, std::span<const double> ys,
                          Asymptote toward, double correction, int tail = 3);

/// Amplitude of y ~ A x^exponent with the corrections A + B g(x) removed by a
/// linear regression of y / x^exponent on g(x) over the whole window.
double extrapolate_amplitude(std::span<const double> xs, std::span<const double> ys,
                             double exponent, Asymptote toward, double correction);

/// n geometrically spaced points between lo and hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int count);

}  // namespace vesicle
