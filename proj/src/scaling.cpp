#include "vesicle/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "vesicle/errors.hpp"

namespace vesicle {
namespace {

struct Line {
  double slope;
  double intercept;
};

Line least_squares(std::span<const double> u, std::span<const double> v) {
  const auto n = static_cast<double>(u.size());
  double su = 0, sv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sv += v[i];
  }
  const double mu = su / n, mv = sv / n;
  double suu = 0, suv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suv += (u[i] - mu) * (v[i] - mv);
  }
  if (suu == 0.0) throw FitDomainError("degenerate abscissae in least-squares fit");
  const double slope = suv / suu;
  return {slope, mv - slope * mu};
}

void check_fit_input(std::span<const double> xs, std::span<const double> ys, std::size_t min_points) {
  if (xs.size() != ys.size()) throw FitDomainError("fit: x and y sizes differ");
  if (xs.size() < min_points) throw FitDomainError("fit: too few points");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0) || !std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw FitDomainError("fit: non-positive or non-finite value at index " + std::to_string(i));
    }
  }
}

double correction_variable(double x, Asymptote toward, double correction) {
  return toward == Asymptote::ZeroLimit ? std::pow(x, correction) : std::pow(x, -correction);
}

}  // namespace

ScalingFit fit_power_law(std::span<const double> xs, std::span<const double> ys) {
  check_fit_input(xs, ys, 2);
  std::vector<double> lx(xs.size()), ly(ys.size());
  std::transform(xs.begin(), xs.end(), lx.begin(), [](double v) { return std::log(v); });
  std::transform(ys.begin(), ys.end(), ly.begin(), [](double v) { return std::log(v); });
  const Line line = least_squares(lx, ly);

  ScalingFit fit;
  fit.exponent = line.slope;
  fit.amplitude = std::exp(line.intercept);
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  fit.window_min = *lo;
  fit.window_max = *hi;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(ly[i] - (line.intercept + line.slope * lx[i])));
  }
  for (std::size_t i = 0; i + 1 < lx.size(); ++i) {
    fit.successive_slopes.push_back((ly[i + 1] - ly[i]) / (lx[i + 1] - lx[i]));
  }
  return fit;
}

double extrapolate_slopes(std::span<const double> xs, std::span<const double> ys,
                          Asymptote toward, double correction, int tail) {
  check_fit_input(xs, ys, 3);
  std::vector<double> g, slope;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double mid = std::sqrt(xs[i] * xs[i + 1]);
    g.push_back(correction_variable(mid, toward, correction));
    slope.push_back(std::log(ys[i + 1] / ys[i]) / std::log(xs[i + 1] / xs[i]));
  }
  // Keep the `tail` slopes nearest the asymptote (smallest g).
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g[a] < g[b]; });
  const auto keep = std::min<std::size_t>(std::max(tail, 2), order.size());
  std::vector<double> gu, su;
  for (std::size_t k = 0; k < keep; ++k) {
    gu.push_back(g[order[k]]);
    su.push_back(slope[order[k]]);
  }
  return least_squares(gu, su).intercept;
}

double extrapolate_amplitude(std::span<const double> xs, std::span<const double> ys,
                             double exponent, Asymptote toward, double correction) {
  check_fit_input(xs, ys, 2);
  std::vector<double> g, ratio;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    g.push_back(correction_variable(xs[i], toward, correction));
    ratio.push_back(ys[i] / std::pow(xs[i], exponent));
  }
  return least_squares(g, ratio).intercept;
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo)) throw DomainError("geometric_grid: need 0 < lo < hi and count >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  out.back() = hi;
  return out;
}

}  // namespace vesicle
