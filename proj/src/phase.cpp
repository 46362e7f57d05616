#include "vesicle/phase.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "vesicle/airy.hpp"
#include "vesicle/errors.hpp"

namespace vesicle {
namespace {

void require_positive_s(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("s must be finite and positive");
}

// Eq. for the q = 1 pole without the validity check; analytic for c > 1.
double pole_formula(double c, double s) {
  const double s2 = s * s;
  const double radicand = ((1 + s2) * (1 + s2) * c - (1 - s2) * (1 - s2)) * (c - 1);
  return ((1 - c) * (1 + s2) + std::sqrt(std::max(radicand, 0.0))) / (2 * c * s);
}

// One Richardson step on a central difference: (4 D(h/2) - D(h)) / 3.
template <class F>
double central_richardson(F&& f, double h) {
  const double d1 = (f(h) - f(-h)) / (2 * h);
  const double d2 = (f(h / 2) - f(-h / 2)) / h;
  return (4 * d2 - d1) / 3;
}

bool in_q1_band(double q) { return q >= 1.0 - kNearOneBand && q <= 1.0; }

constexpr double kMaxBracket = 1e6;

}  // namespace

std::string_view to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::SquareRootBranch: return "square_root_branch";
    case SingularityKind::SimplePole: return "simple_pole";
    case SingularityKind::None: return "none";
  }
  return "?";
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Unbound: return "unbound";
    case Phase::Bound: return "bound";
    case Phase::Critical: return "critical";
    case Phase::Deflated: return "deflated";
    case Phase::Inflated: return "inflated";
  }
  return "?";
}

double branch_point(double s) {
  require_positive_s(s);
  return s / ((1 + s) * (1 + s));
}

double binding_threshold(double s) {
  require_positive_s(s);
  return (s + 1) * (s + 1) / (s * s + s + 1);
}

double pole_q1(double c, double s) {
  require_positive_fugacities(c, s, 1.0);
  const double cs = binding_threshold(s);
  if (c < cs - kCriticalTolerance) {
    throw DomainError("pole formula invalid below c_s: c=" + std::to_string(c) + " < c_s=" + std::to_string(cs));
  }
  return pole_formula(c, s);
}

SingularityResult dominant_singularity_q1(double c, double s) {
  require_positive_fugacities(c, s, 1.0);
  const double gap = c - binding_threshold(s);
  if (std::abs(gap) <= kCriticalTolerance) return {branch_point(s), SingularityKind::SquareRootBranch, Phase::Critical};
  if (gap < 0) return {branch_point(s), SingularityKind::SquareRootBranch, Phase::Unbound};
  return {pole_formula(c, s), SingularityKind::SimplePole, Phase::Bound};
}

double contact_fugacity_at_pole(double t, double s, double q, int depth) {
  require_positive_fugacities(1.0, s, q);
  if (!(t > 0.0)) throw DomainError("t_p must be positive");
  const XYPoint p = to_xy(t, s, q);
  return static_cast<double>(1.0L / (p.x + staircase_tail_fixed(p, depth, TailStart::LocalFixedPoint)));
}

double contact_fugacity_at_pole(double t, double s, double q, const CfracOptions& opt) {
  require_positive_fugacities(1.0, s, q);
  if (!(t > 0.0)) throw DomainError("t_p must be positive");
  const XYPoint p = to_xy(t, s, q);
  CfracOptions o = opt;
  o.tail = TailStart::LocalFixedPoint;
  return static_cast<double>(1.0L / (p.x + staircase_tail(p, o).value));
}

SingularityResult pole_location(double c, double s, double q, const RootOptions& opt) {
  require_positive_fugacities(c, s, q);
  if (!(q < 1.0)) throw DomainError("pole_location requires q < 1; use classify for q >= 1");

  // c(t) - c, with anything past the first singular convergent counted as "beyond".
  struct Sample {
    bool beyond;
    double c;
  };
  auto sample = [&](double t) -> Sample {
    try {
      return {false, contact_fugacity_at_pole(t, s, q)};
    } catch (const SingularityError&) {
      return {true, 0.0};
    }
  };

  double lo = 0.0, c_lo = std::numeric_limits<double>::infinity();
  double hi = branch_point(s), c_hi = 0.0;
  for (;;) {
    const Sample v = sample(hi);
    if (v.beyond || v.c <= c) {
      c_hi = v.beyond ? 0.0 : v.c;
      break;
    }
    lo = hi;
    c_lo = v.c;
    hi *= 1.25;
    if (hi > kMaxBracket) {
      throw ConvergenceError("pole_location: no pole found below t=" + std::to_string(kMaxBracket) +
                             " (c=" + std::to_string(c) + ", s=" + std::to_string(s) + ", q=" + std::to_string(q) + ")");
    }
  }

  while (hi - lo > opt.abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const Sample v = sample(mid);
    if (!v.beyond && (v.c > c_lo || v.c < c_hi)) {
      throw InvariantError("pole_location: c(t_p) not monotone near t=" + std::to_string(mid));
    }
    if (v.beyond || v.c <= c) {
      hi = mid;
      if (!v.beyond) c_hi = v.c;
    } else {
      lo = mid;
      c_lo = v.c;
    }
  }
  return {0.5 * (lo + hi), SingularityKind::SimplePole, Phase::Deflated};
}

SingularityResult classify(double c, double s, double q, const RootOptions& opt) {
  require_positive_fugacities(c, s, q);
  if (q > 1.0) return {0.0, SingularityKind::None, Phase::Inflated};
  if (q == 1.0) return dominant_singularity_q1(c, s);
  if (in_q1_band(q)) {
    // Closed-form location; the singularity is a pole for any q < 1.
    return {dominant_singularity_q1(c, s).t_c, SingularityKind::SimplePole, Phase::Deflated};
  }
  return pole_location(c, s, q, opt);
}

double contact_density_q1(double c, double s) {
  require_positive_fugacities(c, s, 1.0);
  if (c <= binding_threshold(s) + kCriticalTolerance) return 0.0;
  const double s2 = s * s;
  const double root = std::sqrt(((1 + s2) * (1 + s2) * c - (1 - s2) * (1 - s2)) * (c - 1));
  return (c - 2) / (2 * (c - 1)) + c * (1 + s2) / (2 * root);
}

double area_density_q1_s1(double c) {
  if (!(c > 4.0 / 3.0)) throw DomainError("A(c,1,1) is undefined for c <= 4/3");
  return (std::sqrt(c * (c - 1)) - (c - 2)) / (2 * (3 * c - 4));
}

double area_density_q1(double c, double s) {
  require_positive_fugacities(c, s, 1.0);
  if (!(c > binding_threshold(s) + kCriticalTolerance)) throw DomainError("A(c,s,1) is undefined for c <= c_s(s)");
  const double t = pole_formula(c, s);
  const double x = t / s, y = t * s;
  const double R = x * x - 2 * x * y + y * y - 2 * x - 2 * y + 1;
  const double root = std::sqrt(R);
  const double S = (1 - x - y - root) / 2;
  const double Sx = (-1 - (2 * x - 2 * y - 2) / (2 * root)) / 2;
  const double Sy = (-1 - (2 * y - 2 * x - 2) / (2 * root)) / 2;
  const double P = x + S, Q = y + S;
  const double Sq = x * (1 + Sx) * Q / (1 - P - Q);
  const double dphi_dt = (1 + Sx) / s + (1 + Sy) * s;
  return Sq / (t * dphi_dt);
}

Densities densities(double c, double s, double q, const RootOptions& opt) {
  require_positive_fugacities(c, s, q);
  if (q > 1.0) return {0.0, std::nullopt};

  if (in_q1_band(q)) {
    if (c <= binding_threshold(s) + kCriticalTolerance) return {0.0, std::nullopt};
    const double log_c = std::log(c);
    const double hc = std::min(1e-4, 0.5 * log_c);
    const double contacts =
        -central_richardson([&](double d) { return std::log(pole_formula(std::exp(log_c + d), s)); }, hc);

    // A one-sided difference in q loses accuracy as c -> c_s; the implicit derivative does not.
    const double area = area_density_q1(c, s);
    return {contacts, area};
  }

  const double log_c = std::log(c), log_q = std::log(q);
  const double contacts = -central_richardson(
      [&](double d) { return std::log(pole_location(std::exp(log_c + d), s, q, opt).t_c); }, 1e-4);
  const double hq = std::min(1e-4, 1e-2 * (1.0 - q));
  const double area = -central_richardson(
      [&](double d) { return std::log(pole_location(c, s, std::exp(log_q + d), opt).t_c); }, hq);
  return {contacts, area};
}

double staircase_airy_asymptotic(double t, double eps) {
  if (!(eps > 0.0) || eps > 0.05) throw DomainError("Airy asymptotic requires eps = 1 - q in (0, 0.05]");
  const double z = std::cbrt(4.0) * (1 - 4 * t) * std::pow(eps, -2.0 / 3.0);
  if (!(std::abs(z) <= kAiryMaxAbsArgument)) {
    throw DomainError("Airy asymptotic: scaling variable z=" + std::to_string(z) + " outside |z| <= 12");
  }
  if (z <= airy_ai_first_zero()) throw SingularityError("Airy asymptotic: Ai vanishes on the path to z", z);
  const AiryValue a = airy(z);
  return 0.25 + std::pow(4.0, -2.0 / 3.0) * std::cbrt(eps) * a.ai_prime / a.ai;
}

double contact_fugacity_airy_asymptotic(double t, double eps) {
  const double S = staircase_airy_asymptotic(t, eps);
  return 1.0 / (0.75 + (S - 0.25));
}

double critical_pole_amplitude() { return -airy_ai_prime_first_zero() * std::pow(4.0, -4.0 / 3.0); }

ScalingFit pole_scaling_at_threshold(std::span<const double> epsilons, double c) {
  if (epsilons.size() < 5) throw FitDomainError("pole scaling needs at least 5 values of eps");
  std::vector<double> ys;
  ys.reserve(epsilons.size());
  for (double e : epsilons) {
    if (!(e > 0.0) || e > 1e-2) throw DomainError("pole scaling requires eps in (0, 1e-2]");
    ys.push_back(pole_location(c, 1.0, 1.0 - e).t_c - 0.25);
  }
  ScalingFit fit = fit_power_law(epsilons, ys);
  fit.extrapolated_exponent = extrapolate_slopes(epsilons, ys, Asymptote::ZeroLimit, 1.0 / 3.0);
  fit.extrapolated_amplitude = extrapolate_amplitude(epsilons, ys, 2.0 / 3.0, Asymptote::ZeroLimit, 1.0 / 3.0);
  return fit;
}

std::string_view to_string(CrossoverLaw law) {
  switch (law) {
    case CrossoverLaw::ContactsVsQ: return "M_of_q";
    case CrossoverLaw::AreaVsQ: return "A_of_q";
    case CrossoverLaw::ContactsVsC: return "M_of_c";
    case CrossoverLaw::AreaVsC: return "A_of_c";
  }
  return "?";
}

double crossover_exponent(CrossoverLaw law) {
  switch (law) {
    case CrossoverLaw::ContactsVsQ: return 1.0 / 3.0;
    case CrossoverLaw::AreaVsQ: return -1.0 / 3.0;
    case CrossoverLaw::ContactsVsC: return 1.0;
    case CrossoverLaw::AreaVsC: return -1.0;
  }
  return 0.0;
}

double crossover_amplitude(CrossoverLaw law) {
  const double a1p = airy_ai_prime_first_zero();
  switch (law) {
    case CrossoverLaw::ContactsVsQ: return 3.0 / (-a1p * std::pow(4.0, 2.0 / 3.0));
    case CrossoverLaw::AreaVsQ: return -a1p * std::cbrt(2.0) / 3.0;
    case CrossoverLaw::ContactsVsC: return 27.0 / 8.0;
    // Leading term of area_density_q1_s1 at c = 4/3 + d: (4/3) / (6 d).
    case CrossoverLaw::AreaVsC: return 2.0 / 9.0;
  }
  return 0.0;
}

ScalingFit crossover_scaling(CrossoverLaw law, std::span<const double> window) {
  if (window.size() < 5) throw FitDomainError("crossover fit needs at least 5 points");
  const double cs = 4.0 / 3.0;
  std::vector<double> ys;
  ys.reserve(window.size());
  for (double e : window) {
    if (!(e > 0.0) || e > 1e-2) throw DomainError("crossover window must lie in (0, 1e-2]");
    switch (law) {
      case CrossoverLaw::ContactsVsQ: ys.push_back(densities(cs, 1.0, 1.0 - e).contacts); break;
      case CrossoverLaw::AreaVsQ: ys.push_back(*densities(cs, 1.0, 1.0 - e).area); break;
      case CrossoverLaw::ContactsVsC: ys.push_back(densities(cs + e, 1.0, 1.0).contacts); break;
      case CrossoverLaw::AreaVsC: ys.push_back(area_density_q1(cs + e, 1.0)); break;
    }
  }
  const bool q_side = law == CrossoverLaw::ContactsVsQ || law == CrossoverLaw::AreaVsQ;
  const double correction = q_side ? 1.0 / 3.0 : 1.0;
  ScalingFit fit = fit_power_law(window, ys);
  fit.extrapolated_exponent = extrapolate_slopes(window, ys, Asymptote::ZeroLimit, correction);
  fit.extrapolated_amplitude =
      extrapolate_amplitude(window, ys, crossover_exponent(law), Asymptote::ZeroLimit, correction);
  return fit;
}

}  // namespace vesicle
