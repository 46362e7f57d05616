#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "vesicle/qseries.hpp"
#include "vesicle/scaling.hpp"

namespace vesicle {

enum class SingularityKind { SquareRootBranch, SimplePole, None };
enum class Phase { Unbound, Bound, Critical, Deflated, Inflated };

std::string_view to_string(SingularityKind kind);
std::string_view to_string(Phase phase);

/// Dominant (smallest positive) singularity of G(c, s, q, t) in t.
/// For the inflated phase there is none: t_c = 0 and kind = None.
struct SingularityResult {
  double t_c = 0.0;
  SingularityKind kind = SingularityKind::None;
  Phase phase = Phase::Unbound;
};

/// Contact and area densities per unit length. `area` is empty where the
/// density does not exist (unbound and critical at q = 1, and q > 1).
struct Densities {
  double contacts = 0.0;
  std::optional<double> area;
};

/// Absolute tolerance on c - c_s(s) for the critical label at q = 1.
inline constexpr double kCriticalTolerance = 1e-12;

/// t_r(s) = s / (1 + s)^2, square-root branch point of G at q = 1.
double branch_point(double s);

/// c_s(s) = (s + 1)^2 / (s^2 + s + 1), the binding threshold at q = 1.
double binding_threshold(double s);

/// Simple pole of G at q = 1:
///   t_p = [(1-c)(1+s^2) + sqrt(((1+s^2)^2 c - (1-s^2)^2)(c-1))] / (2 c s).
/// Throws DomainError for c < c_s(s), where the pole is not on the principal sheet.
double pole_q1(double c, double s);

/// Piecewise t_c at q = 1 with its kind and phase label.
SingularityResult dominant_singularity_q1(double c, double s);

/// c as a function of the pole position: c = 1 / (x + T) with x = t/s,
/// y = t s and T the staircase continued-fraction tail. Requires 0 < q < 1
/// (q = 1 is accepted and uses the periodic fraction). Throws
/// SingularityError when a partial denominator is not positive.
double contact_fugacity_at_pole(double t, double s, double q, int depth);
double contact_fugacity_at_pole(double t, double s, double q, const CfracOptions& opt = {});

struct RootOptions {
  double abs_tol = 1e-13;  // bisection width in t
};

/// The pole t_p(c, s, q) for 0 < q < 1, found by bisection on the decreasing
/// map t -> contact_fugacity_at_pole(t, s, q). The bracket starts at t_r(s)
/// and grows geometrically. Phase is Deflated.
SingularityResult pole_location(double c, double s, double q, const RootOptions& opt = {});

/// Phase label and dominant singularity anywhere in parameter space.
/// q > 1: inflated (t_c = 0). q in [1 - 1e-8, 1]: the q = 1 closed forms.
/// q below that: pole_location.
SingularityResult classify(double c, double s, double q, const RootOptions& opt = {});

/// M(c, s, 1): zero for c <= c_s(s), else
///   (c-2)/(2(c-1)) + c(1+s^2) / (2 sqrt(((1+s^2)^2 c - (1-s^2)^2)(c-1))).
double contact_density_q1(double c, double s);

/// A(c, 1, 1) = [sqrt(c(c-1)) - (c-2)] / (2(3c-4)) for c > 4/3, obtained by
/// differentiating the pole condition in q at q = 1. Throws DomainError for
/// c <= 4/3, where the density is undefined.
double area_density_q1_s1(double c);

/// A(c, s, 1) for general s by the same implicit differentiation: with
/// P = x + S, Q = y + S at the pole, S_q = x (1 + S_x) Q / (1 - P - Q) and
/// A = S_q / (t dPhi/dt). Throws DomainError for c <= c_s(s).
double area_density_q1(double c, double s);

/// Densities from finite differences of log t_c in log c and log q, one
/// Richardson step. Steps: 1e-4 in log c; min(1e-4, (1-q)/100) in log q for
/// q < 1; a one-sided step from below at q = 1.
Densities densities(double c, double s, double q, const RootOptions& opt = {});

/// Asymptotic staircase generating function near (t, q) = (1/4, 1):
///   S ~ 1/4 + 4^{-2/3} eps^{1/3} Ai'(z)/Ai(z), z = 4^{1/3} (1 - 4t) eps^{-2/3}.
/// Throws DomainError if z leaves the airy() domain and SingularityError
/// when z is at or left of the first zero of Ai.
double staircase_airy_asymptotic(double t, double eps);

/// Asymptotic pole relation c ~ 1 / (3/4 + 4^{-2/3} eps^{1/3} Ai'(z)/Ai(z)).
double contact_fugacity_airy_asymptotic(double t, double eps);

/// -a'_1 4^{-4/3}, amplitude of t_p(c_s, 1, 1 - eps) - 1/4 ~ amp * eps^{2/3}.
double critical_pole_amplitude();

/// Fit of t_p(c, 1, 1 - eps) - 1/4 against eps (default c = c_s(1) = 4/3).
/// Requires at least 5 values in (0, 1e-2]. The extrapolated amplitude is
/// taken at exponent 2/3 with corrections in eps^{1/3}.
ScalingFit pole_scaling_at_threshold(std::span<const double> epsilons, double c = 4.0 / 3.0);

enum class CrossoverLaw {
  ContactsVsQ,  // M(c_s, 1, 1 - eps) ~ eps^{1/3}
  AreaVsQ,      // A(c_s, 1, 1 - eps) ~ eps^{-1/3}
  ContactsVsC,  // M(c_s + d, 1, 1) ~ d
  AreaVsC       // A(c_s + d, 1, 1) ~ d^{-1}
};

std::string_view to_string(CrossoverLaw law);
double crossover_exponent(CrossoverLaw law);

/// Closed-form amplitude of each law.
double crossover_amplitude(CrossoverLaw law);

/// Fit of one crossover law over `window` (eps = 1 - q or d = c - c_s).
/// The q-side laws use finite-difference densities; ContactsVsC uses
/// finite differences of the closed-form pole; AreaVsC uses the implicit
/// q-derivative (area_density_q1), since the q-scale of the crossover,
/// ~ d^3, is below double resolution for small d.
ScalingFit crossover_scaling(CrossoverLaw law, std::span<const double> window);

}  // namespace vesicle
