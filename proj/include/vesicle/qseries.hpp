#pragma once

#include <vector>

#include "vesicle/laurent_poly.hpp"
#include "vesicle/model.hpp"

namespace vesicle {

/// Stopping rule for the q-Bessel series: stop after two consecutive terms
/// below abs_tol * max(1, |partial sum|); fail after max_terms.
struct TruncationPolicy {
  double abs_tol = 1e-16;
  int max_terms = 10000;
};

/// (t; q)_n = prod_{k=0}^{n-1} (1 - t q^k).
double q_pochhammer(double t, double q, int n);

/// H(x, y, q) = sum_n (-q x)^n q^{n(n-1)/2} / ((q;q)_n (q y;q)_n), the
/// 1phi1(0; qy; q, qx) basic hypergeometric series. Requires 0 < q < 1.
/// Terms are generated by a one-step recurrence.
double qbessel_h(const XYPoint& p, const TruncationPolicy& policy = {});

/// Staircase-polygon generating function S(x, y, q) as y [H(qx,y,q)/H(x,y,q) - 1].
/// Requires 0 < q < 1. Loses precision as q -> 1 (terms grow like e^{x/(1-q)});
/// a ConvergenceError is raised once more than 8 digits cancel.
double staircase_gf_explicit(const XYPoint& p, const TruncationPolicy& policy = {});

/// S(x, y, 1) = (1 - x - y - sqrt(x^2 - 2xy + y^2 - 2x - 2y + 1)) / 2 on the
/// principal branch sqrt(x) + sqrt(y) <= 1.
double staircase_gf_q1(double x, double y);

enum class TailStart {
  Zero,            // truncated fraction with tail 0
  LocalFixedPoint  // tail set to the q = 1 value of the tail at the truncation level
};

/// Depth-doubling control for the bottom-up continued-fraction evaluators.
struct CfracOptions {
  TailStart tail = TailStart::Zero;
  double tol = 1e-14;  // relative change between successive depths
  int start_depth = 8;
  int max_depth = 1 << 26;
};

struct CfracValue {
  long double value = 0.0L;
  int depth = 0;
};

/// The tail y + S(x, y, q) of the vesicle continued fraction,
///   y / (1 + y - q x - y / (1 + y - q^2 x - y / (...))),
/// evaluated bottom-up with `depth` levels. Every partial denominator must be
/// positive; otherwise the point is at or beyond a pole and SingularityError
/// is thrown. Requires 0 < q <= 1.
long double staircase_tail_fixed(const XYPoint& p, int depth, TailStart tail);

/// Same, with depth doubled until successive values agree to opt.tol.
CfracValue staircase_tail(const XYPoint& p, const CfracOptions& opt = {});

/// S(x, y, q) from the continued fraction; usable up to and including q = 1.
double staircase_gf_cfrac(const XYPoint& p, const CfracOptions& opt = {});

/// S by the route suited to q: quadratic at q = 1, continued fraction for
/// q in (1 - 1e-8, 1), the q-Bessel ratio below that.
double staircase_gf(const XYPoint& p, const TruncationPolicy& policy = {});

/// Width of the band below q = 1 routed away from the q-Bessel series.
inline constexpr double kNearOneBand = 1e-8;

/// |S(x,y,q) - [q x + S(q x,y,q)] [y + S(x,y,q)]| with S from the q-Bessel ratio.
double functional_equation_residual(const XYPoint& p, const TruncationPolicy& policy = {});

/// F(c, x, y, q) = 1 / (1 - c [x + y + S(x, y, q)]). Throws SingularityError
/// carrying the denominator when it is not positive (at or beyond the pole).
double vesicle_gf_necklace(double c, const XYPoint& p, const TruncationPolicy& policy = {});

/// Closed form of F at q = 1:
///   1 / (1 - (c/2) [x + y + 1 - sqrt(x^2 - 2xy + y^2 - 2x - 2y + 1)]).
double vesicle_gf_q1(double c, double x, double y);

/// F from its continued fraction truncated at `depth` levels (tail 0).
double vesicle_gf_cfrac(double c, const XYPoint& p, int depth);

/// F from its continued fraction with depth doubling to 1e-14.
double vesicle_gf_cfrac(double c, const XYPoint& p, const CfracOptions& opt = {});

/// G(c, s, q, t) = F(c, t/s, t s, q). Requires point.t.
double length_gf(const ModelPoint& point, const TruncationPolicy& policy = {});

/// Exact expansion G = sum_n Z_n(c, s, q) t^n.
struct SeriesInT {
  std::vector<LaurentPoly3> coefficients;  // index = power of t
};

inline constexpr int kMaxSeriesOrder = 24;

/// Coefficients t^0 .. t^order, built by solving the staircase functional
/// equation order by order in exact integer arithmetic and expanding the
/// necklace formula. Throws BoundsError unless 0 <= order <= 24.
SeriesInT length_series(int order);

}  // namespace vesicle
