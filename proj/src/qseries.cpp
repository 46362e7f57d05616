#include "vesicle/qseries.hpp"

#include <cmath>
#include <string>

#include "vesicle/errors.hpp"

namespace vesicle {
namespace {

void require_q_below_one(double q, const char* what) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw DomainError(std::string(what) + " requires 0 < q < 1, got q=" + std::to_string(q) +
                      " (use the q = 1 closed form or the continued fraction)");
  }
}

void require_nonnegative_xy(const XYPoint& p) {
  if (!(p.x >= 0.0) || !(p.y >= 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw DomainError("x and y must be finite and non-negative");
  }
}

// Maximum tolerated ratio between the largest series term and the sum.
constexpr long double kMaxCancellation = 1e8L;

}  // namespace

double q_pochhammer(double t, double q, int n) {
  if (n < 0) throw DomainError("q_pochhammer: n must be non-negative");
  long double prod = 1.0L;
  long double tq = t;
  for (int k = 0; k < n; ++k) {
    prod *= 1.0L - tq;
    tq *= q;
  }
  return static_cast<double>(prod);
}

double qbessel_h(const XYPoint& p, const TruncationPolicy& policy) {
  require_q_below_one(p.q, "qbessel_h");
  require_nonnegative_xy(p);
  const long double q = p.q, x = p.x, y = p.y;
  long double term = 1.0L, sum = 1.0L, largest = 1.0L;
  long double q_n = 1.0L;  // q^n
  int small_run = 0;
  for (int n = 0; n < policy.max_terms; ++n) {
    const long double q_next = q_n * q;  // q^{n+1}
    const long double pole = 1.0L - y * q_next;
    if (pole == 0.0L) throw SingularityError("qbessel_h: (qy;q)_n vanishes", static_cast<double>(pole));
    term *= (-q * x) * q_n / ((1.0L - q_next) * pole);
    sum += term;
    largest = std::max(largest, std::abs(term));
    q_n = q_next;
    if (std::abs(term) < policy.abs_tol * std::max(1.0L, std::abs(sum))) {
      if (++small_run == 2) {
        if (largest > kMaxCancellation * std::abs(sum)) {
          throw ConvergenceError("qbessel_h: catastrophic cancellation (largest term " +
                                 std::to_string(static_cast<double>(largest)) + ", sum " +
                                 std::to_string(static_cast<double>(sum)) + ")");
        }
        return static_cast<double>(sum);
      }
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("qbessel_h: no convergence within " + std::to_string(policy.max_terms) + " terms");
}

double staircase_gf_explicit(const XYPoint& p, const TruncationPolicy& policy) {
  const double denom = qbessel_h(p, policy);
  if (denom == 0.0) throw SingularityError("S: H(x,y,q) vanishes", 0.0);
  const double numer = qbessel_h({p.q * p.x, p.y, p.q}, policy);
  return p.y * (numer / denom - 1.0);
}

double staircase_gf_q1(double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0)) throw DomainError("staircase_gf_q1: x, y must be non-negative");
  if (std::sqrt(x) + std::sqrt(y) > 1.0) {
    throw SingularityError("staircase_gf_q1: beyond the square-root branch point", std::sqrt(x) + std::sqrt(y));
  }
  const double radicand = x * x - 2 * x * y + y * y - 2 * x - 2 * y + 1;
  if (radicand < 0.0) throw SingularityError("staircase_gf_q1: negative radicand", radicand);
  return (1.0 - x - y - std::sqrt(radicand)) / 2.0;
}

namespace {

struct Approximant {
  long double value;
  int singular_level;  // -1 when every partial denominator is positive
};

// Bottom-up evaluation that records, rather than throws on, a non-positive denominator.
Approximant approximant(const XYPoint& p, int depth, TailStart tail) {
  if (depth < 1) throw DomainError("continued fraction depth must be >= 1");
  if (!(p.q > 0.0) || p.q > 1.0) throw DomainError("continued fraction requires 0 < q <= 1");
  require_nonnegative_xy(p);
  const long double x = p.x, y = p.y, q = p.q;

  // Level j (0-based from the top) has partial denominator 1 + y - q^{j+1} x - T_{j+1}.
  auto x_at = [&](int level) { return x * std::pow(q, static_cast<long double>(level + 1)); };

  long double t_next = 0.0L;
  if (tail == TailStart::LocalFixedPoint) {
    // Fixed point of T = y / (1 + y - x_d - T), the q = 1 tail at this level.
    const long double b = 1.0L + y - x_at(depth);
    const long double disc = b * b - 4.0L * y;
    t_next = disc >= 0.0L ? (b - std::sqrt(disc)) / 2.0L : b / 2.0L;
  }
  int singular_level = -1;
  long double xk = x_at(depth - 1);
  for (int j = depth - 1; j >= 0; --j) {
    if ((j & 63) == 63) xk = x_at(j);  // resynchronise the running power
    const long double denom = 1.0L + y - xk - t_next;
    if (!(denom > 0.0L)) singular_level = j;
    t_next = y / denom;
    xk /= q;
  }
  return {t_next, singular_level};
}

[[noreturn]] void throw_singular(const Approximant& a) {
  throw SingularityError("continued fraction: non-positive partial denominator at level " +
                             std::to_string(a.singular_level),
                         static_cast<double>(a.value));
}

}  // namespace

long double staircase_tail_fixed(const XYPoint& p, int depth, TailStart tail) {
  const Approximant a = approximant(p, depth, tail);
  if (a.singular_level >= 0) throw_singular(a);
  return a.value;
}

CfracValue staircase_tail(const XYPoint& p, const CfracOptions& opt) {
  // Shallow approximants may pass through a zero denominator where the limit is regular,
  // so singularity is judged only once successive approximants agree.
  int depth = std::max(1, opt.start_depth);
  Approximant prev = approximant(p, depth, opt.tail);
  while (depth <= opt.max_depth / 2) {
    depth *= 2;
    const Approximant cur = approximant(p, depth, opt.tail);
    if (std::abs(cur.value - prev.value) <= opt.tol * std::max(1.0L, std::abs(cur.value))) {
      if (cur.singular_level >= 0) throw_singular(cur);
      return {cur.value, depth};
    }
    prev = cur;
  }
  throw ConvergenceError("continued fraction did not converge by depth " + std::to_string(opt.max_depth));
}

double staircase_gf_cfrac(const XYPoint& p, const CfracOptions& opt) {
  return static_cast<double>(staircase_tail(p, opt).value - p.y);
}

double staircase_gf(const XYPoint& p, const TruncationPolicy& policy) {
  if (p.q == 1.0) return staircase_gf_q1(p.x, p.y);
  if (p.q > 1.0 - kNearOneBand && p.q < 1.0) {
    CfracOptions opt;
    opt.tail = TailStart::LocalFixedPoint;
    return staircase_gf_cfrac(p, opt);
  }
  return staircase_gf_explicit(p, policy);
}

double functional_equation_residual(const XYPoint& p, const TruncationPolicy& policy) {
  const double s = staircase_gf_explicit(p, policy);
  const double s_shift = staircase_gf_explicit({p.q * p.x, p.y, p.q}, policy);
  return std::abs(s - (p.q * p.x + s_shift) * (p.y + s));
}

double vesicle_gf_necklace(double c, const XYPoint& p, const TruncationPolicy& policy) {
  if (!(c > 0.0)) throw DomainError("contact fugacity must be positive");
  const double denom = 1.0 - c * (p.x + p.y + staircase_gf(p, policy));
  if (!(denom > 0.0)) throw SingularityError("F: at or beyond the simple pole", denom);
  return 1.0 / denom;
}

double vesicle_gf_q1(double c, double x, double y) {
  if (!(c > 0.0)) throw DomainError("contact fugacity must be positive");
  if (!(x >= 0.0) || !(y >= 0.0)) throw DomainError("vesicle_gf_q1: x, y must be non-negative");
  const double radicand = x * x - 2 * x * y + y * y - 2 * x - 2 * y + 1;
  if (radicand < 0.0 || std::sqrt(x) + std::sqrt(y) > 1.0) {
    throw SingularityError("F(q=1): beyond the square-root branch point", radicand);
  }
  const double denom = 1.0 - (c / 2.0) * (x + y + 1.0 - std::sqrt(radicand));
  if (!(denom > 0.0)) throw SingularityError("F(q=1): at or beyond the simple pole", denom);
  return 1.0 / denom;
}

namespace {

double vesicle_from_tail(double c, const XYPoint& p, long double tail) {
  const long double denom = 1.0L - c * (p.x + tail);
  if (!(denom > 0.0L)) throw SingularityError("F: continued fraction at or beyond the pole", static_cast<double>(denom));
  return static_cast<double>(1.0L / denom);
}

}  // namespace

double vesicle_gf_cfrac(double c, const XYPoint& p, int depth) {
  if (!(c > 0.0)) throw DomainError("contact fugacity must be positive");
  return vesicle_from_tail(c, p, staircase_tail_fixed(p, depth, TailStart::Zero));
}

double vesicle_gf_cfrac(double c, const XYPoint& p, const CfracOptions& opt) {
  if (!(c > 0.0)) throw DomainError("contact fugacity must be positive");
  return vesicle_from_tail(c, p, staircase_tail(p, opt).value);
}

double length_gf(const ModelPoint& point, const TruncationPolicy& policy) {
  if (!point.t) throw DomainError("length_gf requires t");
  require_positive_fugacities(point.c, point.s, point.q);
  if (point.q > 1.0) throw DomainError("length_gf: q > 1 has zero radius of convergence");
  if (!(*point.t >= 0.0)) throw DomainError("t must be non-negative");
  const XYPoint xy = to_xy(*point.t, point.s, point.q);
  if (point.q == 1.0) return vesicle_gf_q1(point.c, xy.x, xy.y);
  return vesicle_gf_necklace(point.c, xy, policy);
}

}  // namespace vesicle
