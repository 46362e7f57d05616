#include "vesicle/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "vesicle/errors.hpp"

namespace vesicle {

void require_positive_fugacities(double c, double s, double q) {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(c) || !ok(s) || !ok(q)) {
    throw DomainError("fugacities must be finite and strictly positive (c=" + std::to_string(c) +
                      ", s=" + std::to_string(s) + ", q=" + std::to_string(q) + ")");
  }
}

WalkPairConfig WalkPairConfig::from_strings(std::string_view top, std::string_view bottom) {
  auto parse = [](std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char ch : text) {
      if (ch == 'E') steps.push_back(Step::East);
      else if (ch == 'N') steps.push_back(Step::North);
      else throw DomainError(std::string("invalid step character '") + ch + "'");
    }
    return steps;
  };
  return {parse(top), parse(bottom)};
}

std::string WalkPairConfig::top_string() const {
  return {reinterpret_cast<const char*>(top.data()), top.size()};
}

std::string WalkPairConfig::bottom_string() const {
  return {reinterpret_cast<const char*>(bottom.data()), bottom.size()};
}

namespace {

void check_enumeration_bounds(int n) {
  if (n < 0 || n > kMaxEnumerationLength) {
    throw BoundsError("enumeration length must be in [0, " + std::to_string(kMaxEnumerationLength) +
                      "], got " + std::to_string(n));
  }
}

// Buffers reused across calls so the enumeration oracle does not allocate
// per configuration.
struct StatsScratch {
  std::vector<int> low_top, high_top, low_bottom, high_bottom;
  std::vector<int> east_height_top, east_height_bottom;
};

// Vertical extent [low(x), high(x)] of a walk on each abscissa and the height
// of its east step leaving each column.
void trace(const std::vector<Step>& steps, std::vector<int>& low, std::vector<int>& high,
           std::vector<int>& east_height) {
  low.assign(1, 0);
  high.assign(1, 0);
  east_height.clear();
  int y = 0;
  for (Step st : steps) {
    if (st == Step::East) {
      east_height.push_back(y);
      low.push_back(y);
      high.push_back(y);
    } else {
      ++y;
      high.back() = y;
    }
  }
}

ConfigStats compute_stats(const WalkPairConfig& cfg, StatsScratch& w) {
  if (cfg.top.size() != cfg.bottom.size()) throw InvariantError("walks have different lengths");
  trace(cfg.top, w.low_top, w.high_top, w.east_height_top);
  trace(cfg.bottom, w.low_bottom, w.high_bottom, w.east_height_bottom);

  const int n = static_cast<int>(cfg.top.size());
  const int nx = static_cast<int>(w.east_height_top.size());
  if (nx != static_cast<int>(w.east_height_bottom.size()) || w.high_top.back() != w.high_bottom.back()) {
    throw InvariantError("walks do not end at a common point");
  }
  for (int x = 0; x <= nx; ++x) {
    if (w.low_top[x] < w.low_bottom[x] || w.high_top[x] < w.high_bottom[x]) {
      throw InvariantError("walks cross at abscissa " + std::to_string(x));
    }
  }

  ConfigStats st;
  st.length = n;
  st.displacement = (n - nx) - nx;
  for (int x = 0; x < nx; ++x) st.area += w.east_height_top[x] - w.east_height_bottom[x];

  int xt = 0, yt = 0, xb = 0, yb = 0;
  for (int k = 0; k < n; ++k) {
    (cfg.top[k] == Step::East ? xt : yt) += 1;
    (cfg.bottom[k] == Step::East ? xb : yb) += 1;
    if (xt == xb && yt == yb) ++st.contacts;
  }
  return st;
}

}  // namespace

void for_each_pair(int n, const std::function<void(const WalkPairConfig&)>& visit) {
  check_enumeration_bounds(n);
  WalkPairConfig cfg{std::vector<Step>(n), std::vector<Step>(n)};
  static constexpr Step kSteps[2] = {Step::East, Step::North};

  // gap = y_top - y_bottom at equal step count; it must stay >= 0 and be
  // closable in the remaining steps.
  std::function<void(int, int)> extend = [&](int k, int gap) {
    if (k == n) {
      if (gap == 0) visit(cfg);
      return;
    }
    for (Step top : kSteps) {
      for (Step bottom : kSteps) {
        const int next = gap + (top == Step::North) - (bottom == Step::North);
        if (next < 0 || next > n - k - 1) continue;
        cfg.top[k] = top;
        cfg.bottom[k] = bottom;
        extend(k + 1, next);
      }
    }
  };
  extend(0, 0);
}

std::vector<WalkPairConfig> enumerate_pairs(int n) {
  std::vector<WalkPairConfig> out;
  for_each_pair(n, [&out](const WalkPairConfig& cfg) { out.push_back(cfg); });
  return out;
}

ConfigStats config_stats(const WalkPairConfig& cfg) {
  StatsScratch scratch;
  return compute_stats(cfg, scratch);
}

LaurentPoly3 brute_force_partition(int n) {
  check_enumeration_bounds(n);
  // Dense histogram over (contacts, displacement, area); counts fit in 64 bits
  // for n <= 16 and are promoted to big integers at the end.
  const int max_area = n * n / 4;
  const int h_span = 2 * n + 1;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>((n + 1) * h_span * (max_area + 1)), 0);
  StatsScratch scratch;
  for_each_pair(n, [&](const WalkPairConfig& cfg) {
    const ConfigStats st = compute_stats(cfg, scratch);
    counts[(static_cast<std::size_t>(st.contacts) * h_span + (st.displacement + n)) * (max_area + 1) + st.area] += 1;
  });

  LaurentPoly3::Terms terms;
  for (int m = 0; m <= n; ++m) {
    for (int h = -n; h <= n; ++h) {
      for (int a = 0; a <= max_area; ++a) {
        const auto k = counts[(static_cast<std::size_t>(m) * h_span + (h + n)) * (max_area + 1) + a];
        if (k != 0) terms.emplace(Monomial{m, h, a}, BigInt(k));
      }
    }
  }
  return LaurentPoly3(std::move(terms));
}

namespace {

// Transfer matrix over the separation d between the walks after k step pairs.
// Per step pair: both walks take the same step (weight s or 1/s, d kept), the
// top walk steps N while the bottom steps E (d + 1), or the reverse (d - 1).
// The state after the step is weighted by q^d (the enclosed area equals the
// sum of separations over all intermediate times) and by c when d = 0.
//
// Arrays are renormalised by powers of two, which is exact, and the exponent
// is carried separately.
class SeparationTransfer {
public:
  SeparationTransfer(int n_max, const ModelPoint& p, bool track_means)
      : n_max_(n_max), track_(track_means) {
    if (n_max < 0) throw BoundsError("length must be non-negative");
    require_positive_fugacities(p.c, p.s, p.q);
    c_ = p.c;
    same_ = static_cast<long double>(p.s) + 1.0L / static_cast<long double>(p.s);
    q_power_.resize(static_cast<std::size_t>(n_max / 2 + 2));
    q_power_[0] = 1.0L;
    for (std::size_t d = 1; d < q_power_.size(); ++d) q_power_[d] = q_power_[d - 1] * static_cast<long double>(p.q);
    if (!std::isfinite(q_power_.back())) {
      throw OverflowError("q^d overflows; reduce n or q");
    }
    const std::size_t width = q_power_.size() + 1;
    z_.assign(width, 0.0L);
    z_[0] = 1.0L;
    if (track_) {
      zm_.assign(width, 0.0L);
      za_.assign(width, 0.0L);
    }
  }

  // Advances one step pair; afterwards the arrays describe length k + 1.
  void step() {
    ++k_;
    const int reach = std::min(k_, n_max_ - k_);  // deeper states cannot close by n_max
    const std::size_t width = z_.size();
    next_z_.assign(width, 0.0L);
    if (track_) {
      next_zm_.assign(width, 0.0L);
      next_za_.assign(width, 0.0L);
    }
    for (int d = 0; d <= reach; ++d) {
      const long double w = q_power_[d] * (d == 0 ? c_ : 1.0L);
      next_z_[d] = w * combine(z_, d);
      if (track_) {
        next_zm_[d] = w * combine(zm_, d) + (d == 0 ? next_z_[d] : 0.0L);
        next_za_[d] = w * combine(za_, d) + d * next_z_[d];
      }
    }
    z_.swap(next_z_);
    if (track_) {
      zm_.swap(next_zm_);
      za_.swap(next_za_);
    }
    renormalise(reach);
  }

  int length() const { return k_; }
  long double closed_mantissa() const { return z_[0]; }
  long long binary_exponent() const { return exponent_; }
  MeanObservables closed_means() const {
    if (!(z_[0] > 0.0L) || !std::isfinite(z_[0])) {
      throw OverflowError("partition function left the long double range at n=" + std::to_string(k_) +
                          "; reduce n or use q <= 1");
    }
    return {zm_[0] / z_[0], za_[0] / z_[0]};
  }

private:
  long double combine(const std::vector<long double>& v, int d) const {
    long double acc = same_ * v[d] + v[d + 1];
    if (d > 0) acc += v[d - 1];
    return acc;
  }

  void renormalise(int reach) {
    long double peak = 0.0L;
    for (int d = 0; d <= reach; ++d) peak = std::max(peak, z_[d]);
    if (!std::isfinite(peak)) throw OverflowError("transfer matrix overflowed at n=" + std::to_string(k_));
    if (peak == 0.0L) return;
    int e = 0;
    std::frexp(peak, &e);
    if (e == 0) return;
    auto scale = [e](std::vector<long double>& v) {
      for (auto& x : v) x = std::ldexp(x, -e);
    };
    scale(z_);
    if (track_) {
      scale(zm_);
      scale(za_);
    }
    exponent_ += e;
  }

  int n_max_;
  bool track_;
  int k_ = 0;
  long long exponent_ = 0;
  long double c_ = 1.0L;
  long double same_ = 2.0L;
  std::vector<long double> q_power_;
  std::vector<long double> z_, zm_, za_, next_z_, next_zm_, next_za_;
};

}  // namespace

long double log_transfer_partition(int n, const ModelPoint& point) {
  SeparationTransfer dp(n, point, false);
  while (dp.length() < n) dp.step();
  const long double mantissa = dp.closed_mantissa();
  if (!(mantissa > 0.0L)) throw OverflowError("closed-walk weight underflowed at n=" + std::to_string(n));
  return std::log(mantissa) + static_cast<long double>(dp.binary_exponent()) * std::log(2.0L);
}

long double transfer_partition(int n, const ModelPoint& point) {
  SeparationTransfer dp(n, point, false);
  while (dp.length() < n) dp.step();
  const long double mantissa = dp.closed_mantissa();
  int e = 0;
  std::frexp(mantissa, &e);
  const long long total = dp.binary_exponent() + e;
  if (total > std::numeric_limits<long double>::max_exponent || !(mantissa > 0.0L)) {
    throw OverflowError("Z_" + std::to_string(n) +
                        " is outside the long double range; use log_transfer_partition (log-space accumulation)");
  }
  return std::ldexp(mantissa, static_cast<int>(dp.binary_exponent()));
}

std::vector<MeanObservables> mean_observables_upto(int n_max, const ModelPoint& point) {
  SeparationTransfer dp(n_max, point, true);
  std::vector<MeanObservables> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.push_back({0.0L, 0.0L});
  while (dp.length() < n_max) {
    dp.step();
    out.push_back(dp.closed_means());
  }
  return out;
}

MeanObservables mean_observables(int n, const ModelPoint& point) { return mean_observables_upto(n, point).back(); }

ScalingFit finite_size_exponent(Observable observable, const ModelPoint& point, std::span<const int> n_grid) {
  if (n_grid.size() < 4) throw FitDomainError("finite_size_exponent needs at least 4 lengths");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      throw FitDomainError("n_grid must be strictly increasing positive lengths");
    }
  }
  const auto means = mean_observables_upto(n_grid.back(), point);
  std::vector<double> xs, ys;
  for (int n : n_grid) {
    const auto& m = means[static_cast<std::size_t>(n)];
    const long double v = observable == Observable::Contacts ? m.contacts : m.area;
    if (!(v > 0.0L)) {
      throw FitDomainError("mean " + std::string(observable == Observable::Contacts ? "contacts" : "area") +
                           " is not positive at n=" + std::to_string(n));
    }
    xs.push_back(n);
    ys.push_back(static_cast<double>(v));
  }
  ScalingFit fit = fit_power_law(xs, ys);
  fit.extrapolated_exponent = extrapolate_slopes(xs, ys, Asymptote::InfiniteLimit, 0.5);
  return fit;
}

std::vector<int> length_grid(int n_min, int n_max, int count) {
  if (n_min < 1 || n_max <= n_min || count < 2) throw DomainError("length_grid: need 1 <= n_min < n_max and count >= 2");
  std::vector<int> grid;
  for (double v : geometric_grid(n_min, n_max, count)) {
    const int n = static_cast<int>(std::lround(v));
    if (grid.empty() || n > grid.back()) grid.push_back(n);
  }
  return grid;
}

}  // namespace vesicle
