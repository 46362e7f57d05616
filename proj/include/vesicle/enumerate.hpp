#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vesicle/laurent_poly.hpp"
#include "vesicle/model.hpp"
#include "vesicle/scaling.hpp"

namespace vesicle {

enum class Step : char { East = 'E', North = 'N' };

/// Two directed walks of equal length from the origin. `top` is the walk that
/// stays weakly above/left of `bottom`; both must end at the same point.
struct WalkPairConfig {
  std::vector<Step> top;
  std::vector<Step> bottom;

  /// Builds a pair from strings over {E, N}, e.g. ("NE", "EN").
  static WalkPairConfig from_strings(std::string_view top, std::string_view bottom);
  std::string top_string() const;
  std::string bottom_string() const;
};

struct ConfigStats {
  int length = 0;        // n = n_x + n_y
  int contacts = 0;      // shared sites, origin excluded
  int displacement = 0;  // h = n_y - n_x
  int area = 0;          // enclosed plaquettes

  friend bool operator==(const ConfigStats&, const ConfigStats&) = default;
};

/// Largest n accepted by the explicit enumeration.
inline constexpr int kMaxEnumerationLength = 16;

/// Calls `visit` once per configuration of total length n. The order is a
/// fixed depth-first order over step pairs (E before N, top before bottom).
/// Throws BoundsError unless 0 <= n <= 16.
void for_each_pair(int n, const std::function<void(const WalkPairConfig&)>& visit);

/// Materialised form of for_each_pair; intended for small n.
std::vector<WalkPairConfig> enumerate_pairs(int n);

/// Statistics of a configuration computed directly from the two step
/// sequences. Area is a column scan: in every column the height of the top
/// walk's east step minus the height of the bottom walk's east step.
/// Throws InvariantError if the walks cross, differ in length or end apart.
ConfigStats config_stats(const WalkPairConfig& cfg);

/// Exact partition polynomial Z_n(c, s, q) by explicit enumeration.
LaurentPoly3 brute_force_partition(int n);

/// Z_n at a numeric point via the separation transfer matrix.
/// Throws OverflowError when the value leaves the long double range; use
/// log_transfer_partition in that regime.
long double transfer_partition(int n, const ModelPoint& point);

/// log Z_n with per-step rescaling; finite for every n the DP can hold.
long double log_transfer_partition(int n, const ModelPoint& point);

struct MeanObservables {
  long double contacts = 0.0L;  // <m_c>_n
  long double area = 0.0L;      // <a>_n
};

MeanObservables mean_observables(int n, const ModelPoint& point);

/// Means for every length 0..n_max from a single DP sweep; entry k is length k.
std::vector<MeanObservables> mean_observables_upto(int n_max, const ModelPoint& point);

enum class Observable { Contacts, Area };

/// About `count` distinct lengths spaced geometrically from n_min to n_max
/// (both included, rounded to integers).
std::vector<int> length_grid(int n_min, int n_max, int count);

/// Power-law fit of <observable>_n against n over `n_grid` (increasing, at
/// least four lengths). The extrapolated exponent comes from the successive
/// slopes, linearly extrapolated in n^{-1/2}.
ScalingFit finite_size_exponent(Observable observable, const ModelPoint& point,
                                std::span<const int> n_grid);

}  // namespace vesicle
