#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leelab/lee_core.hpp"

namespace leelab {

// Number of residues of each Lee weight 0..floor(m/2).
std::vector<Count> weight_distribution(int m);

// Exact v(n, r) by convolution of the per-coordinate weight distribution.
// r < 0 gives 0, r >= n*floor(m/2) gives m^n.
Count ball_volume(Space space, long r);
// Same with n >= 0 allowed; the empty word space has v(0, r) = 1 for r >= 0.
Count ball_volume(int m, long n, long r);
// Cumulative volumes for r = 0..n*floor(m/2).
std::vector<Count> ball_volume_table(Space space);

// Closed form for the ball volume with the even/odd split, evaluated as written.
Count ball_volume_closed_form(Space space, long r);

struct VolumeBounds {
  Count lower;
  Count upper;
};
VolumeBounds volume_bounds(Space space, long r);

enum class RatioMode { grow_both, grow_radius };
enum class RatioBranch { even, odd_exceptional, generic };

RatioBranch ratio_branch(int m, long t);
std::string to_string(RatioMode mode);
std::string to_string(RatioBranch branch);

// Factor F with v(n,t) <= F * v(n+i, t+i)  (grow_both)  or  v(n,t) <= F * v(n, t+i)  (grow_radius).
// c_m is required when m is odd and t = ceil(m/2).
Ratio volume_ratio_factor(Space space, long t, long i, RatioMode mode, std::optional<Ratio> c_m = std::nullopt);

// Whether (t, i) is inside the hypotheses of the ratio factor.
bool ratio_admissible(Space space, long t, long i, RatioMode mode);

struct RatioCheck {
  Ratio lhs;  // v(n,t)
  Ratio rhs;  // F * v(...)
  bool holds = false;
};
RatioCheck check_volume_ratio(Space space, long t, long i, RatioMode mode, std::optional<Ratio> c_m = std::nullopt);

struct ConstantEstimate {
  Ratio value;
  int m = 3;
  long n_lo = 0;
  long n_hi = 0;
  Ratio step;
  long inequalities = 0;  // inequalities validated at `value`
};

// Smallest multiple of `step` in (0, search_cap] for which every odd-exceptional
// ratio inequality with t = ceil(m/2) holds for n in [n_lo, n_hi].
ConstantEstimate estimate_constant_cm(int m, long n_lo, long n_hi, Ratio search_cap = Ratio(64),
                                      Ratio step = Ratio(1, 8));

}  // namespace leelab
