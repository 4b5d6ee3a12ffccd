#pragma once

#include <optional>

#include "leelab/lee_core.hpp"

namespace leelab {

struct IntersectionQuery {
  Space space;
  long t = 0;
  long ell = 0;
};

// Second center at Lee distance ell from zero: (1^ell 0^(n-ell)) for ell <= n,
// otherwise floor(m/2) in the leading coordinates and the remainder in the next.
Word canonical_center(Space space, long ell);

// W(t, ell) = |B(0,t) ∩ B(c,t)| for d(0,c) = ell, by a joint-weight DP.
Count intersection_size(const IntersectionQuery& q);
// |B(0,t) ∩ B(c,t)| for an arbitrary second center.
Count intersection_size(long t, const Word& c);

// Direct enumeration of |{z : d(x,z) <= r, d(y,z) <= r}|.
Count common_neighborhood_count(const Word& x, const Word& y, long r, std::uint64_t cap = Limits{}.enumeration);

// W(t, 1) through volumes of length n-1.
Count intersection_t1_closed_form(Space space, long t);

// m^ell * v(n - ceil(ell/2), t - ceil(ell/2)).
Count intersection_upper_bound(const IntersectionQuery& q);

// Majorant of W(t, ell_odd) for ell_odd = 2l + 1, 0 <= l < min(t, n*floor(m/4)).
Ratio intersection_estimate(Space space, long t, long ell_odd, std::optional<Ratio> c_m = std::nullopt);
bool intersection_estimate_admissible(Space space, long t, long ell_odd);

}  // namespace leelab
