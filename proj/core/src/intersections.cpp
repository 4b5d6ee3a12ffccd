#include "leelab/intersections.hpp"

#include <algorithm>
#include <stdexcept>

#include "leelab/volumes.hpp"

namespace leelab {

Word canonical_center(Space space, long ell) {
  if (ell < 0 || ell > space.max_distance()) throw std::domain_error("distance not realizable in this space");
  std::vector<int> coords(static_cast<std::size_t>(space.n), 0);
  if (ell <= space.n) {
    std::fill(coords.begin(), coords.begin() + ell, 1);
    return Word(space, std::move(coords));
  }
  const int M = space.max_weight();
  for (std::size_t k = 0; ell > 0; ++k) {
    const long w = std::min<long>(ell, M);
    coords[k] = static_cast<int>(w);
    ell -= w;
  }
  return Word(space, std::move(coords));
}

Count intersection_size(const IntersectionQuery& q) {
  if (q.t < 0 || q.t > q.space.max_distance()) throw std::domain_error("radius out of range");
  const Word c = canonical_center(q.space, q.ell);
  if (q.ell > 2 * q.t) return 0;
  return intersection_size(q.t, c);
}

Count intersection_size(long t, const Word& c) {
  const Space s = c.space;
  if (t < 0) return 0;
  const auto side = static_cast<std::size_t>(t + 1);
  // table[a * side + b]: prefixes with weight a to zero and b to c.
  std::vector<Count> table(side * side, 0);
  table[0] = 1;
  for (int k = 0; k < s.n; ++k) {
    std::vector<Count> next(side * side, 0);
    const int shift = c.coords[static_cast<std::size_t>(k)];
    for (int z = 0; z < s.m; ++z) {
      const long wa = lee_weight(z, s.m);
      const long wb = lee_weight((z - shift + s.m) % s.m, s.m);
      if (wa > t || wb > t) continue;
      for (long a = 0; a + wa <= t; ++a)
        for (long b = 0; b + wb <= t; ++b) {
          const auto& from = table[static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)];
          if (from != 0) next[static_cast<std::size_t>(a + wa) * side + static_cast<std::size_t>(b + wb)] += from;
        }
    }
    table = std::move(next);
  }
  Count total = 0;
  for (const auto& v : table) total += v;
  return total;
}

Count common_neighborhood_count(const Word& x, const Word& y, long r, std::uint64_t cap) {
  if (!(x.space == y.space)) throw std::domain_error("words from different spaces");
  Count total = 0;
  for (const auto& z : iter_words(x.space, cap))
    if (lee_distance(x, z) <= r && lee_distance(y, z) <= r) total += 1;
  return total;
}

Count intersection_t1_closed_form(Space space, long t) {
  if (space.n < 2) throw std::domain_error("closed form needs n >= 2");
  if (t < 1 || t > space.max_distance()) throw std::domain_error("radius out of range");
  const int m = space.m;
  const long n1 = space.n - 1;
  Count total = 0;
  if (m % 2 == 0) {
    for (long i = 1; i <= m / 2; ++i) total += 2 * ball_volume(m, n1, t - i);
    return total;
  }
  for (long i = 1; i <= (m - 1) / 2; ++i) total += 2 * ball_volume(m, n1, t - i);
  total += ball_volume(m, n1, t - (m - 1) / 2);
  return total;
}

Count intersection_upper_bound(const IntersectionQuery& q) {
  const Space s = q.space;
  if (q.ell < 1 || q.ell > std::min(2 * q.t, s.max_distance() - 1)) throw std::domain_error("distance outside bound hypotheses");
  const long half = (q.ell + 1) / 2;
  return power(static_cast<long>(s.m), static_cast<unsigned long>(q.ell)) *
         ball_volume(s.m, std::max(0L, static_cast<long>(s.n) - half), q.t - half);
}

bool intersection_estimate_admissible(Space space, long t, long ell_odd) {
  if (ell_odd < 1 || ell_odd % 2 == 0) return false;
  if (t < 1 || t > space.max_distance()) return false;
  const long l = (ell_odd - 1) / 2;
  return l < std::min<long>(t, static_cast<long>(space.n) * (space.m / 4));
}

Ratio intersection_estimate(Space space, long t, long ell_odd, std::optional<Ratio> c_m) {
  if (!intersection_estimate_admissible(space, t, ell_odd)) throw std::domain_error("estimate hypotheses violated");
  const long m = space.m;
  const long n = space.n;
  const auto e = static_cast<unsigned long>((ell_odd - 1) / 2 + 1);
  Ratio base;
  switch (ratio_branch(space.m, t)) {
    case RatioBranch::even: base = make_ratio(m * t, 2 * n); break;
    case RatioBranch::odd_exceptional:
      if (!c_m) throw std::domain_error("constant C_m required for m odd, t = ceil(m/2)");
      base = Ratio(m * *c_m / n);
      break;
    case RatioBranch::generic: base = make_ratio(m * t, n); break;
  }
  return power(base, e) * Ratio(ball_volume(space, t));
}

}  // namespace leelab
