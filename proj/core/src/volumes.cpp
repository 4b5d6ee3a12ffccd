#include "leelab/volumes.hpp"

#include <stdexcept>

#include "leelab/errors.hpp"

namespace leelab {

std::vector<Count> weight_distribution(int m) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  std::vector<Count> dist(static_cast<std::size_t>(m / 2) + 1, 0);
  for (int x = 0; x < m; ++x) dist[static_cast<std::size_t>(lee_weight(x, m))] += 1;
  return dist;
}

namespace {

// Exact-weight counts for n coordinates.
std::vector<Count> sphere_sizes(int m, long n) {
  const auto dist = weight_distribution(m);
  std::vector<Count> row{1};
  for (long k = 0; k < n; ++k) {
    std::vector<Count> next(row.size() + dist.size() - 1, 0);
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t w = 0; w < dist.size(); ++w) next[a + w] += row[a] * dist[w];
    row = std::move(next);
  }
  return row;
}

}  // namespace

std::vector<Count> ball_volume_table(Space space) {
  auto row = sphere_sizes(space.m, space.n);
  for (std::size_t r = 1; r < row.size(); ++r) row[r] += row[r - 1];
  return row;
}

Count ball_volume(int m, long n, long r) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  if (n < 0) throw std::domain_error("negative length");
  if (r < 0) return 0;
  const long top = n * (m / 2);
  if (r >= top) return power(static_cast<long>(m), static_cast<unsigned long>(n));
  const auto row = sphere_sizes(m, n);
  Count total = 0;
  for (long w = 0; w <= r; ++w) total += row[static_cast<std::size_t>(w)];
  return total;
}

Count ball_volume(Space space, long r) { return ball_volume(space.m, space.n, r); }

Count ball_volume_closed_form(Space space, long r) {
  const long m = space.m;
  const long n = space.n;
  if (r < 0 || r > space.max_distance()) throw std::domain_error("radius out of range");
  Count total = 0;
  if (m % 2 == 0) {
    for (long i = 0; i <= (2 * r) / m; ++i) {
      const long rest = r - (m / 2) * i;
      Count inner = 0;
      for (long j = 0; j <= rest; ++j) inner += power(2, static_cast<unsigned long>(j)) * binomial(n, j) * binomial(rest, j);
      if (i % 2) total -= binomial(n, i) * inner;
      else total += binomial(n, i) * inner;
    }
    return total;
  }
  const long M = m / 2;
  for (long i = 0; i <= r; ++i) {
    Count inner = 0;
    for (long j = 0; j <= (2 * r) / m; ++j) {
      Count term = power(2, static_cast<unsigned long>(j)) * binomial(n, j) * binomial(n - j, r - j * (M + 1) - i);
      if (j % 2) inner -= term;
      else inner += term;
    }
    total += binomial(n + 1, i) * inner;
  }
  return total;
}

VolumeBounds volume_bounds(Space space, long r) {
  if (r < 1 || r > space.max_distance()) throw std::domain_error("radius out of range");
  const long n = space.n;
  VolumeBounds b;
  b.upper = 0;
  for (long i = 0; i <= n; ++i) b.upper += power(2, static_cast<unsigned long>(i)) * binomial(n, i) * binomial(r, i);
  b.lower = r < n ? binomial(n, r) * power(2, static_cast<unsigned long>(r)) : power(2, static_cast<unsigned long>(n));
  return b;
}

RatioBranch ratio_branch(int m, long t) {
  if (m % 2 == 0) return RatioBranch::even;
  if (2 * t == m + 1) return RatioBranch::odd_exceptional;
  return RatioBranch::generic;
}

std::string to_string(RatioMode mode) { return mode == RatioMode::grow_both ? "grow_both" : "grow_radius"; }

std::string to_string(RatioBranch branch) {
  switch (branch) {
    case RatioBranch::even: return "even";
    case RatioBranch::odd_exceptional: return "odd_exceptional";
    case RatioBranch::generic: return "generic";
  }
  return "?";
}

bool ratio_admissible(Space space, long t, long i, RatioMode mode) {
  if (t < 1 || t > space.max_distance() || i < 1) return false;
  if (mode == RatioMode::grow_both) return true;
  return i <= space.max_distance() - t && space.n - i + 1 - t > 0;
}

Ratio volume_ratio_factor(Space space, long t, long i, RatioMode mode, std::optional<Ratio> c_m) {
  if (!ratio_admissible(space, t, i, mode)) throw std::domain_error("ratio parameters outside the estimate hypotheses");
  const long n = space.n;
  const auto branch = ratio_branch(space.m, t);
  if (branch == RatioBranch::odd_exceptional && !c_m) throw std::domain_error("constant C_m required for m odd, t = ceil(m/2)");
  const auto ui = static_cast<unsigned long>(i);
  if (mode == RatioMode::grow_both) {
    switch (branch) {
      case RatioBranch::even: return power(make_ratio(t + i, 2 * (n + i)), ui);
      case RatioBranch::odd_exceptional: return power(Ratio(*c_m / (n + i)), ui);
      case RatioBranch::generic: return power(make_ratio(t + i, n + i), ui);
    }
  }
  const Ratio shrink = power(make_ratio(n - i + 1, n - i + 1 - t), ui);
  switch (branch) {
    case RatioBranch::even: return power(make_ratio(t + i, 2 * n), ui) * shrink;
    case RatioBranch::odd_exceptional: return power(Ratio(*c_m / n), ui) * shrink;
    case RatioBranch::generic: return power(make_ratio(t + i, n), ui) * shrink;
  }
  return 0;
}

RatioCheck check_volume_ratio(Space space, long t, long i, RatioMode mode, std::optional<Ratio> c_m) {
  RatioCheck c;
  const Ratio f = volume_ratio_factor(space, t, i, mode, c_m);
  c.lhs = Ratio(ball_volume(space, t));
  const Count other = mode == RatioMode::grow_both ? ball_volume(space.m, space.n + i, t + i) : ball_volume(space, t + i);
  c.rhs = f * Ratio(other);
  c.holds = c.lhs <= c.rhs;
  return c;
}

ConstantEstimate estimate_constant_cm(int m, long n_lo, long n_hi, Ratio search_cap, Ratio step) {
  if (m < 3 || m % 2 == 0) throw std::domain_error("constant estimate needs an odd modulus");
  if (n_lo > n_hi || n_hi < 1) throw std::domain_error("empty length range");
  if (step <= 0 || search_cap < step) throw std::domain_error("bad search grid");
  const long t = (m + 1) / 2;

  struct Point {
    Space space;
    long i;
    RatioMode mode;
  };
  std::vector<Point> points;
  for (long n = std::max(1L, n_lo); n <= n_hi; ++n) {
    Space s(m, static_cast<int>(n));
    if (t > s.max_distance()) continue;
    for (long i = 1; i <= s.max_distance() - t; ++i)
      for (auto mode : {RatioMode::grow_both, RatioMode::grow_radius})
        if (ratio_admissible(s, t, i, mode)) points.push_back({s, i, mode});
  }
  if (points.empty()) throw std::domain_error("no admissible inequality in the length range");

  const Point* failing = nullptr;
  auto all_hold = [&](const Ratio& c) {
    for (const auto& p : points) {
      if (!check_volume_ratio(p.space, t, p.i, p.mode, c).holds) {
        failing = &p;
        return false;
      }
    }
    return true;
  };

  const Count top = floor(Ratio(search_cap / step));
  if (!all_hold(Ratio(top) * step)) {
    std::string where = "m=" + std::to_string(m) + " n=" + std::to_string(failing->space.n) + " t=" + std::to_string(t) +
                        " i=" + std::to_string(failing->i) + " mode=" + to_string(failing->mode);
    throw SearchFailure("no constant up to " + to_fraction(search_cap) + " validates", where);
  }
  Count lo = 0, hi = top;  // all_hold(hi*step) is true; lo*step = 0 is never valid
  while (hi - lo > 1) {
    Count mid = (lo + hi) / 2;
    if (all_hold(Ratio(mid) * step)) hi = mid;
    else lo = mid;
  }
  ConstantEstimate e;
  e.value = Ratio(hi) * step;
  e.value.canonicalize();
  e.m = m;
  e.n_lo = n_lo;
  e.n_hi = n_hi;
  e.step = step;
  e.inequalities = static_cast<long>(points.size());
  return e;
}

}  // namespace leelab
