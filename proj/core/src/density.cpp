#include "leelab/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "leelab/bounds.hpp"
#include "leelab/container.hpp"
#include "leelab/errors.hpp"
#include "leelab/volumes.hpp"

namespace leelab {

CountBounds alpha_regular_bounds(const AssociationSpec& spec) {
  const auto r = static_cast<std::size_t>(spec.magnitude);
  if (spec.class_sizes.size() != r + 1 || spec.codegrees.size() != r + 1)
    throw std::domain_error("association tables must have magnitude+1 entries");
  const Count& wr = spec.codegrees[r];
  if (wr <= 0) throw std::domain_error("W_r must be positive");
  Count classes = 0, weighted = 0;
  for (std::size_t l = 0; l <= r; ++l) {
    classes += spec.class_sizes[l];
    weighted += spec.codegrees[l] * spec.class_sizes[l];
  }
  if (classes != spec.left_size * spec.left_size) throw std::domain_error("class sizes must sum to |V|^2");
  CountBounds b;
  b.upper = Ratio(spec.left_size * wr);
  b.lower = make_ratio(wr * wr * spec.left_size * spec.left_size, weighted);
  return b;
}

Count gaussian_binomial(long n, long k, long p) {
  if (k < 0 || n < 0 || k > n) return 0;
  Count num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= power(p, static_cast<unsigned long>(n - i)) - 1;
    den *= power(p, static_cast<unsigned long>(i + 1)) - 1;
  }
  return num / den;
}

namespace {

Count clamped_volume(Space space, long radius) { return ball_volume(space, radius); }

void check_nonlinear(Space space, long S, long t) {
  if (S < 0) throw std::domain_error("code size must be nonnegative");
  if (t < 1) throw std::domain_error("radius must be at least 1");
  if (Count(S) > space.cardinality()) throw std::domain_error("code size exceeds the space");
  if (S >= 3 && space.cardinality() <= 3) throw std::domain_error("bounds undefined for m^n <= 3 and S >= 3");
}

}  // namespace

NonlinearBounds nonlinear_code_bounds(Space space, long S, long t) {
  check_nonlinear(space, S, t);
  NonlinearBounds b;
  const Count N = space.cardinality();
  b.volume = clamped_volume(space, 2 * t);
  const Ratio v(b.volume);
  b.beta0 = Ratio(N) * (v - 1) / 2 - 2 * v + 3;
  b.beta1 = 2 * v - 4;
  if (S == 2 || N <= 3) {
    b.theta = 1;
  } else {
    const Ratio s(S);
    b.theta = 1 + b.beta1 * (s - 2) / Ratio(N - 2) + b.beta0 * (s - 2) * (s - 3) / Ratio((N - 2) * (N - 3));
  }
  if (S < 2) {
    b.lower = b.upper = 0;
    return b;
  }
  const Ratio top = Ratio(N * (b.volume - 1) * binomial(static_cast<long>(N.get_si() - 2), S - 2)) / 2;
  b.upper = top;
  b.lower = top / b.theta;
  return b;
}

AssociationSpec nonlinear_association(Space space, long S, long t) {
  check_nonlinear(space, S, t);
  if (S < 2) throw std::domain_error("association needs S >= 2");
  const Count N = space.cardinality();
  const Count v = clamped_volume(space, 2 * t);
  const long Nl = N.get_si();
  AssociationSpec a;
  a.magnitude = 2;
  a.left_size = N * (v - 1) / 2;
  a.right_size = binomial(Nl, S);
  // alpha = number of shared points between two close pairs.
  const Count share_two = a.left_size;
  const Count share_one = N * (v - 1) * (v - 2);
  a.class_sizes = {a.left_size * a.left_size - share_two - share_one, share_one, share_two};
  for (long l = 0; l <= 2; ++l) a.codegrees.push_back(binomial(Nl - 4 + l, S - 4 + l));
  return a;
}

namespace {

Ratio clamp01(const Ratio& q) {
  if (q < 0) return 0;
  if (q > 1) return 1;
  return q;
}

DensityBounds from_counts(const CountBounds& f, const Count& total) {
  DensityBounds d;
  d.raw_lower = 1 - f.upper / Ratio(total);
  d.raw_upper = 1 - f.lower / Ratio(total);
  d.lower = clamp01(d.raw_lower);
  d.upper = clamp01(d.raw_upper);
  return d;
}

}  // namespace

DensityBounds nonlinear_density_bounds(Space space, long S, long t) {
  if (S < 2 || Count(S) > space.cardinality()) throw std::domain_error("code size must lie in [2, m^n]");
  const auto b = nonlinear_code_bounds(space, S, t);
  return from_counts({b.lower, b.upper}, binomial(space.cardinality().get_si(), S));
}

CodeCount nonlinear_density_exact(Space space, long S, long t, const Limits& limits) {
  if (S < 0 || Count(S) > space.cardinality()) throw std::domain_error("code size out of range");
  if (space.cardinality() > Count(static_cast<unsigned long>(limits.counting_nodes)))
    throw CapacityError("exact nonlinear density needs m^n <= " + std::to_string(limits.counting_nodes));
  const auto g = build_lee_graph(space, t, limits);
  const auto poly = independence_polynomial(g, std::nullopt, limits);
  CodeCount c;
  c.total = binomial(static_cast<long>(g.size()), S);
  c.good = static_cast<std::size_t>(S) < poly.size() ? poly[static_cast<std::size_t>(S)] : Count(0);
  c.close = c.total - c.good;
  c.density = make_ratio(c.good, c.total);
  return c;
}

namespace {

void check_linear(long p, long n, long k, long t) {
  if (!is_prime(p)) throw std::domain_error("linear codes need a prime p");
  if (n < 1 || k < 1 || k > n) throw std::domain_error("dimension must satisfy 1 <= k <= n");
  if (t < 1) throw std::domain_error("radius must be at least 1");
}

}  // namespace

CountBounds linear_code_bounds(long p, long n, long k, long t) {
  check_linear(p, n, k, t);
  const Count v = ball_volume(Space(static_cast<int>(p), static_cast<int>(n)), 2 * t);
  const Count g1 = gaussian_binomial(n - 1, k - 1, p);
  const Count g2 = gaussian_binomial(n - 2, k - 2, p);
  CountBounds b;
  b.upper = Ratio((v - 1) * g1);
  b.lower = make_ratio((v - 1) * g1 * g1, g2 * (v - p) + g1 * (p - 1));
  return b;
}

Ratio linear_theta_bar(long p, long n, long k, long t) {
  check_linear(p, n, k, t);
  const Count v = ball_volume(Space(static_cast<int>(p), static_cast<int>(n)), 2 * t);
  return Ratio(p - 1) + make_ratio((v - p) * gaussian_binomial(n - 2, k - 2, p), gaussian_binomial(n - 1, k - 1, p));
}

DensityBounds linear_density_bounds(long p, long n, long k, long t) {
  check_linear(p, n, k, t);
  const Count v = ball_volume(Space(static_cast<int>(p), static_cast<int>(n)), 2 * t);
  const Count g1 = gaussian_binomial(n - 1, k - 1, p);
  const Count gnk = gaussian_binomial(n, k, p);
  const Ratio base = make_ratio((v - 1) * g1, gnk);
  DensityBounds d;
  d.raw_lower = 1 - base;
  d.raw_upper = 1 - base / linear_theta_bar(p, n, k, t);
  d.lower = clamp01(d.raw_lower);
  d.upper = clamp01(d.raw_upper);
  return d;
}

CodeCount linear_density_exact(long p, long n, long k, long t, const Limits& limits) {
  check_linear(p, n, k, t);
  const Count total = gaussian_binomial(n, k, p);
  if (total > Count(static_cast<unsigned long>(limits.subspaces)))
    throw CapacityError("subspace count exceeds cap " + std::to_string(limits.subspaces));
  const int P = static_cast<int>(p);
  const auto nn = static_cast<std::size_t>(n);
  const auto kk = static_cast<std::size_t>(k);
  const long need = 2 * t + 1;

  CodeCount c;
  c.total = total;
  c.good = 0;
  std::vector<std::size_t> pivots(kk);
  for (std::size_t i = 0; i < kk; ++i) pivots[i] = i;

  std::vector<std::vector<int>> rows(kk, std::vector<int>(nn, 0));
  std::vector<int> coeff(kk), word(nn);
  while (true) {
    // Free cells: right of the row's pivot, outside pivot columns.
    std::vector<bool> is_pivot(nn, false);
    for (auto pc : pivots) is_pivot[pc] = true;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t j = pivots[i] + 1; j < nn; ++j)
        if (!is_pivot[j]) cells.emplace_back(i, j);
    for (std::size_t i = 0; i < kk; ++i) {
      std::fill(rows[i].begin(), rows[i].end(), 0);
      rows[i][pivots[i]] = 1;
    }
    std::vector<int> values(cells.size(), 0);
    while (true) {
      for (std::size_t q = 0; q < cells.size(); ++q) rows[cells[q].first][cells[q].second] = values[q];
      // Minimum Lee weight over nonzero codewords.
      long best = n * (P / 2) + 1;
      std::fill(coeff.begin(), coeff.end(), 0);
      while (true) {
        std::size_t pos = 0;
        while (pos < kk && ++coeff[pos] == P) coeff[pos++] = 0;
        if (pos == kk) break;
        long w = 0;
        for (std::size_t j = 0; j < nn; ++j) {
          long s = 0;
          for (std::size_t i = 0; i < kk; ++i) s += static_cast<long>(coeff[i]) * rows[i][j];
          w += lee_weight(s % P, P);
        }
        best = std::min(best, w);
      }
      if (best >= need) c.good += 1;
      std::size_t pos = 0;
      while (pos < values.size() && ++values[pos] == P) values[pos++] = 0;
      if (pos == values.size()) break;
    }
    // Next pivot combination.
    std::size_t i = kk;
    while (i > 0 && pivots[i - 1] == nn - kk + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < kk; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  c.close = c.total - c.good;
  c.density = make_ratio(c.good, c.total);
  return c;
}

std::string to_string(TrendDirection d) {
  switch (d) {
    case TrendDirection::increasing: return "increasing";
    case TrendDirection::decreasing: return "decreasing";
    case TrendDirection::constant: return "constant";
    case TrendDirection::nonincreasing: return "nonincreasing";
    case TrendDirection::nondecreasing: return "nondecreasing";
    case TrendDirection::mixed: return "mixed";
    case TrendDirection::single: return "single";
  }
  return "?";
}

TrendDirection classify_trend(const std::vector<TrendRow>& rows) {
  if (rows.size() < 2) return TrendDirection::single;
  const bool exact = std::all_of(rows.begin(), rows.end(), [](const TrendRow& r) { return r.exact.has_value(); });
  int up = 0, down = 0, flat = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    int cmp;
    if (exact) cmp = ::cmp(*rows[i].exact, *rows[i - 1].exact);
    else cmp = rows[i].approx > rows[i - 1].approx ? 1 : (rows[i].approx < rows[i - 1].approx ? -1 : 0);
    if (cmp > 0) ++up;
    else if (cmp < 0) ++down;
    else ++flat;
  }
  const int steps = static_cast<int>(rows.size()) - 1;
  if (up == steps) return TrendDirection::increasing;
  if (down == steps) return TrendDirection::decreasing;
  if (flat == steps) return TrendDirection::constant;
  if (up == 0) return TrendDirection::nonincreasing;
  if (down == 0) return TrendDirection::nondecreasing;
  return TrendDirection::mixed;
}

namespace {

TrendRow exact_row(long parameter, const Ratio& value) {
  TrendRow r;
  r.parameter = parameter;
  r.exact = value;
  r.approx = std::stold(to_decimal(value, 30));
  return r;
}

}  // namespace

TrendTable linear_lower_trend(long n, long k, long t, const std::vector<long>& primes) {
  TrendTable table;
  table.name = "linear_density_lower";
  table.parameter = "p";
  for (long p : primes) table.rows.push_back(exact_row(p, linear_density_bounds(p, n, k, t).raw_lower));
  table.direction = classify_trend(table.rows);
  return table;
}

TrendTable nonlinear_density_trend(long n, long S, long t, const std::vector<int>& moduli) {
  TrendTable table;
  table.name = "nonlinear_density_lower";
  table.parameter = "m";
  for (int m : moduli)
    table.rows.push_back(exact_row(m, nonlinear_density_bounds(Space(m, static_cast<int>(n)), S, t).raw_lower));
  table.direction = classify_trend(table.rows);
  return table;
}

TrendTable plotkin_density_trend(long n, long t, const std::vector<long>& primes) {
  TrendTable table;
  table.name = "plotkin_density_upper";
  table.parameter = "p";
  for (long p : primes) {
    const long double v =
        std::stold(ball_volume(Space(static_cast<int>(p), static_cast<int>(n)), 2 * t).get_str());
    const long double pl = static_cast<long double>(p);
    const long double expo = static_cast<long double>(8 * t + 4) / (pl + 1) - 1;
    TrendRow row;
    row.parameter = p;
    row.approx = 1 - (v - 1) / (std::pow(pl, expo) * (pl - 1) + v - pl);
    const long double dim = static_cast<long double>(n) - static_cast<long double>(8 * t + 4) / (pl + 1) + 1;
    row.note = "dimension " + std::to_string(static_cast<double>(dim));
    table.rows.push_back(row);
  }
  table.direction = classify_trend(table.rows);
  return table;
}

TrendTable plotkin_density_floor_trend(long n, long t, const std::vector<long>& primes) {
  TrendTable table;
  table.name = "plotkin_density_upper_floor_dimension";
  table.parameter = "p";
  for (long p : primes) {
    const Ratio dim = Ratio(n) - make_ratio(8 * t + 4, p + 1) + 1;
    long k = floor(dim).get_si();
    k = std::min(k, n);
    if (k < 1) {
      TrendRow row;
      row.parameter = p;
      row.note = "dimension below 1";
      table.rows.push_back(row);
      continue;
    }
    auto row = exact_row(p, linear_density_bounds(p, n, k, t).raw_upper);
    row.note = "k=" + std::to_string(k) + (Ratio(k) == dim ? "" : " (floor of " + to_fraction(dim) + ")");
    table.rows.push_back(row);
  }
  table.direction = classify_trend(table.rows);
  return table;
}

}  // namespace leelab
