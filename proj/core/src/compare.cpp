#include "leelab/compare.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "leelab/volumes.hpp"

namespace leelab {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

struct Quantities {
  Count N;
  Count v2;  // v(n,2t)
  Ratio h;
  Ratio beta0;
  Ratio beta1;
};

Quantities quantities(Space space, long t) {
  Quantities q;
  q.N = space.cardinality();
  q.v2 = ball_volume(space, 2 * t);
  q.h = make_ratio(q.N, ball_volume(space, t));
  const Ratio v(q.v2);
  q.beta0 = Ratio(q.N) * (v - 1) / 2 - 2 * v + 3;
  q.beta1 = 2 * v - 4;
  return q;
}

// delta_up(S) = 1 - (v-1) S (S-1) / (2 Theta (N-1)), exact.
Ratio delta_up(const Quantities& q, long S) {
  if (S < 2) return 1;
  Ratio theta = 1;
  if (S > 2) {
    const Ratio s(S);
    theta += q.beta1 * (s - 2) / Ratio(q.N - 2) + q.beta0 * (s - 2) * (s - 3) / Ratio((q.N - 2) * (q.N - 3));
  }
  return 1 - Ratio((q.v2 - 1) * S * (S - 1)) / (2 * theta * Ratio(q.N - 1));
}

long double delta_up_ld(const Quantities& q, long double N, long double v2, long double b0, long double b1, long double S) {
  (void)q;
  if (S < 2) return 1;
  long double theta = 1;
  if (S > 2) theta += b1 * (S - 2) / (N - 2) + b0 * (S - 2) * (S - 3) / ((N - 2) * (N - 3));
  return 1 - (v2 - 1) * S * (S - 1) / (2 * theta * (N - 1));
}

long double log2_binomial(long double N, long double S) {
  return (std::lgamma(N + 1) - std::lgamma(S + 1) - std::lgamma(N - S + 1)) / kLn2;
}

long double to_ld(const Ratio& q) { return std::stold(to_decimal(q, 30)); }

}  // namespace

CompareCell compare_cell(Space space, long t, const Ratio& epsilon, std::optional<long> size, std::uint64_t exact_limit) {
  if (t < 1 || t > space.max_distance()) throw std::domain_error("radius out of range");
  if (epsilon < 0) throw std::domain_error("epsilon must be nonnegative");
  const auto q = quantities(space, t);
  if (q.N <= 3) throw std::domain_error("comparison needs m^n > 3");
  CompareCell c;
  c.m = space.m;
  c.n = space.n;
  c.t = t;
  c.size = size;
  c.h = q.h;
  c.a_exact = (1 + epsilon) * q.h;
  c.a_bits = to_ld(c.a_exact);

  if (size) {
    const long S = *size;
    if (S < 0 || Count(S) > q.N) throw std::domain_error("code size out of range");
    const Count K = floor(c.a_exact);
    const long double ln_c = K >= S ? log2_binomial(to_ld(Ratio(K)), static_cast<long double>(S)) : -INFINITY;
    c.a_bits = to_ld(epsilon * q.h) + ln_c;
    const long double d = to_ld(delta_up(q, S));
    c.b_bits = d > 0 ? log2_binomial(to_ld(Ratio(q.N)), static_cast<long double>(S)) + std::log2(d) : -INFINITY;
    c.b_argmax = S;
    c.b_exact = false;
    c.container_sharper = c.a_bits < c.b_bits;
    return c;
  }

  if (q.N <= Count(static_cast<unsigned long>(exact_limit))) {
    const long N = q.N.get_si();
    Count lower = 0;
    Ratio best = -1;
    for (long S = 0; S <= N; ++S) {
      const Ratio d = delta_up(q, S);
      if (d <= 0) continue;
      const Ratio term = Ratio(binomial(N, S)) * d;
      lower += floor(term);
      if (term > best) {
        best = term;
        c.b_argmax = S;
      }
    }
    c.b_bits = log2(lower);
    c.b_exact = true;
    // A < B  certified by  floor-sum > 2^A.
    c.container_sharper = !le_power_of_two(lower, c.a_exact);
    return c;
  }

  // Large spaces: the largest sampled term is a lower bound on the sum.
  const long double N = to_ld(Ratio(q.N));
  const long double v2 = to_ld(Ratio(q.v2));
  const long double b0 = to_ld(q.beta0);
  const long double b1 = to_ld(q.beta1);
  auto term = [&](long double S) {
    const long double d = delta_up_ld(q, N, v2, b0, b1, S);
    if (d <= 0) return -INFINITY * 1.0L;
    return log2_binomial(N, S) + std::log2(d);
  };
  std::set<long double> samples{0, 1, 2, std::floor(N / 2)};
  for (long double s = 2; s < N; s = std::floor(s * 1.05L) + 1) samples.insert(s);
  long double best_s = 0, best = -INFINITY;
  for (auto s : samples) {
    const long double v = term(s);
    if (v > best) {
      best = v;
      best_s = s;
    }
  }
  for (long double step = std::floor(best_s / 16); step >= 1; step = std::floor(step / 2)) {
    for (bool moved = true; moved;) {
      moved = false;
      for (long double cand : {best_s - step, best_s + step}) {
        if (cand < 0 || cand > N) continue;
        const long double v = term(cand);
        if (v > best) {
          best = v;
          best_s = cand;
          moved = true;
        }
      }
    }
  }
  // Guard against rounding in the log-space evaluation.
  c.b_bits = best - std::fabs(best) * 1e-12L - 1e-6L;
  c.b_argmax = static_cast<long>(best_s);
  c.b_exact = false;
  c.container_sharper = c.a_bits < c.b_bits;
  return c;
}

std::vector<CompareCell> compare_table(const CompareOptions& o) {
  std::vector<CompareCell> out;
  for (long n = std::max(1L, o.n_min); n <= o.n_max; ++n) {
    const Space space(o.m, static_cast<int>(n));
    if (space.cardinality() <= 3) continue;
    for (long t = 1; t <= o.t_max && t <= space.max_distance(); ++t)
      out.push_back(compare_cell(space, t, o.epsilon, o.size, o.exact_limit));
  }
  return out;
}

}  // namespace leelab
