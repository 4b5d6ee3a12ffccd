// Acceptance run: one PASS/FAIL line per criterion. Reference values come from
// the brute-force oracles in tests/support; the library is only the subject.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leelab/bounds.hpp"
#include "leelab/compare.hpp"
#include "leelab/container.hpp"
#include "leelab/density.hpp"
#include "leelab/intersections.hpp"
#include "leelab/verify.hpp"
#include "leelab/volumes.hpp"
#include "oracles.hpp"

using namespace leelab;
namespace O = oracle;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimit1 = 60;
constexpr double kLimit4 = 300;
constexpr double kLimit6 = 60;
constexpr double kLimit10 = 30;

struct Outcome {
  bool pass = true;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> first;
  std::string extra;

  void expect(bool ok, const std::function<std::string()>& where) {
    ++checked;
    if (ok) return;
    pass = false;
    ++failed;
    if (first.size() < 4) first.push_back(where());
  }
};

std::string fmt(const char* f, long a, long b = 0, long c = 0, long d = 0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

int g_failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body, double limit = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.first.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs > limit) {
    o.pass = false;
    o.first.push_back("runtime " + std::to_string(secs) + " s over limit " + std::to_string(limit) + " s");
  }
  std::printf("criterion %2d: %s  %s  [%ld checks, %ld failed, %.2f s]\n", id, o.pass ? "PASS" : "FAIL", title, o.checked,
              o.failed, secs);
  for (const auto& f : o.first) std::printf("    %s\n", f.c_str());
  if (!o.extra.empty()) std::printf("    %s\n", o.extra.c_str());
  std::fflush(stdout);
  if (!o.pass) ++g_failures;
}

O::Vec center(int m, int n, long ell) {
  // Same representative convention as the library, rebuilt here.
  O::Vec c(static_cast<std::size_t>(n), 0);
  if (ell <= n) {
    for (long i = 0; i < ell; ++i) c[static_cast<std::size_t>(i)] = 1;
    return c;
  }
  for (std::size_t k = 0; ell > 0; ++k) {
    const long w = std::min<long>(ell, m / 2);
    c[k] = static_cast<int>(w);
    ell -= w;
  }
  return c;
}

Outcome criterion1() {
  Outcome o;
  for (int m = 2; m <= 9; ++m)
    for (int n = 1; n <= 5; ++n) {
      long size = 1;
      for (int i = 0; i < n; ++i) size *= m;
      if (size > 1'000'000) continue;
      const auto ref = O::enumerated_volumes(m, n);
      const Space sp(m, n);
      for (long r = 0; r < static_cast<long>(ref.size()); ++r)
        o.expect(ball_volume(sp, r) == ref[static_cast<std::size_t>(r)], [&] { return fmt("m=%ld n=%ld r=%ld", m, n, r); });
    }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int m = 2; m <= 8; m += 2)
    for (int n = 1; n <= 6; ++n) {
      const auto ref = O::enumerated_volumes(m, n);
      for (long r = 0; r < static_cast<long>(ref.size()); ++r)
        o.expect(ball_volume_closed_form(Space(m, n), r) == ref[static_cast<std::size_t>(r)],
                 [&] { return fmt("even m=%ld n=%ld r=%ld", m, n, r); });
    }
  // Odd branch: the reconciliation report must exist and carry the known mismatches.
  const auto rep = run_verify("volumes", {GridPreset::quick, 42});
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "odd_closed_form_reconciliation") found = c.informational && c.failures > 0;
  o.expect(found, [] { return std::string("odd-m reconciliation report missing or empty"); });
  const struct {
    int m, n;
    long r;
    long formula, truth;
  } known[] = {{5, 1, 2, 3, 5}, {5, 2, 2, 10, 13}};
  for (const auto& k : known) {
    const Count f = ball_volume_closed_form(Space(k.m, k.n), k.r);
    const auto ref = O::enumerated_volumes(k.m, k.n)[static_cast<std::size_t>(k.r)];
    o.expect(f == k.formula && ref == k.truth && f != ref,
             [&] { return fmt("odd flag m=%ld n=%ld r=%ld", k.m, k.n, k.r); });
  }
  o.extra = "odd-m mismatches flagged: (5,1,2) formula 3 vs 5, (5,2,2) formula 10 vs 13";
  return o;
}

Outcome criterion3() {
  Outcome o;
  long sandwich_fail = 0, ratio_fail = 0;
  std::map<int, Ratio> cm;
  for (int m = 3; m <= 9; m += 2) cm[m] = estimate_constant_cm(m, 2, 8).value;
  std::map<int, long> fail_by_m;
  for (int m = 2; m <= 9; ++m)
    for (int n = 2; n <= 8; ++n) {
      const Space sp(m, n);
      const long top = sp.max_distance();
      for (long r = 1; r <= top; ++r) {
        const auto b = volume_bounds(sp, r);
        const Count v = O::poly_volume(m, n, r);
        const bool ok = b.lower <= v && v <= b.upper;
        sandwich_fail += !ok;
        fail_by_m[m] += !ok;
        o.expect(ok, [&] { return fmt("sandwich m=%ld n=%ld r=%ld", m, n, r); });
      }
      for (auto mode : {RatioMode::grow_both, RatioMode::grow_radius})
        for (long t = 1; t <= top; ++t)
          for (long i = 1; i <= top - t; ++i) {
            if (!ratio_admissible(sp, t, i, mode)) continue;
            std::optional<Ratio> c;
            if (m % 2) c = cm[m];
            const Ratio f = volume_ratio_factor(sp, t, i, mode, c);
            const Count other = mode == RatioMode::grow_both ? O::poly_volume(m, n + i, t + i) : O::poly_volume(m, n, t + i);
            const bool ok = Ratio(O::poly_volume(m, n, t)) <= f * Ratio(other);
            ratio_fail += !ok;
            fail_by_m[m] += !ok;
            o.expect(ok, [&] {
              return fmt("ratio m=%ld n=%ld t=%ld i=%ld", m, n, t, i) + (mode == RatioMode::grow_both ? " grow_both" : " grow_radius");
            });
          }
    }
  std::ostringstream os;
  os << "sandwich failures " << sandwich_fail << ", ratio failures " << ratio_fail << "; failures by m:";
  for (const auto& [m, f] : fail_by_m)
    if (f) os << " m=" << m << ":" << f;
  os << " (at m=2 the residues +1 and -1 coincide, so the counting behind both bounds overshoots)";
  o.extra = os.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::map<int, Ratio> cm;
  for (int m = 3; m <= 7; m += 2) cm[m] = estimate_constant_cm(m, 2, 8).value;
  for (int m = 3; m <= 7; ++m)
    for (int n = 2; n <= 4; ++n) {
      const Space sp(m, n);
      const long M = sp.max_distance();
      for (long t = 1; t <= std::min(5L, M); ++t) {
        std::vector<O::Int> W(static_cast<std::size_t>(M + 1));
        for (long l = 0; l <= M; ++l) W[static_cast<std::size_t>(l)] = O::intersection(m, n, t, center(m, n, l));
        o.expect(intersection_t1_closed_form(sp, t) == W[1], [&] { return fmt("W(t,1) m=%ld n=%ld t=%ld", m, n, t); });
        for (long l = 0; l <= M; ++l) {
          o.expect(intersection_size({sp, t, l}) == W[static_cast<std::size_t>(l)],
                   [&] { return fmt("W m=%ld n=%ld t=%ld l=%ld", m, n, t, l); });
          o.expect((W[static_cast<std::size_t>(l)] == 0) == (l > 2 * t), [&] { return fmt("vanish m=%ld n=%ld t=%ld l=%ld", m, n, t, l); });
        }
        const long top = std::min(2 * t, M - 1);
        for (long l = 1; l < top; ++l)
          o.expect(W[static_cast<std::size_t>(l + 1)] <= W[static_cast<std::size_t>(l)],
                   [&] { return fmt("monotone m=%ld n=%ld t=%ld l=%ld", m, n, t, l); });
        for (long l = 1; l <= top; ++l)
          o.expect(intersection_upper_bound({sp, t, l}) >= W[static_cast<std::size_t>(l)],
                   [&] { return fmt("upper m=%ld n=%ld t=%ld l=%ld", m, n, t, l); });
        for (long l = 1; l <= M; l += 2) {
          if (!intersection_estimate_admissible(sp, t, l)) continue;
          std::optional<Ratio> c;
          if (m % 2) c = cm[m];
          o.expect(intersection_estimate(sp, t, l, c) >= Ratio(W[static_cast<std::size_t>(l)]),
                   [&] { return fmt("estimate m=%ld n=%ld t=%ld l=%ld", m, n, t, l); });
        }
      }
    }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const O::Int w1 = O::intersection(4, 2, 1, {1, 0});
  const O::Int w2 = O::intersection(4, 2, 2, {1, 0});
  const auto sets = O::all_independent_sets(O::conflict_matrix(4, 2, 3));
  const long a = O::max_code(4, 2, 3);
  o.expect(w1 == 2 && intersection_size({Space(4, 2), 1, 1}) == w1, [&] { return "W(4,2,1,1) oracle " + w1.get_str(); });
  o.expect(w2 == 8 && intersection_size({Space(4, 2), 2, 1}) == w2, [&] { return "W(4,2,2,1) oracle " + w2.get_str(); });
  o.expect(sets.size() == 57 && count_independent_sets(build_lee_graph(Space(4, 2), 1)) == 57,
           [&] { return "i(G) oracle " + std::to_string(sets.size()); });
  o.expect(a == 2 && max_code_size_exact(Space(4, 2), 3) == 2, [&] { return "A4(2,3) oracle " + std::to_string(a); });
  return o;
}

NodeSet to_nodeset(std::size_t n, const std::vector<std::size_t>& idx) { return NodeSet::from_indices(n, idx); }

Outcome criterion6() {
  Outcome o;
  for (int m : {4, 3}) {
    const auto g = build_lee_graph(Space(m, 2), 1);
    const auto sets = O::all_independent_sets(O::conflict_matrix(m, 2, 3));
    o.expect(count_independent_sets(g) == static_cast<unsigned long>(sets.size()), [&] { return fmt("count m=%ld", m); });
    for (const Ratio& eps : {Ratio(1, 2), Ratio(1)})
      for (const auto& s : sets) {
        const NodeSet I = to_nodeset(g.size(), s);
        for (int alg = 1; alg <= 2; ++alg) {
          const auto run = alg == 1 ? run_algorithm1(g, I, eps) : run_algorithm2(g, I, eps);
          // Containment rechecked from the raw sets.
          NodeSet u = run.fingerprint;
          u |= run.container;
          o.expect(I.subset_of(u) && run.contains_input, [&] { return fmt("containment m=%ld alg=%ld", m, alg); });
        }
      }
    for (auto v : {ContainerVariant::algorithm1, ContainerVariant::algorithm2}) {
      const auto f = build_container_family(g, Ratio(1), v);
      // i(G) <= sum over members of i(G[F]), with member counts from the oracle.
      O::Int sum = 0;
      for (const auto& F : f.members) {
        const auto idx = F.indices();
        std::vector<std::vector<char>> sub(idx.size(), std::vector<char>(idx.size(), 0));
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = a != b && g.adjacent(idx[a], idx[b]);
        sum += static_cast<unsigned long>(O::all_independent_sets(sub).size());
      }
      bool covered = true;
      for (const auto& s : sets) {
        const NodeSet I = to_nodeset(g.size(), s);
        bool inside = false;
        for (const auto& F : f.members) inside = inside || I.subset_of(F);
        covered = covered && inside;
      }
      o.expect(covered && O::Int(static_cast<unsigned long>(sets.size())) <= sum && sum == f.family_count,
               [&] { return fmt("family m=%ld variant=%ld", m, v == ContainerVariant::algorithm1 ? 1 : 2); });
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  long hyp33 = 0, hyp38 = 0;
  auto check = [&](int m, const LeeGraph& g, const std::vector<O::Vec>& ws, const std::vector<std::size_t>& C) {
    const int n = 2;
    const long t = 1;
    const O::Int N = static_cast<unsigned long>(ws.size());
    const O::Int v = O::poly_volume(m, n, t);
    const Ratio h = Ratio(N) / Ratio(v);
    std::vector<O::Int> E(3, 0);
    for (std::size_t a = 0; a < C.size(); ++a)
      for (std::size_t b = a + 1; b < C.size(); ++b) {
        const long d = O::dist(ws[C[a]], ws[C[b]], m);
        if (d <= 2 * t) E[static_cast<std::size_t>(d)] += 1;
      }
    const O::Int edges = E[1] + E[2];
    O::Int weighted = 0;
    for (long r = 1; r <= 2; ++r) weighted += O::intersection(m, n, t, center(m, n, r)) * E[static_cast<std::size_t>(r)];
    const Ratio size(static_cast<long>(C.size()));
    const auto rep = supersaturation_report(g, NodeSet::from_indices(g.size(), C));
    o.expect(rep.edges == edges && rep.weighted == weighted, [&] { return fmt("report mismatch m=%ld |C|=%ld", m, long(C.size())); });
    if (size >= 2 * h) {
      ++hyp33;
      const Ratio lower1 = size * size * Ratio(v * v) / Ratio(10 * N);
      const Ratio lower2 = Ratio(n) * size * size / ((m % 2 == 0 ? 5 : 10) * m * t * h);
      o.expect(Ratio(weighted) >= lower1 && Ratio(edges) >= lower2, [&] { return fmt("pair count m=%ld |C|=%ld", m, long(C.size())); });
    }
    const Ratio gamma = size - h;
    if (gamma > 0) {
      ++hyp38;
      const Ratio lower = m % 2 == 0 ? Ratio(gamma * 2 * n / (m * t)) : Ratio(gamma * n / (m * t));
      o.expect(Ratio(edges) >= lower, [&] { return fmt("gamma bound m=%ld |C|=%ld", m, long(C.size())); });
    }
  };
  {
    const auto g = build_lee_graph(Space(3, 2), 1);
    const auto ws = O::words(3, 2);
    for (unsigned mask = 0; mask < 512; ++mask) {
      std::vector<std::size_t> C;
      for (std::size_t i = 0; i < 9; ++i)
        if ((mask >> i) & 1) C.push_back(i);
      check(3, g, ws, C);
    }
  }
  {
    const auto g = build_lee_graph(Space(4, 2), 1);
    const auto ws = O::words(4, 2);
    std::mt19937_64 rng(20240607);
    for (int s = 0; s < 10000; ++s) {
      const auto mask = rng();
      std::vector<std::size_t> C;
      for (std::size_t i = 0; i < 16; ++i)
        if ((mask >> i) & 1) C.push_back(i);
      check(4, g, ws, C);
    }
  }
  o.extra = "hypothesis held for " + std::to_string(hyp33) + " subsets (pair count) and " + std::to_string(hyp38) + " (gamma)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int m : {3, 4})
    for (long S = 2; S <= 4; ++S) {
      const O::Int F = O::close_codes(m, 2, S, 1);
      const auto b = nonlinear_code_bounds(Space(m, 2), S, 1);
      o.expect(b.lower <= Ratio(F) && Ratio(F) <= b.upper, [&] { return fmt("nonlinear m=%ld S=%ld", m, S); });
      if (S == 2) o.expect(b.lower == Ratio(F) && b.upper == Ratio(F), [&] { return fmt("equality m=%ld", m); });
      const O::Int total = O::choose(static_cast<long>(m * m), S);
      const Ratio density = 1 - Ratio(F) / Ratio(total);
      const auto d = nonlinear_density_bounds(Space(m, 2), S, 1);
      o.expect(d.lower <= density && density <= d.upper, [&] { return fmt("nonlinear density m=%ld S=%ld", m, S); });
    }
  for (int p : {2, 3, 5})
    for (int n = 2; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k) {
        const auto subs = O::subspaces(p, n, k);
        long good = 0;
        for (const auto& s : subs) good += O::min_weight(s, p) >= 3 || O::min_weight(s, p) < 0;
        const Ratio density(good, static_cast<long>(subs.size()));
        const auto d = linear_density_bounds(p, n, k, 1);
        const auto b = linear_code_bounds(p, n, k, 1);
        const Ratio F(static_cast<long>(subs.size()) - good);
        o.expect(d.lower <= density && density <= d.upper && b.lower <= F && F <= b.upper,
                 [&] { return fmt("linear p=%ld n=%ld k=%ld", p, n, k); });
      }
  o.extra = "m=3, S=2: |F| = " + O::close_codes(3, 2, 2, 1).get_str() + " with both bounds equal";
  return o;
}

Outcome criterion9() {
  Outcome o;
  long elias = 0, plotkin = 0;
  for (int m = 3; m <= 5; ++m)
    for (int n = 2; n <= 3; ++n) {
      const Space sp(m, n);
      const long top = sp.max_distance();
      for (long d = 1; d <= top; ++d) {
        const long A = O::max_code(m, n, d);
        o.expect(max_code_size_exact(sp, d) == A, [&] { return fmt("A m=%ld n=%ld d=%ld", m, n, d); });
        const long t = (d - 1) / 2;
        o.expect(O::Int(A) <= floor(hamming_bound(sp, t)), [&] { return fmt("hamming m=%ld n=%ld d=%ld", m, n, d); });
        for (long r = 0; r <= top; ++r) {
          const auto e = elias_bound(sp, d, r);
          if (e.hypotheses_ok && ++elias) o.expect(Ratio(A) <= e.value, [&] { return fmt("elias m=%ld n=%ld d=%ld r=%ld", m, n, d, r); });
        }
        if (d % 2 == 1 && d >= 3 && is_prime(m)) {
          const auto p = plotkin_like_bound(m, 1, n, t);
          if (p.value.get_den() == 1 && ++plotkin)
            o.expect(Ratio(A) <= power_signed(Ratio(m), p.value.get_num().get_si()),
                     [&] { return fmt("plotkin m=%ld n=%ld d=%ld", m, n, d); });
        }
      }
    }
  o.extra = std::to_string(elias) + " Elias points within hypotheses, " + std::to_string(plotkin) + " integer Plotkin points";
  return o;
}

Outcome criterion10() {
  Outcome o;
  long cells = 0;
  for (int m : {4, 5}) {
    CompareOptions co;
    co.m = m;
    co.t_max = 3;
    co.n_max = 20;
    co.epsilon = Ratio(1, 10);
    for (const auto& c : compare_table(co)) {
      ++cells;
      o.expect(c.container_sharper, [&] { return fmt("m=%ld n=%ld t=%ld", c.m, c.n, c.t); });
      // Small spaces: recompute B exactly from its definition and compare decisions.
      const O::Int N = O::poly_volume(m, c.n, c.n * (m / 2));
      if (N > 1024) continue;
      const Ratio h = Ratio(N) / Ratio(O::poly_volume(m, c.n, c.t));
      o.expect(c.h == h && c.a_exact == h * Ratio(11, 10), [&] { return fmt("exponent m=%ld n=%ld t=%ld", c.m, c.n, c.t); });
      const O::Int v2 = O::poly_volume(m, c.n, 2 * c.t);
      const long Nl = N.get_si();
      const Ratio b0 = Ratio(N) * Ratio(v2 - 1) / 2 - 2 * Ratio(v2) + 3;
      const Ratio b1 = 2 * Ratio(v2) - 4;
      O::Int lower = 0;
      for (long S = 0; S <= Nl; ++S) {
        Ratio delta = 1;
        if (S >= 2) {
          Ratio theta = 1;
          if (S > 2) theta += b1 * (S - 2) / Ratio(N - 2) + b0 * (S - 2) * (S - 3) / Ratio((N - 2) * (N - 3));
          delta = 1 - Ratio((v2 - 1) * S * (S - 1)) / (2 * theta * Ratio(N - 1));
        }
        if (delta > 0) {
          Ratio term = Ratio(O::choose(Nl, S)) * delta;
          O::Int fl;
          mpz_fdiv_q(fl.get_mpz_t(), term.get_num_mpz_t(), term.get_den_mpz_t());
          lower += fl;
        }
      }
      // A < log2(lower)  <=>  2^A < lower; A = p/q, compare 2^p < lower^q.
      const Ratio A = c.a_exact;
      O::Int lhs, rhs;
      mpz_ui_pow_ui(lhs.get_mpz_t(), 2, A.get_num().get_ui());
      mpz_pow_ui(rhs.get_mpz_t(), lower.get_mpz_t(), A.get_den().get_ui());
      o.expect((lhs < rhs) == c.container_sharper, [&] { return fmt("exact recheck m=%ld n=%ld t=%ld", c.m, c.n, c.t); });
    }
  }
  o.extra = std::to_string(cells) + " cells";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const std::vector<long> primes{3, 5, 7, 11, 13};
  const auto lin = linear_lower_trend(3, 1, 1, primes);
  // Lower bound 1 - (v(3,2)-1)[2,0]/[3,1] with subspace counts from enumeration.
  std::vector<Ratio> ref;
  for (long p : primes) {
    const long lines = static_cast<long>(O::subspaces(static_cast<int>(p), 3, 1).size());
    ref.push_back(1 - Ratio(O::poly_volume(static_cast<int>(p), 3, 2) - 1) / Ratio(lines));
  }
  o.expect(lin.rows.size() == primes.size(), [] { return std::string("linear trend size"); });
  for (std::size_t i = 0; i < ref.size() && i < lin.rows.size(); ++i) {
    o.expect(lin.rows[i].exact && *lin.rows[i].exact == ref[i], [&] { return fmt("linear value p=%ld", primes[i]); });
    o.expect(ref[i] < 1, [&] { return fmt("below one p=%ld", primes[i]); });
    if (i) o.expect(ref[i] > ref[i - 1], [&] { return fmt("increase at p=%ld", primes[i]); });
  }
  const auto pl = plotkin_density_trend(3, 1, primes);
  std::ostringstream os;
  os << "plotkin-size density bound:";
  for (std::size_t i = 0; i < pl.rows.size(); ++i) {
    os << " " << static_cast<double>(pl.rows[i].approx);
    if (i) o.expect(pl.rows[i].approx < pl.rows[i - 1].approx, [&] { return fmt("plotkin decrease at p=%ld", primes[i]); });
  }
  o.extra = os.str();
  return o;
}

}  // namespace

int main() {
  report(1, "volume oracle equals enumeration", criterion1, kLimit1);
  report(2, "even closed form exact; odd closed form reconciled", criterion2);
  report(3, "volume sandwich and ratio inequalities", criterion3);
  report(4, "intersection closed form, monotonicity, vanishing, bounds", criterion4, kLimit4);
  report(5, "spot values", criterion5);
  report(6, "container containment and family soundness", criterion6, kLimit6);
  report(7, "supersaturation bounds", criterion7);
  report(8, "density sandwiches", criterion8);
  report(9, "bound soundness against exact A_m(n,d)", criterion9);
  report(10, "container exponent sharper than the bipartite bound", criterion10, kLimit10);
  report(11, "density trends", criterion11);
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
