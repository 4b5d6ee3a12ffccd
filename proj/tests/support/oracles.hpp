#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library; everything is recomputed from the definitions.

#include <gmpxx.h>

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<int>;

inline int wt(int x, int m) {
  x %= m;
  if (x < 0) x += m;
  return std::min(x, m - x);
}

inline long weight(const Vec& v, int m) {
  long s = 0;
  for (int x : v) s += wt(x, m);
  return s;
}

inline long dist(const Vec& a, const Vec& b, int m) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += wt(a[i] - b[i], m);
  return s;
}

// All words of Z_m^n, lexicographic.
inline std::vector<Vec> words(int m, int n) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && ++v[static_cast<std::size_t>(k)] == m) v[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return out;
}

inline Int choose(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

// Cumulative weight histogram by enumeration: v[r] = |B(n, r)|.
inline std::vector<Int> enumerated_volumes(int m, int n) {
  std::vector<Int> h(static_cast<std::size_t>(n * (m / 2) + 1), 0);
  for (const auto& w : words(m, n)) h[static_cast<std::size_t>(weight(w, m))] += 1;
  for (std::size_t r = 1; r < h.size(); ++r) h[r] += h[r - 1];
  return h;
}

// Volume by repeated polynomial multiplication of the one-coordinate weight
// distribution; for spaces too large to enumerate.
inline Int poly_volume(int m, long n, long r) {
  if (r < 0) return 0;
  std::vector<Int> one(static_cast<std::size_t>(m / 2 + 1), 0);
  for (int x = 0; x < m; ++x) one[static_cast<std::size_t>(wt(x, m))] += 1;
  std::vector<Int> acc{1};
  for (long k = 0; k < n; ++k) {
    std::vector<Int> nxt(acc.size() + one.size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < one.size(); ++b) nxt[a + b] += acc[a] * one[b];
    acc = std::move(nxt);
  }
  Int s = 0;
  for (std::size_t w = 0; w < acc.size() && static_cast<long>(w) <= r; ++w) s += acc[w];
  return s;
}

inline Int intersection(int m, int n, long t, const Vec& c) {
  Int s = 0;
  const Vec zero(static_cast<std::size_t>(n), 0);
  for (const auto& z : words(m, n))
    if (dist(z, zero, m) <= t && dist(z, c, m) <= t) s += 1;
  return s;
}

// Adjacency on Z_m^n for 0 < d < dmin.
inline std::vector<std::vector<char>> conflict_matrix(int m, int n, long dmin) {
  const auto ws = words(m, n);
  std::vector<std::vector<char>> adj(ws.size(), std::vector<char>(ws.size(), 0));
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = 0; b < ws.size(); ++b) adj[a][b] = a != b && dist(ws[a], ws[b], m) < dmin;
  return adj;
}

// Every independent set (as sorted index list) of a graph given by matrix.
inline std::vector<std::vector<std::size_t>> all_independent_sets(const std::vector<std::vector<char>>& adj) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(cur);
    for (std::size_t v = from; v < adj.size(); ++v) {
      bool ok = true;
      for (auto u : cur) ok = ok && !adj[u][v];
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Largest independent set size. Clique-cover bound: an independent set meets
// every clique at most once, so a greedy clique partition of the candidates
// caps what is still reachable. At most 256 nodes.
inline long max_independent(const std::vector<std::vector<char>>& adj) {
  using Bits = std::bitset<256>;
  const std::size_t k = adj.size();
  std::vector<Bits> nb(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (adj[a][b]) nb[a].set(b);
  auto first = [&](const Bits& s) {
    for (std::size_t i = 0; i < k; ++i)
      if (s.test(i)) return i;
    return k;
  };
  auto cover = [&](Bits rest) {
    long parts = 0;
    while (rest.any()) {
      Bits clique_pool = rest;
      while (clique_pool.any()) {
        const auto v = first(clique_pool);
        rest.reset(v);
        clique_pool &= nb[v];
      }
      ++parts;
    }
    return parts;
  };
  long best = 0;
  std::function<void(Bits, long)> rec = [&](Bits cand, long size) {
    if (size > best) best = size;
    while (cand.any()) {
      if (size + cover(cand) <= best) return;
      const auto v = first(cand);
      cand.reset(v);
      rec(cand & ~nb[v], size + 1);
    }
  };
  Bits all;
  for (std::size_t i = 0; i < k; ++i) all.set(i);
  rec(all, 0);
  return best;
}

// A_m(n, d): maximum code size with pairwise distance >= d. Translations act
// transitively, so some optimal code contains the zero word.
inline long max_code(int m, int n, long d) {
  const auto ws = words(m, n);
  if (d <= 1) return static_cast<long>(ws.size());
  std::vector<std::size_t> cand;
  for (std::size_t i = 1; i < ws.size(); ++i)
    if (weight(ws[i], m) >= d) cand.push_back(i);
  std::vector<std::vector<char>> adj(cand.size(), std::vector<char>(cand.size(), 0));
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = 0; b < cand.size(); ++b) adj[a][b] = a != b && dist(ws[cand[a]], ws[cand[b]], m) < d;
  return 1 + max_independent(adj);
}

// Number of S-subsets of Z_m^n with some pair at distance <= 2t.
inline Int close_codes(int m, int n, long S, long t) {
  const auto ws = words(m, n);
  const std::size_t N = ws.size();
  Int close = 0;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<long>(idx.size()) == S) {
      bool bad = false;
      for (std::size_t a = 0; a < idx.size() && !bad; ++a)
        for (std::size_t b = a + 1; b < idx.size() && !bad; ++b) bad = dist(ws[idx[a]], ws[idx[b]], m) <= 2 * t;
      close += bad;
      return;
    }
    for (std::size_t v = from; v < N; ++v) {
      idx.push_back(v);
      rec(v + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return close;
}

// All k-dimensional subspaces of F_p^n as sorted sets of vectors.
inline std::set<std::vector<Vec>> subspaces(int p, int n, int k) {
  const auto ws = words(p, n);
  std::set<std::vector<Vec>> out;
  std::vector<std::size_t> gen;
  auto span = [&]() {
    std::set<Vec> s;
    for (const auto& coeff : words(p, static_cast<int>(gen.size()))) {
      Vec v(static_cast<std::size_t>(n), 0);
      for (std::size_t g = 0; g < gen.size(); ++g)
        for (int i = 0; i < n; ++i) v[i] = (v[i] + coeff[g] * ws[gen[g]][i]) % p;
      s.insert(v);
    }
    return std::vector<Vec>(s.begin(), s.end());
  };
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(gen.size()) == k) {
      auto s = span();
      long size = 1;
      for (int i = 0; i < k; ++i) size *= p;
      if (static_cast<long>(s.size()) == size) out.insert(std::move(s));
      return;
    }
    for (std::size_t v = from; v < ws.size(); ++v) {
      gen.push_back(v);
      rec(v + 1);
      gen.pop_back();
    }
  };
  rec(1);  // skip the zero vector
  return out;
}

inline long min_weight(const std::vector<Vec>& code, int p) {
  long best = -1;
  for (const auto& c : code) {
    const long w = weight(c, p);
    if (w > 0 && (best < 0 || w < best)) best = w;
  }
  return best;
}

// Number of weak compositions of j into n parts, each part at most M.
inline Int capped_compositions(long j, int n, int M) {
  Int c = 0;
  for (const auto& v : words(M + 1, n)) {
    long s = 0;
    for (int x : v) s += x;
    c += s == j;
  }
  return c;
}

}  // namespace oracle
