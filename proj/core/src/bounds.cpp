#include "leelab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "leelab/errors.hpp"
#include "leelab/node_set.hpp"
#include "leelab/volumes.hpp"

namespace leelab {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Ratio hamming_bound(Space space, long t) {
  if (t < 0 || t > space.max_distance()) throw std::domain_error("radius out of range");
  return make_ratio(space.cardinality(), ball_volume(space, t));
}

BoundReport hamming_report(Space space, long t) {
  BoundReport r;
  r.name = "hamming";
  r.value = hamming_bound(space, t);
  r.hypotheses_ok = true;
  r.parameters = {{"m", std::to_string(space.m)}, {"n", std::to_string(space.n)}, {"t", std::to_string(t)}};
  return r;
}

BoundReport plotkin_like_bound(long p, long s, long n, long t) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("Plotkin-like bound needs a prime p >= 3");
  if (s < 1) throw std::domain_error("exponent s must be at least 1");
  if (n < 1 || t < 0) throw std::domain_error("bad length or radius");
  BoundReport r;
  r.name = "plotkin";
  const Count q = power(p, static_cast<unsigned long>(s));
  r.value = Ratio(s) * (Ratio(n) - make_ratio(Count(8 * t + 4), q + 1) + 1);
  r.log_base = p;
  r.hypotheses_ok = true;
  r.parameters = {{"p", std::to_string(p)}, {"s", std::to_string(s)}, {"n", std::to_string(n)}, {"t", std::to_string(t)}};
  r.note = "bound = p^value";
  return r;
}

BoundReport elias_bound(Space space, long d, long r) {
  BoundReport rep;
  rep.name = "elias";
  rep.parameters = {{"m", std::to_string(space.m)}, {"n", std::to_string(space.n)}, {"d", std::to_string(d)},
                    {"r", std::to_string(r)}};
  if (d < 1 || r < 0) throw std::domain_error("distance must be >= 1 and radius >= 0");
  const Ratio theta_n = average_lee_weight(space.m) * space.n;
  const Ratio denom = Ratio(r * r) - 2 * theta_n * r + theta_n * d;
  if (Ratio(r) > theta_n) {
    rep.note = "r exceeds theta*n";
    return rep;
  }
  if (denom <= 0) {
    rep.note = "nonpositive denominator";
    return rep;
  }
  rep.hypotheses_ok = true;
  rep.value = theta_n * d / denom * make_ratio(space.cardinality(), ball_volume(space, r));
  return rep;
}

BoundReport elias_preset(Space space, long t) {
  auto rep = elias_bound(space, 2 * t + 1, t + kEliasPresetOffset);
  rep.name = "elias_preset";
  return rep;
}

GvResult gv_radius(Space space, const Ratio& rate) {
  if (rate < 0 || rate >= 1) throw std::domain_error("rate must lie in [0, 1)");
  GvResult g;
  g.exponent = Ratio(space.n) * (1 - rate);
  // v^b >= m^a with a/b = n(1-R).
  const auto a = g.exponent.get_num().get_ui();
  const auto b = g.exponent.get_den().get_ui();
  const Count target = power(static_cast<long>(space.m), a);
  for (long t = 0;; ++t) {
    g.t = t;
    g.volume = ball_volume(space, 2 * t);
    if (power(g.volume, b) >= target) return g;
  }
}

namespace {

struct MisSearch {
  std::vector<NodeSet> adj;  // conflict graph on local indices
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  std::uint64_t expanded = 0;
  std::uint64_t cap = 0;

  void expand(NodeSet candidates) {
    if (++expanded > cap) throw CapacityError("branch-and-bound node cap exceeded");
    // Greedy clique cover: each class contributes at most one vertex.
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    NodeSet uncovered = candidates;
    std::size_t classes = 0;
    while (!uncovered.empty()) {
      ++classes;
      NodeSet q = uncovered;
      while (!q.empty()) {
        const auto v = q.first();
        uncovered.reset(v);
        q.reset(v);
        q &= adj[v];
        order.push_back(v);
        bound.push_back(classes);
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + bound[k] <= best.size()) return;
      const auto v = order[k];
      current.push_back(v);
      NodeSet next = candidates;
      next.subtract(adj[v]);
      next.reset(v);
      if (next.empty()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }
};

}  // namespace

ExactCodeResult search_max_code(Space space, long d, const Limits& limits) {
  const auto total = space.checked_size(limits.exact_search);
  ExactCodeResult res;
  if (d <= 1) {
    res.size = Count(static_cast<unsigned long>(total));
    res.code.resize(total);
    std::iota(res.code.begin(), res.code.end(), std::uint64_t{0});
    return res;
  }
  std::vector<Word> words;
  words.reserve(total);
  for (const auto& w : iter_words(space, total)) words.push_back(w);

  // Vertex-transitivity: some optimal code contains the zero word.
  std::vector<std::uint64_t> cand;
  for (std::uint64_t v = 1; v < total; ++v)
    if (lee_weight(words[v]) >= d) cand.push_back(v);
  const std::size_t k = cand.size();

  std::vector<NodeSet> adj(k, NodeSet(k));
  std::vector<std::size_t> degree(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (lee_distance(words[cand[a]], words[cand[b]]) < d) {
        adj[a].set(b);
        adj[b].set(a);
        ++degree[a];
        ++degree[b];
      }

  // Local labels follow descending degree, ties by word order.
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });
  std::vector<std::size_t> label(k);
  for (std::size_t i = 0; i < k; ++i) label[perm[i]] = i;

  MisSearch s;
  s.cap = limits.search_nodes;
  s.adj.assign(k, NodeSet(k));
  for (std::size_t a = 0; a < k; ++a) adj[a].for_each([&](std::size_t b) { s.adj[label[a]].set(label[b]); });

  // Greedy lower bound in label order.
  NodeSet free(k, true);
  while (!free.empty()) {
    const auto v = free.first();
    s.best.push_back(v);
    free.subtract(s.adj[v]);
    free.reset(v);
  }
  if (k > 0) s.expand(NodeSet(k, true));

  res.code.push_back(0);
  for (auto v : s.best) res.code.push_back(cand[perm[v]]);
  std::sort(res.code.begin(), res.code.end());
  res.size = Count(static_cast<unsigned long>(res.code.size()));
  res.expanded = s.expanded;
  return res;
}

Count max_code_size_exact(Space space, long d, const Limits& limits) { return search_max_code(space, d, limits).size; }

}  // namespace leelab
