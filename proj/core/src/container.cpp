#include "leelab/container.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "leelab/errors.hpp"
#include "leelab/intersections.hpp"
#include "leelab/volumes.hpp"

namespace leelab {

using nlohmann::json;

LeeGraph::LeeGraph(Space space, long t, std::vector<Word> words, std::vector<std::vector<std::uint32_t>> adjacency)
    : space_(space), t_(t), words_(std::move(words)), adjacency_(std::move(adjacency)) {}

bool LeeGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(b));
}

bool LeeGraph::is_independent(const NodeSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t v) {
    for (auto u : adjacency_[v])
      if (s.test(u)) ok = false;
  });
  return ok;
}

NodeSet LeeGraph::parse_set(const std::string& csv) const {
  NodeSet s(size());
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    s.set(static_cast<std::size_t>(word_index(parse_digit_string(space_, item))));
  }
  return s;
}

std::string LeeGraph::format_set(const NodeSet& s) const {
  std::string out;
  s.for_each([&](std::size_t v) {
    if (!out.empty()) out += ',';
    out += to_digit_string(words_[v]);
  });
  return out;
}

namespace {

LeeGraph build_graph(Space space, long max_distance, long t, const Limits& limits) {
  const auto total = space.checked_size(limits.explicit_graph);
  std::vector<Word> words;
  words.reserve(total);
  for (const auto& w : iter_words(space, total)) words.push_back(w);
  // Offsets of the punctured ball; neighbors are translates.
  std::vector<const Word*> offsets;
  for (const auto& w : words) {
    const long wt = lee_weight(w);
    if (wt >= 1 && wt <= max_distance) offsets.push_back(&w);
  }
  std::vector<std::vector<std::uint32_t>> adj(total);
  for (std::uint64_t v = 0; v < total; ++v) {
    auto& row = adj[v];
    row.reserve(offsets.size());
    for (const Word* off : offsets) {
      std::uint64_t idx = 0;
      for (std::size_t k = 0; k < words[v].coords.size(); ++k) {
        const int c = (words[v].coords[k] + off->coords[k]) % space.m;
        idx = idx * static_cast<std::uint64_t>(space.m) + static_cast<std::uint64_t>(c);
      }
      row.push_back(static_cast<std::uint32_t>(idx));
    }
    std::sort(row.begin(), row.end());
  }
  return LeeGraph(space, t, std::move(words), std::move(adj));
}

}  // namespace

LeeGraph build_distance_graph(Space space, long max_distance, const Limits& limits) {
  return build_graph(space, max_distance, (max_distance + 1) / 2, limits);
}

LeeGraph build_lee_graph(Space space, long t, const Limits& limits) {
  if (t < 0) throw std::domain_error("negative radius");
  return build_graph(space, 2 * t, t, limits);
}

DegreeProfile degree_profile(const LeeGraph& g, const NodeSet& subset) {
  DegreeProfile p;
  p.t = g.t();
  p.nodes = subset.indices();
  const auto width = static_cast<std::size_t>(2 * g.t() + 1);
  p.edges_by_distance.assign(width, 0);
  std::vector<long> twice(width, 0);
  for (auto v : p.nodes) {
    std::vector<long> row(width, 0);
    long total = 0;
    for (auto u : g.neighbors(v)) {
      if (!subset.test(u)) continue;
      ++row[static_cast<std::size_t>(g.distance(v, u))];
      ++total;
    }
    for (std::size_t r = 0; r < width; ++r) twice[r] += row[r];
    p.max_degree = std::max(p.max_degree, total);
    const long n = g.space().n;
    for (long r = 1; r < static_cast<long>(width) && 2 * r <= n; ++r)
      if (Count(row[static_cast<std::size_t>(r)]) > power(3, static_cast<unsigned long>(r)) * binomial(n, r))
        p.degree_bound_holds = false;
    p.degree.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < width; ++r) {
    p.edges_by_distance[r] = twice[r] / 2;
    p.edges += p.edges_by_distance[r];
  }
  return p;
}

namespace {

// Bitset adjacency of an induced subgraph, relabelled 0..k-1.
struct LocalGraph {
  std::vector<NodeSet> adj;
  std::vector<std::size_t> global;
};

LocalGraph make_local(const LeeGraph& g, const NodeSet& subset) {
  LocalGraph l;
  l.global = subset.indices();
  const auto k = l.global.size();
  std::vector<std::size_t> local(g.size(), NodeSet::npos);
  for (std::size_t i = 0; i < k; ++i) local[l.global[i]] = i;
  l.adj.assign(k, NodeSet(k));
  for (std::size_t i = 0; i < k; ++i)
    for (auto u : g.neighbors(l.global[i]))
      if (local[u] != NodeSet::npos) l.adj[i].set(local[u]);
  return l;
}

NodeSet component_of(const std::vector<NodeSet>& adj, const NodeSet& within, std::size_t start) {
  NodeSet comp(within.universe());
  NodeSet frontier(within.universe());
  frontier.set(start);
  while (!frontier.empty()) {
    comp |= frontier;
    NodeSet next(within.universe());
    frontier.for_each([&](std::size_t v) { next |= adj[v]; });
    next &= within;
    next.subtract(comp);
    frontier = std::move(next);
  }
  return comp;
}

using Poly = std::vector<Count>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly add(Poly a, const Poly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  return a;
}

// Split on a maximum-degree vertex, factor over components, memoize.
class IndependenceCounter {
 public:
  explicit IndependenceCounter(const std::vector<NodeSet>& adj) : adj_(adj) {}

  Poly polynomial(const NodeSet& s) {
    if (s.empty()) return Poly{1};
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    Poly result;
    const NodeSet comp = component_of(adj_, s, s.first());
    if (!(comp == s)) {
      NodeSet rest = s;
      rest.subtract(comp);
      result = multiply(polynomial(comp), polynomial(rest));
    } else {
      std::size_t pick = NodeSet::npos, best = 0;
      s.for_each([&](std::size_t v) {
        const auto d = adj_[v].count_and(s);
        if (pick == NodeSet::npos || d > best) {
          pick = v;
          best = d;
        }
      });
      if (best == 0) {
        // single isolated vertex
        result = Poly{1, 1};
      } else {
        NodeSet without = s;
        without.reset(pick);
        NodeSet closed = without;
        closed.subtract(adj_[pick]);
        result = add(polynomial(without), polynomial(closed), 1);
      }
    }
    memo_.emplace(s, result);
    return result;
  }

  Count count(const NodeSet& s) {
    Count total = 0;
    for (const auto& c : polynomial(s)) total += c;
    return total;
  }

 private:
  const std::vector<NodeSet>& adj_;
  std::unordered_map<NodeSet, Poly, NodeSetHash> memo_;
};

void check_counting_cap(std::size_t k, const Limits& limits) {
  if (k > limits.counting_nodes)
    throw CapacityError("independent-set counting on " + std::to_string(k) + " nodes exceeds cap " +
                        std::to_string(limits.counting_nodes));
}

}  // namespace

std::vector<Count> independence_polynomial(const LeeGraph& g, const std::optional<NodeSet>& induced_on,
                                           const Limits& limits) {
  const NodeSet subset = induced_on ? *induced_on : g.all();
  check_counting_cap(subset.count(), limits);
  const auto local = make_local(g, subset);
  IndependenceCounter counter(local.adj);
  return counter.polynomial(NodeSet(local.global.size(), true));
}

Count count_independent_sets(const LeeGraph& g, const std::optional<NodeSet>& induced_on, const Limits& limits) {
  Count total = 0;
  for (const auto& c : independence_polynomial(g, induced_on, limits)) total += c;
  return total;
}

void for_each_independent_set(const LeeGraph& g, const std::function<void(const NodeSet&)>& visit,
                              const Limits& limits) {
  const auto local = make_local(g, g.all());
  const std::size_t k = local.global.size();
  std::uint64_t emitted = 0;
  NodeSet current(k);
  // allowed[v]: vertices > last chosen that conflict with nothing chosen.
  std::function<void(const NodeSet&)> rec = [&](const NodeSet& allowed) {
    if (++emitted > limits.independent_sets) throw CapacityError("independent-set enumeration cap exceeded");
    visit(current);
    for (auto v = allowed.first(); v != NodeSet::npos; v = allowed.next(v + 1)) {
      NodeSet next = allowed;
      next.subtract(local.adj[v]);
      for (auto u = next.first(); u != NodeSet::npos && u <= v; u = next.next(u + 1)) next.reset(u);
      current.set(v);
      rec(next);
      current.reset(v);
    }
  };
  rec(NodeSet(k, true));
}

std::vector<NodeSet> enumerate_independent_sets(const LeeGraph& g, const Limits& limits) {
  std::vector<NodeSet> out;
  for_each_independent_set(g, [&](const NodeSet& s) { out.push_back(s); }, limits);
  return out;
}

std::string to_string(ContainerVariant v) { return v == ContainerVariant::algorithm1 ? "algorithm1" : "algorithm2"; }

NodeSet ContainerRun::members() const {
  NodeSet s = fingerprint;
  s |= container;
  return s;
}

Ratio algorithm1_delta(Space space, long t, const Ratio& epsilon, std::optional<Ratio> c_m) {
  if (t < 1) throw std::domain_error("radius must be at least 1");
  const long m = space.m;
  const long n = space.n;
  switch (ratio_branch(space.m, t)) {
    case RatioBranch::even: return Ratio(epsilon * n / (m * t));
    case RatioBranch::odd_exceptional:
      if (!c_m) throw std::domain_error("constant C_m required for m odd, t = ceil(m/2)");
      return Ratio(epsilon * n / (m * *c_m));
    case RatioBranch::generic: return Ratio(epsilon * n / (2 * m * t));
  }
  return 0;
}

namespace {

struct LiveGraph {
  const LeeGraph& g;
  NodeSet live;
  std::vector<long> degree;

  explicit LiveGraph(const LeeGraph& graph) : g(graph), live(graph.all()), degree(graph.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) degree[v] = static_cast<long>(g.degree(v));
  }

  // Maximum live degree, ties to the lowest index.
  std::size_t pick() const {
    std::size_t best = NodeSet::npos;
    live.for_each([&](std::size_t v) {
      if (best == NodeSet::npos || degree[v] > degree[best]) best = v;
    });
    return best;
  }

  void remove(std::size_t v) {
    if (!live.test(v)) return;
    live.reset(v);
    for (auto u : g.neighbors(v))
      if (live.test(u)) --degree[u];
  }

  void remove_closed(std::size_t v) {
    std::vector<std::size_t> doomed{v};
    for (auto u : g.neighbors(v))
      if (live.test(u)) doomed.push_back(u);
    for (auto u : doomed) remove(u);
  }
};

void check_input(const LeeGraph& g, const NodeSet& independent) {
  if (independent.universe() != g.size()) throw std::domain_error("set does not match graph size");
  if (!g.is_independent(independent)) throw std::domain_error("input set is not independent");
}

void finish(ContainerRun& run) { run.contains_input = run.input.subset_of(run.members()); }

}  // namespace

ContainerRun run_algorithm1(const LeeGraph& g, const NodeSet& independent, const Ratio& epsilon,
                            std::optional<Ratio> c_m) {
  check_input(g, independent);
  ContainerRun run;
  run.variant = ContainerVariant::algorithm1;
  run.epsilon = epsilon;
  run.delta_threshold = algorithm1_delta(g.space(), g.t(), epsilon, c_m);
  run.input = independent;
  run.fingerprint = NodeSet(g.size());
  run.container = NodeSet(g.size());
  LiveGraph live(g);
  for (std::size_t step = 1;; ++step) {
    ContainerStep s;
    s.index = step;
    const auto u = live.pick();
    if (u == NodeSet::npos) {
      s.action = "exhausted";
      run.steps.push_back(s);
      break;
    }
    s.node = u;
    s.degree = live.degree[u];
    if (!independent.test(u)) {
      live.remove(u);
      s.action = "drop";
    } else if (Ratio(s.degree) >= run.delta_threshold) {
      run.fingerprint.set(u);
      live.remove_closed(u);
      s.action = "take";
    } else {
      run.container = live.live;
      s.action = "stop";
      s.live_after = live.live.count();
      run.steps.push_back(s);
      break;
    }
    s.live_after = live.live.count();
    run.steps.push_back(s);
  }
  finish(run);
  return run;
}

ContainerRun run_algorithm2(const LeeGraph& g, const NodeSet& independent, const Ratio& epsilon,
                            std::optional<Ratio> h, const Limits& limits) {
  check_input(g, independent);
  check_counting_cap(g.size(), limits);
  ContainerRun run;
  run.variant = ContainerVariant::algorithm2;
  run.epsilon = epsilon;
  const Ratio hv = h ? *h : make_ratio(g.space().cardinality(), ball_volume(g.space(), g.t()));
  run.delta_threshold = (1 + epsilon) * hv;
  run.input = independent;
  run.fingerprint = NodeSet(g.size());
  run.container = NodeSet(g.size());
  const auto local = make_local(g, g.all());
  IndependenceCounter counter(local.adj);
  LiveGraph live(g);
  for (std::size_t step = 1;; ++step) {
    ContainerStep s;
    s.index = step;
    const Count count = counter.count(live.live);
    s.independent_sets = count;
    if (le_power_of_two(count, run.delta_threshold)) {
      run.container = live.live;
      s.action = "count_ok";
      s.live_after = live.live.count();
      run.steps.push_back(s);
      break;
    }
    // A nonempty graph always has i(G) >= 2 > 2^x for x < 1, so the live set is nonempty here
    // unless the threshold is negative.
    const auto u = live.pick();
    if (u == NodeSet::npos) {
      s.action = "exhausted";
      run.steps.push_back(s);
      break;
    }
    s.node = u;
    s.degree = live.degree[u];
    if (!independent.test(u)) {
      live.remove(u);
      s.action = "drop";
    } else {
      run.fingerprint.set(u);
      live.remove_closed(u);
      s.action = "take";
    }
    s.live_after = live.live.count();
    run.steps.push_back(s);
  }
  finish(run);
  return run;
}

namespace {

json ratio_json(const Ratio& q) { return json{{"fraction", to_fraction(q)}, {"decimal", to_decimal(q)}}; }

}  // namespace

std::string to_jsonl(const LeeGraph& g, const ContainerRun& run) {
  std::string out;
  json head = {{"type", "run"},
               {"variant", to_string(run.variant)},
               {"m", g.space().m},
               {"n", g.space().n},
               {"t", g.t()},
               {"epsilon", ratio_json(run.epsilon)},
               {run.variant == ContainerVariant::algorithm1 ? "delta" : "log2_threshold", ratio_json(run.delta_threshold)},
               {"input", g.format_set(run.input)}};
  out += head.dump() + "\n";
  for (const auto& s : run.steps) {
    json line = {{"type", "step"}, {"step", s.index}, {"action", s.action}, {"live_after", s.live_after}};
    if (s.action != "exhausted" && s.action != "count_ok") {
      line["node"] = to_digit_string(g.word(s.node));
      line["degree"] = s.degree;
    }
    if (s.independent_sets) line["independent_sets"] = to_string(*s.independent_sets);
    out += line.dump() + "\n";
  }
  json tail = {{"type", "result"},
               {"fingerprint", g.format_set(run.fingerprint)},
               {"container", g.format_set(run.container)},
               {"fingerprint_size", run.fingerprint.count()},
               {"container_size", run.container.count()},
               {"contains_input", run.contains_input}};
  out += tail.dump() + "\n";
  return out;
}

ContainerFamily build_container_family(const LeeGraph& g, const Ratio& epsilon, ContainerVariant variant,
                                       const ContainerParams& params, const Limits& limits) {
  ContainerFamily fam;
  fam.variant = variant;
  fam.epsilon = epsilon;
  std::set<NodeSet> members;
  std::vector<NodeSet> sets;
  for_each_independent_set(g, [&](const NodeSet& s) { sets.push_back(s); }, limits);
  fam.independent_sets = sets.size();
  for (const auto& s : sets) {
    const auto run = variant == ContainerVariant::algorithm1 ? run_algorithm1(g, s, epsilon, params.c_m)
                                                             : run_algorithm2(g, s, epsilon, params.h, limits);
    members.insert(run.members());
  }
  fam.members.assign(members.begin(), members.end());
  fam.covers_all = std::all_of(sets.begin(), sets.end(), [&](const NodeSet& s) {
    return std::any_of(fam.members.begin(), fam.members.end(), [&](const NodeSet& f) { return s.subset_of(f); });
  });
  fam.total_count = Count(static_cast<unsigned long>(sets.size()));
  for (const auto& f : fam.members) fam.family_count += count_independent_sets(g, f, limits);
  fam.counting_sound = fam.total_count <= fam.family_count;
  return fam;
}

SupersaturationReport supersaturation_report(const LeeGraph& g, const NodeSet& subset, std::optional<Ratio> c_m,
                                             std::optional<Ratio> epsilon) {
  SupersaturationReport rep;
  const Space sp = g.space();
  const long t = g.t();
  const long m = sp.m;
  const long n = sp.n;
  const auto nodes = subset.indices();
  rep.size = static_cast<long>(nodes.size());
  rep.volume = ball_volume(sp, t);
  rep.h = make_ratio(sp.cardinality(), rep.volume);
  rep.epsilon = epsilon;

  rep.w.assign(static_cast<std::size_t>(2 * t + 1), 0);
  for (long r = 0; r <= 2 * t; ++r)
    if (r <= sp.max_distance()) rep.w[static_cast<std::size_t>(r)] = intersection_size({sp, t, r});

  // Pairwise distances inside C.
  rep.radius_window = std::min<long>(20, sp.max_distance());
  const auto hist_width = static_cast<std::size_t>(std::max(2 * t, rep.radius_window) + 1);
  std::vector<std::vector<long>> hist(nodes.size(), std::vector<long>(hist_width, 0));
  rep.edges_by_distance.assign(static_cast<std::size_t>(2 * t + 1), 0);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const long d = g.distance(nodes[a], nodes[b]);
      if (static_cast<std::size_t>(d) < hist_width) {
        ++hist[a][static_cast<std::size_t>(d)];
        ++hist[b][static_cast<std::size_t>(d)];
      }
      if (d <= 2 * t) rep.edges_by_distance[static_cast<std::size_t>(d)] += 1;
    }
  for (long r = 1; r <= 2 * t; ++r) {
    rep.edges += rep.edges_by_distance[static_cast<std::size_t>(r)];
    rep.weighted += rep.w[static_cast<std::size_t>(r)] * rep.edges_by_distance[static_cast<std::size_t>(r)];
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    long k = 0;
    for (auto c : nodes)
      if (g.distance(x, c) <= t) ++k;
    rep.ball_pairs += binomial(k, 2);
  }

  const Ratio size(rep.size);
  const auto branch = ratio_branch(sp.m, t);
  rep.dense_hypothesis = size >= 2 * rep.h;
  rep.weighted_lower = size * size * Ratio(rep.volume * rep.volume) / Ratio(10 * sp.cardinality());
  rep.weighted_ok = Ratio(rep.weighted) >= rep.weighted_lower;
  const Ratio sq = Ratio(n) * size * size;
  switch (branch) {
    case RatioBranch::even: rep.dense_edges_lower = sq / (5 * m * t * rep.h); break;
    case RatioBranch::odd_exceptional:
      if (c_m) rep.dense_edges_lower = sq / (10 * m * *c_m * rep.h);
      break;
    case RatioBranch::generic: rep.dense_edges_lower = sq / (10 * m * t * rep.h); break;
  }
  rep.dense_edges_ok = rep.dense_edges_lower && Ratio(rep.edges) >= *rep.dense_edges_lower;

  rep.gamma = size - rep.h;
  rep.excess_hypothesis = rep.gamma > 0;
  switch (branch) {
    case RatioBranch::even: rep.excess_edges_lower = rep.gamma * 2 * n / (m * t); break;
    case RatioBranch::odd_exceptional:
      if (c_m) rep.excess_edges_lower = rep.gamma * n / (m * *c_m);
      break;
    case RatioBranch::generic: rep.excess_edges_lower = rep.gamma * n / (m * t); break;
  }
  rep.excess_edges_ok = rep.excess_edges_lower && Ratio(rep.edges) >= *rep.excess_edges_lower;

  if (epsilon) {
    const Ratio eps2 = *epsilon * *epsilon;
    const long double c2_threshold = std::log(static_cast<long double>(n)) / std::stold(to_decimal(*epsilon, 30));
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      bool in_c1 = true;
      long window_sum = 0;
      for (long r = 1; r <= rep.radius_window; ++r) {
        const long d = hist[a][static_cast<std::size_t>(r)];
        window_sum += d;
        // deg_r <= eps n^{ceil(r/2)/2}  <=>  deg_r^2 <= eps^2 n^{ceil(r/2)}
        if (Ratio(d * d) > eps2 * Ratio(power(n, static_cast<unsigned long>((r + 1) / 2)))) in_c1 = false;
      }
      const bool in_c2 = static_cast<long double>(window_sum) >= c2_threshold;
      rep.c1_size += in_c1;
      rep.c2_size += in_c2;
      rep.c1_c2_union += (in_c1 || in_c2);
    }
  }
  return rep;
}

}  // namespace leelab
