#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "leelab/bounds.hpp"
#include "leelab/compare.hpp"
#include "leelab/container.hpp"
#include "leelab/density.hpp"
#include "leelab/errors.hpp"
#include "leelab/intersections.hpp"
#include "leelab/verify.hpp"
#include "leelab/volumes.hpp"
#include "output.hpp"

namespace leelab::cli {

namespace {

using E = Exactness;

struct Context {
  std::string format = "table";
  std::string out_path;
  std::uint64_t seed = 42;
  Limits limits;
  std::ostream* out = nullptr;
};

Limits limits_from_env() {
  Limits l;
  if (const char* cap = std::getenv("LEELAB_CAP_NODES")) {
    char* end = nullptr;
    const auto v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0) throw std::invalid_argument("LEELAB_CAP_NODES must be a positive integer");
    l.explicit_graph = v;
  }
  return l;
}

std::string s(long v) { return std::to_string(v); }

Output make_output(std::string command, std::vector<std::pair<std::string, std::string>> params) {
  Output o;
  o.command = std::move(command);
  o.parameters = std::move(params);
  return o;
}

Ratio ratio_arg(const std::string& text, const char* what) {
  try {
    return parse_ratio(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": " + text);
  }
}

// C_m for the odd-exceptional branch: taken from the flag, else estimated.
std::optional<Ratio> constant_for(int m, long t, const std::string& flag, Output& o) {
  if (!flag.empty()) return ratio_arg(flag, "--cm");
  if (ratio_branch(m, t) != RatioBranch::odd_exceptional) return std::nullopt;
  const auto e = estimate_constant_cm(m, 2, 8);
  o.notes.push_back("C_" + std::to_string(m) + " = " + to_fraction(e.value) + " estimated on n in [2,8] (" +
                    std::to_string(e.inequalities) + " inequalities)");
  return e.value;
}

// ----------------------------------------------------------------- volume

struct VolumeArgs {
  int m = 0, n = 0;
  std::optional<long> r;
  std::string method = "oracle";
};

Output cmd_volume(const VolumeArgs& a) {
  const Space sp(a.m, a.n);
  Output o = make_output("volume", {{"m", s(a.m)}, {"n", s(a.n)}, {"method", a.method}});
  if (a.r) o.parameters.emplace_back("r", s(*a.r));
  std::vector<long> radii;
  if (a.r) radii.push_back(*a.r);
  else
    for (long r = a.method == "bounds" ? 1 : 0; r <= sp.max_distance(); ++r) radii.push_back(r);
  long disagreements = 0;
  for (long r : radii) {
    if (r < 0 || r > sp.max_distance()) throw std::domain_error("radius outside [0, n*floor(m/2)]");
    Record rec{Field::integer("r", r), Field::count("volume", ball_volume(sp, r))};
    if (a.method == "closed") {
      const Count f = ball_volume_closed_form(sp, r);
      rec.push_back(Field::count("closed_form", f));
      rec.push_back(Field::flag("agrees", f == ball_volume(sp, r)));
      disagreements += f != ball_volume(sp, r);
    } else if (a.method == "bounds") {
      const auto b = volume_bounds(sp, r);
      rec.insert(rec.begin() + 1, Field::count("lower", b.lower, E::bound));
      rec.push_back(Field::count("upper", b.upper, E::bound));
      rec.push_back(Field::flag("sandwich_holds", b.lower <= ball_volume(sp, r) && ball_volume(sp, r) <= b.upper));
    }
    o.records.push_back(std::move(rec));
  }
  if (a.method == "closed") {
    if (disagreements) {
      o.notes.push_back("closed form disagrees with the oracle at " + std::to_string(disagreements) + " radius value(s)");
      if (a.m % 2 == 0) o.violation = "even closed form disagrees with the oracle";
    }
  }
  return o;
}

// -------------------------------------------------------------- intersect

struct IntersectArgs {
  int m = 0, n = 0;
  long t = 0;
  std::optional<long> ell;
  std::string cm;
};

Output cmd_intersect(const IntersectArgs& a) {
  const Space sp(a.m, a.n);
  if (a.t < 0 || a.t > sp.max_distance()) throw std::domain_error("radius outside [0, n*floor(m/2)]");
  Output o = make_output("intersect", {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}});
  std::optional<Ratio> c;
  std::vector<long> ells;
  if (a.ell) {
    ells.push_back(*a.ell);
    o.parameters.emplace_back("ell", s(*a.ell));
  } else {
    for (long l = 0; l <= std::min(2 * a.t + 1, sp.max_distance()); ++l) ells.push_back(l);
  }
  for (long l : ells) {
    const IntersectionQuery q{sp, a.t, l};
    const Count w = intersection_size(q);
    Record rec{Field::integer("ell", l), Field::str("center", to_digit_string(canonical_center(sp, l))), Field::count("W", w)};
    if (l >= 1 && l <= std::min(2 * a.t, sp.max_distance() - 1))
      rec.push_back(Field::count("upper_bound", intersection_upper_bound(q), E::bound));
    else
      rec.push_back(Field::str("upper_bound", "-"));
    if (intersection_estimate_admissible(sp, a.t, l)) {
      if (!c) c = constant_for(a.m, a.t, a.cm, o);
      rec.push_back(Field::ratio("estimate", intersection_estimate(sp, a.t, l, c), E::bound));
    } else {
      rec.push_back(Field::str("estimate", "-"));
    }
    o.records.push_back(std::move(rec));
  }
  if (sp.n >= 2 && a.t >= 1) {
    const Count f = intersection_t1_closed_form(sp, a.t);
    o.notes.push_back("W(t,1) closed form = " + f.get_str() +
                      (f == intersection_size({sp, a.t, 1}) ? " (agrees)" : " (disagrees with the oracle)"));
  }
  return o;
}

// ----------------------------------------------------------------- bounds

struct BoundsArgs {
  int m = 0, n = 0;
  long t = 0, d = 0, r = 0, p = 0, s = 1;
  std::string rate = "1/2";
  bool preset = false;
};

Record report_record(const BoundReport& b) {
  Record rec{Field::str("bound", b.name)};
  for (const auto& [k, v] : b.parameters) rec.push_back(Field::str(k, v));
  if (b.log_base) {
    rec.push_back(Field::ratio("exponent", b.value, E::bound));
    rec.push_back(Field::integer("base", *b.log_base));
  } else {
    rec.push_back(Field::ratio("value", b.value, E::bound));
    if (b.hypotheses_ok) rec.push_back(Field::count("floor", floor(b.value), E::bound));
  }
  rec.push_back(Field::flag("hypotheses_ok", b.hypotheses_ok));
  if (!b.note.empty()) rec.push_back(Field::str("note", b.note));
  return rec;
}

Output cmd_bounds_hamming(const BoundsArgs& a) {
  const Space sp(a.m, a.n);
  if (a.t < 0 || a.t > sp.max_distance()) throw std::domain_error("radius outside [0, n*floor(m/2)]");
  Output o = make_output("bounds hamming", {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}});
  o.records.push_back(report_record(hamming_report(sp, a.t)));
  return o;
}

Output cmd_bounds_plotkin(const BoundsArgs& a) {
  Output o = make_output("bounds plotkin", {{"p", s(a.p)}, {"s", s(a.s)}, {"n", s(a.n)}, {"t", s(a.t)}});
  const auto b = plotkin_like_bound(a.p, a.s, a.n, a.t);
  auto rec = report_record(b);
  if (b.value.get_den() == 1)
    rec.push_back(Field::ratio("value", power_signed(Ratio(a.p), b.value.get_num().get_si()), E::bound));
  else
    o.notes.push_back("non-integral exponent; compare in log space");
  o.records.push_back(std::move(rec));
  return o;
}

Output cmd_bounds_elias(const BoundsArgs& a) {
  const Space sp(a.m, a.n);
  if (a.preset) {
    Output o = make_output("bounds elias", {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}, {"preset", "r=t+7"}});
    o.records.push_back(report_record(elias_preset(sp, a.t)));
    return o;
  }
  Output o = make_output("bounds elias", {{"m", s(a.m)}, {"n", s(a.n)}, {"d", s(a.d)}, {"r", s(a.r)}});
  o.records.push_back(report_record(elias_bound(sp, a.d, a.r)));
  return o;
}

Output cmd_bounds_gv(const BoundsArgs& a) {
  const Space sp(a.m, a.n);
  const Ratio rate = ratio_arg(a.rate, "--rate");
  Output o = make_output("bounds gv", {{"m", s(a.m)}, {"n", s(a.n)}, {"rate", to_fraction(rate)}});
  const auto g = gv_radius(sp, rate);
  o.records.push_back({Field::integer("t", g.t), Field::count("volume_2t", g.volume), Field::ratio("exponent", g.exponent)});
  return o;
}

Output cmd_bounds_exact(const BoundsArgs& a, const Limits& limits) {
  const Space sp(a.m, a.n);
  Output o = make_output("bounds exact", {{"m", s(a.m)}, {"n", s(a.n)}, {"d", s(a.d)}});
  const auto r = search_max_code(sp, a.d, limits);
  std::string code;
  for (auto i : r.code) code += (code.empty() ? "" : ",") + to_digit_string(word_at(sp, i));
  o.records.push_back({Field::count("A", r.size), Field::str("code", code),
                       Field::integer("expanded", static_cast<long>(r.expanded))});
  return o;
}

// ---------------------------------------------------------------- density

struct DensityArgs {
  int m = 0;
  long n = 0, S = 0, t = 1, p = 0, k = 0;
  bool exact = false;
  std::string kind = "linear";
  std::vector<long> values;
};

void density_fields(Record& rec, const DensityBounds& d) {
  rec.push_back(Field::ratio("density_lower", d.lower, E::bound));
  rec.push_back(Field::ratio("density_upper", d.upper, E::bound));
  rec.push_back(Field::ratio("raw_lower", d.raw_lower, E::bound));
  rec.push_back(Field::ratio("raw_upper", d.raw_upper, E::bound));
}

Output cmd_density_nonlinear(const DensityArgs& a, const Limits& limits) {
  const Space sp(a.m, static_cast<int>(a.n));
  Output o = make_output("density nonlinear", {{"m", s(a.m)}, {"n", s(a.n)}, {"S", s(a.S)}, {"t", s(a.t)}});
  const auto b = nonlinear_code_bounds(sp, a.S, a.t);
  const auto d = nonlinear_density_bounds(sp, a.S, a.t);
  Record rec{Field::ratio("beta0", b.beta0), Field::ratio("beta1", b.beta1), Field::ratio("theta", b.theta),
             Field::ratio("F_lower", b.lower, E::bound), Field::ratio("F_upper", b.upper, E::bound)};
  density_fields(rec, d);
  if (a.exact) {
    const auto ex = nonlinear_density_exact(sp, a.S, a.t, limits);
    rec.push_back(Field::count("F_exact", ex.close));
    rec.push_back(Field::ratio("density_exact", ex.density));
    const bool inside = b.lower <= Ratio(ex.close) && Ratio(ex.close) <= b.upper;
    rec.push_back(Field::flag("within_bounds", inside));
    if (!inside) o.violation = "exact count outside the bipartite bounds";
  }
  o.records.push_back(std::move(rec));
  return o;
}

Output cmd_density_linear(const DensityArgs& a, const Limits& limits) {
  Output o = make_output("density linear", {{"p", s(a.p)}, {"n", s(a.n)}, {"k", s(a.k)}, {"t", s(a.t)}});
  const auto b = linear_code_bounds(a.p, a.n, a.k, a.t);
  const auto d = linear_density_bounds(a.p, a.n, a.k, a.t);
  Record rec{Field::ratio("theta_bar", linear_theta_bar(a.p, a.n, a.k, a.t)), Field::ratio("F_lower", b.lower, E::bound),
             Field::ratio("F_upper", b.upper, E::bound)};
  density_fields(rec, d);
  if (a.exact) {
    const auto ex = linear_density_exact(a.p, a.n, a.k, a.t, limits);
    rec.insert(rec.begin(), Field::ratio("density", ex.density));
    rec.push_back(Field::count("F_exact", ex.close));
    rec.push_back(Field::count("subspaces", ex.total));
    const bool inside = b.lower <= Ratio(ex.close) && Ratio(ex.close) <= b.upper;
    rec.push_back(Field::flag("within_bounds", inside));
    if (!inside) o.violation = "exact count outside the subspace bounds";
  }
  o.records.push_back(std::move(rec));
  return o;
}

Output cmd_density_trend(const DensityArgs& a) {
  TrendTable tt;
  std::vector<long> values = a.values;
  if (a.kind == "linear" || a.kind == "plotkin" || a.kind == "plotkin-floor") {
    if (values.empty()) values = {3, 5, 7, 11, 13};
    if (a.kind == "linear") tt = linear_lower_trend(a.n, a.k, a.t, values);
    else if (a.kind == "plotkin") tt = plotkin_density_trend(a.n, a.t, values);
    else tt = plotkin_density_floor_trend(a.n, a.t, values);
  } else if (a.kind == "nonlinear") {
    if (values.empty()) values = {4, 5, 6, 7, 8, 9, 10, 11, 12};
    tt = nonlinear_density_trend(a.n, a.S, a.t, std::vector<int>(values.begin(), values.end()));
  } else {
    throw std::invalid_argument("unknown trend kind: " + a.kind);
  }
  Output o = make_output("density trend", {{"kind", a.kind}, {"n", s(a.n)}, {"t", s(a.t)}});
  if (a.kind == "linear") o.parameters.emplace_back("k", s(a.k));
  if (a.kind == "nonlinear") o.parameters.emplace_back("S", s(a.S));
  for (const auto& r : tt.rows) {
    Record rec{Field::integer(tt.parameter, r.parameter)};
    if (r.exact) rec.push_back(Field::ratio("value", *r.exact, E::bound));
    else rec.push_back(Field::real("value", r.approx));
    rec.push_back(Field::str("note", r.note));
    o.records.push_back(std::move(rec));
  }
  o.notes.push_back(tt.name + ": " + to_string(tt.direction));
  return o;
}

// -------------------------------------------------------------- container

struct ContainerArgs {
  int m = 0, n = 0;
  long t = 1;
  std::string eps = "1";
  std::string independent;
  std::string subset;
  std::string cm;
  std::string h;
  std::string variant = "algorithm1";
  bool polynomial = false;
};

Output cmd_container_graph(const ContainerArgs& a, const Limits& limits) {
  const auto g = build_lee_graph(Space(a.m, a.n), a.t, limits);
  Output o = make_output("container graph", {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}});
  const auto prof = degree_profile(g, g.all());
  bool regular = true;
  for (std::size_t v = 0; v < g.size(); ++v) regular = regular && g.degree(v) == g.degree(0);
  Record rec{Field::integer("nodes", static_cast<long>(g.size())), Field::integer("degree", static_cast<long>(g.degree(0))),
             Field::count("edges", prof.edges), Field::flag("regular", regular),
             Field::flag("degree_bound_holds", prof.degree_bound_holds)};
  for (std::size_t r = 1; r < prof.edges_by_distance.size(); ++r)
    rec.push_back(Field::count("edges_d" + std::to_string(r), prof.edges_by_distance[r]));
  if (g.size() <= limits.counting_nodes) rec.push_back(Field::count("independent_sets", count_independent_sets(g, std::nullopt, limits)));
  else o.notes.push_back("independent-set count skipped: graph above the counting cap");
  o.records.push_back(std::move(rec));
  if (!regular) o.violation = "Lee graph is not regular";
  return o;
}

Output cmd_container_count(const ContainerArgs& a, const Limits& limits) {
  const auto g = build_lee_graph(Space(a.m, a.n), a.t, limits);
  Output o = make_output("container count", {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}});
  std::optional<NodeSet> on;
  if (!a.subset.empty()) {
    on = g.parse_set(a.subset);
    o.parameters.emplace_back("subset", g.format_set(*on));
  }
  if (a.polynomial) {
    const auto poly = independence_polynomial(g, on, limits);
    for (std::size_t k = 0; k < poly.size(); ++k)
      o.records.push_back({Field::integer("k", static_cast<long>(k)), Field::count("sets", poly[k])});
  } else {
    o.records.push_back({Field::count("independent_sets", count_independent_sets(g, on, limits))});
  }
  return o;
}

struct RunResult {
  Output output;
  std::string jsonl;
};

RunResult cmd_container_run(const ContainerArgs& a, bool second, const Limits& limits) {
  const auto g = build_lee_graph(Space(a.m, a.n), a.t, limits);
  const Ratio eps = ratio_arg(a.eps, "--eps");
  RunResult rr;
  Output& o = rr.output;
  o = make_output(second ? "container run2" : "container run1",
                  {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}, {"eps", to_fraction(eps)}});
  const NodeSet I = g.parse_set(a.independent);
  if (!g.is_independent(I)) throw std::invalid_argument("the supplied set is not independent in the graph");
  ContainerRun run;
  if (second) {
    std::optional<Ratio> h;
    if (!a.h.empty()) h = ratio_arg(a.h, "--H");
    run = run_algorithm2(g, I, eps, h, limits);
  } else {
    run = run_algorithm1(g, I, eps, constant_for(a.m, a.t, a.cm, o));
  }
  for (const auto& st : run.steps) {
    Record rec{Field::integer("step", static_cast<long>(st.index)), Field::str("node", to_digit_string(g.word(st.node))),
               Field::integer("degree", st.degree), Field::str("action", st.action),
               Field::integer("live_after", static_cast<long>(st.live_after))};
    if (second) rec.push_back(st.independent_sets ? Field::count("independent_sets", *st.independent_sets) : Field::str("independent_sets", "-"));
    o.records.push_back(std::move(rec));
  }
  o.notes.push_back("threshold " + to_fraction(run.delta_threshold) + " (" + to_decimal(run.delta_threshold) + ")");
  o.notes.push_back("fingerprint P = {" + g.format_set(run.fingerprint) + "}");
  o.notes.push_back("container f(P) has " + std::to_string(run.container.count()) + " nodes");
  o.notes.push_back(std::string("containment I in P u f(P): ") + (run.contains_input ? "true" : "false"));
  rr.jsonl = to_jsonl(g, run);
  if (!run.contains_input) o.violation = "container run lost part of the independent set";
  return rr;
}

Output cmd_container_family(const ContainerArgs& a, const Limits& limits) {
  const auto g = build_lee_graph(Space(a.m, a.n), a.t, limits);
  const Ratio eps = ratio_arg(a.eps, "--eps");
  ContainerVariant v;
  if (a.variant == "algorithm1") v = ContainerVariant::algorithm1;
  else if (a.variant == "algorithm2") v = ContainerVariant::algorithm2;
  else throw std::invalid_argument("unknown variant: " + a.variant);
  Output o = make_output("container family",
                         {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}, {"eps", to_fraction(eps)}, {"variant", a.variant}});
  ContainerParams params;
  if (v == ContainerVariant::algorithm1) params.c_m = constant_for(a.m, a.t, a.cm, o);
  if (!a.h.empty()) params.h = ratio_arg(a.h, "--H");
  const auto f = build_container_family(g, eps, v, params, limits);
  o.records.push_back({Field::integer("members", static_cast<long>(f.members.size())),
                       Field::integer("independent_sets", static_cast<long>(f.independent_sets)),
                       Field::flag("covers_all", f.covers_all), Field::count("total_count", f.total_count),
                       Field::count("family_count", f.family_count), Field::flag("counting_sound", f.counting_sound)});
  for (const auto& mset : f.members) o.notes.push_back("member {" + g.format_set(mset) + "}");
  if (!f.covers_all || !f.counting_sound) o.violation = "container family fails coverage or counting";
  return o;
}

Output cmd_container_supersat(const ContainerArgs& a, const Limits& limits) {
  const auto g = build_lee_graph(Space(a.m, a.n), a.t, limits);
  Output o = make_output("container supersat", {{"m", s(a.m)}, {"n", s(a.n)}, {"t", s(a.t)}});
  const NodeSet C = a.subset == "all" ? g.all() : g.parse_set(a.subset);
  std::optional<Ratio> eps;
  if (!a.eps.empty()) eps = ratio_arg(a.eps, "--eps");
  const auto r = supersaturation_report(g, C, constant_for(a.m, a.t, a.cm, o), eps);
  Record rec{Field::integer("size", r.size), Field::ratio("h", r.h), Field::count("edges", r.edges),
             Field::count("weighted_pairs", r.weighted), Field::count("ball_pairs", r.ball_pairs),
             Field::flag("pair_count_hypothesis", r.dense_hypothesis),
             Field::ratio("weighted_lower", r.weighted_lower, E::bound),
             Field::flag("weighted_ok", r.weighted_ok)};
  if (r.dense_edges_lower) rec.push_back(Field::ratio("edges_lower", *r.dense_edges_lower, E::bound));
  rec.push_back(Field::flag("edges_ok", r.dense_edges_ok));
  rec.push_back(Field::ratio("gamma", r.gamma));
  rec.push_back(Field::flag("gamma_hypothesis", r.excess_hypothesis));
  if (r.excess_edges_lower) rec.push_back(Field::ratio("gamma_edges_lower", *r.excess_edges_lower, E::bound));
  rec.push_back(Field::flag("gamma_ok", r.excess_edges_ok));
  if (eps) {
    rec.push_back(Field::integer("c1_size", r.c1_size));
    rec.push_back(Field::integer("c2_size", r.c2_size));
    rec.push_back(Field::integer("c1_c2_union", r.c1_c2_union));
  }
  o.records.push_back(std::move(rec));
  if (r.ball_pairs != r.weighted) o.notes.push_back("ball pair count differs from the distance-weighted edge count");
  if ((r.dense_hypothesis && (!r.weighted_ok || !r.dense_edges_ok)) || (r.excess_hypothesis && !r.excess_edges_ok))
    o.violation = "supersaturation conclusion fails under its hypothesis";
  return o;
}

// ---------------------------------------------------------------- compare

struct CompareArgs {
  int m = 4;
  long t_max = 3, n_max = 20, n_min = 1;
  std::string eps = "1/10";
  std::optional<long> size;
};

Output cmd_compare(const CompareArgs& a) {
  if (a.n_max > 200 || a.t_max > 64) throw CapacityError("comparison range too large (n <= 200, t <= 64)");
  CompareOptions co;
  co.m = a.m;
  co.t_max = a.t_max;
  co.n_max = a.n_max;
  co.n_min = a.n_min;
  co.epsilon = ratio_arg(a.eps, "--eps");
  co.size = a.size;
  Output o = make_output("compare", {{"m", s(a.m)}, {"t_max", s(a.t_max)}, {"n_min", s(a.n_min)}, {"n_max", s(a.n_max)},
                                     {"eps", to_fraction(co.epsilon)}});
  if (a.size) o.parameters.emplace_back("size", s(*a.size));
  long sharper = 0;
  const auto cells = compare_table(co);
  for (const auto& c : cells) {
    Record rec{Field::integer("m", c.m), Field::integer("n", c.n), Field::integer("t", c.t), Field::ratio("H", c.h)};
    if (!c.size) rec.push_back(Field::ratio("A", c.a_exact));
    rec.push_back(Field::real("A_bits", c.a_bits, c.size ? E::estimate : E::exact));
    rec.push_back(Field::real("B_bits", c.b_bits, c.b_exact ? E::exact : E::bound));
    rec.push_back(Field::integer("B_argmax", c.b_argmax));
    rec.push_back(Field::flag("container_sharper", c.container_sharper));
    sharper += c.container_sharper;
    o.records.push_back(std::move(rec));
  }
  o.notes.push_back("container exponent smaller in " + std::to_string(sharper) + " of " + std::to_string(cells.size()) + " cells");
  o.notes.push_back("B_bits rounds log2 of the floor-sum; the comparison itself is exact where B_bits is exact");
  return o;
}

// ----------------------------------------------------------------- verify

std::string verify_table(const VerifyReport& r, Format f) {
  Output o = make_output("verify", {{"suite", r.suite}, {"preset", to_string(r.options.preset)},
                                    {"seed", std::to_string(r.options.seed)}});
  for (const auto& c : r.checks)
    o.records.push_back({Field::str("suite", c.suite), Field::str("check", c.name),
                         Field::str("status", c.informational ? "report" : c.passed ? "pass" : "FAIL"),
                         Field::integer("checked", static_cast<long>(c.checked)),
                         Field::integer("failures", static_cast<long>(c.failures)),
                         Field::str("first_failure", c.samples.empty() ? "" : c.samples.front())});
  o.notes.push_back(r.passed() ? "all invariants hold" : "invariant violations found");
  std::ostringstream os;
  render(o, f, os);
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lee-metric coding theory workbench", "leelab"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", ctx.out_path, "Write output to FILE");
  app.add_option("--seed", ctx.seed, "Seed for randomized checks");

  std::function<int()> action;
  // Each handler either fills an Output or writes raw text.
  auto emit = [&](const Output& o) {
    render(o, parse_format(ctx.format), *ctx.out);
    if (o.violation.empty()) return 0;
    err << "invariant violated: " << o.violation << '\n';
    return 3;
  };

  VolumeArgs va;
  auto* vol = app.add_subcommand("volume", "Lee ball volumes");
  vol->add_option("-m", va.m, "Modulus")->required();
  vol->add_option("-n", va.n, "Length")->required();
  vol->add_option("-r", va.r, "Radius (all radii when omitted)");
  vol->add_option("--method", va.method, "oracle | closed | bounds")->check(CLI::IsMember({"oracle", "closed", "bounds"}));
  vol->callback([&] { action = [&] { return emit(cmd_volume(va)); }; });

  IntersectArgs ia;
  auto* inter = app.add_subcommand("intersect", "Intersections of two Lee balls");
  inter->add_option("-m", ia.m, "Modulus")->required();
  inter->add_option("-n", ia.n, "Length")->required();
  inter->add_option("-t", ia.t, "Radius")->required();
  inter->add_option("-l,--ell", ia.ell, "Center distance (0..2t+1 when omitted)");
  inter->add_option("--cm", ia.cm, "Constant for m odd, t = ceil(m/2)");
  inter->callback([&] { action = [&] { return emit(cmd_intersect(ia)); }; });

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Code size bounds");
  bounds->require_subcommand(1);
  auto* bh = bounds->add_subcommand("hamming", "Sphere-packing bound");
  bh->add_option("-m", ba.m)->required();
  bh->add_option("-n", ba.n)->required();
  bh->add_option("-t", ba.t)->required();
  bh->callback([&] { action = [&] { return emit(cmd_bounds_hamming(ba)); }; });
  auto* bp = bounds->add_subcommand("plotkin", "Plotkin-like bound (log form)");
  bp->add_option("-p", ba.p, "Odd prime")->required();
  bp->add_option("-s", ba.s, "Exponent of the ring size");
  bp->add_option("-n", ba.n)->required();
  bp->add_option("-t", ba.t)->required();
  bp->callback([&] { action = [&] { return emit(cmd_bounds_plotkin(ba)); }; });
  auto* be = bounds->add_subcommand("elias", "Elias bound");
  be->add_option("-m", ba.m)->required();
  be->add_option("-n", ba.n)->required();
  be->add_option("-d", ba.d, "Minimum distance");
  be->add_option("-r", ba.r, "Auxiliary radius");
  be->add_option("-t", ba.t, "Radius for --preset");
  be->add_flag("--preset", ba.preset, "Use d = 2t+1, r = t+7");
  be->callback([&] { action = [&] { return emit(cmd_bounds_elias(ba)); }; });
  auto* bg = bounds->add_subcommand("gv", "Smallest radius meeting the GV condition");
  bg->add_option("-m", ba.m)->required();
  bg->add_option("-n", ba.n)->required();
  bg->add_option("--rate", ba.rate, "Rate R in [0,1)");
  bg->callback([&] { action = [&] { return emit(cmd_bounds_gv(ba)); }; });
  auto* bx = bounds->add_subcommand("exact", "Exact A_m(n,d) by branch and bound");
  bx->add_option("-m", ba.m)->required();
  bx->add_option("-n", ba.n)->required();
  bx->add_option("-d", ba.d)->required();
  bx->callback([&] { action = [&] { return emit(cmd_bounds_exact(ba, ctx.limits)); }; });

  DensityArgs da;
  auto* dens = app.add_subcommand("density", "Bipartite density bounds");
  dens->require_subcommand(1);
  auto* dn = dens->add_subcommand("nonlinear", "Codes of size S in Z_m^n");
  dn->add_option("-m", da.m)->required();
  dn->add_option("-n", da.n)->required();
  dn->add_option("-S", da.S, "Code size")->required();
  dn->add_option("-t", da.t);
  dn->add_flag("--exact", da.exact, "Also count exactly");
  dn->callback([&] { action = [&] { return emit(cmd_density_nonlinear(da, ctx.limits)); }; });
  auto* dl = dens->add_subcommand("linear", "k-dimensional codes over F_p");
  dl->add_option("-p", da.p)->required();
  dl->add_option("-n", da.n)->required();
  dl->add_option("-k", da.k)->required();
  dl->add_option("-t", da.t);
  dl->add_flag("--exact", da.exact, "Also scan all subspaces");
  dl->callback([&] { action = [&] { return emit(cmd_density_linear(da, ctx.limits)); }; });
  auto* dt = dens->add_subcommand("trend", "Monotone trend over a parameter sweep");
  dt->add_option("--kind", da.kind, "linear | nonlinear | plotkin | plotkin-floor");
  dt->add_option("-n", da.n)->required();
  dt->add_option("-k", da.k);
  dt->add_option("-S", da.S);
  dt->add_option("-t", da.t);
  dt->add_option("--values", da.values, "Primes or moduli to sweep")->delimiter(',');
  dt->callback([&] { action = [&] { return emit(cmd_density_trend(da)); }; });

  ContainerArgs ca;
  auto* cont = app.add_subcommand("container", "Lee graph, independent sets and container algorithms");
  cont->require_subcommand(1);
  auto graph_opts = [&](CLI::App* c) {
    c->add_option("-m", ca.m)->required();
    c->add_option("-n", ca.n)->required();
    c->add_option("-t", ca.t);
  };
  auto* cg = cont->add_subcommand("graph", "Graph summary");
  graph_opts(cg);
  cg->callback([&] { action = [&] { return emit(cmd_container_graph(ca, ctx.limits)); }; });
  auto* cc = cont->add_subcommand("count", "Independent sets");
  graph_opts(cc);
  cc->add_option("-C,--subset", ca.subset, "Induced node subset");
  cc->add_flag("--polynomial", ca.polynomial, "Coefficients by size");
  cc->callback([&] { action = [&] { return emit(cmd_container_count(ca, ctx.limits)); }; });
  for (int which = 1; which <= 2; ++which) {
    auto* cr = cont->add_subcommand(which == 1 ? "run1" : "run2", which == 1 ? "Algorithm 1 replay" : "Algorithm 2 replay");
    graph_opts(cr);
    cr->add_option("--eps", ca.eps, "Epsilon");
    cr->add_option("-I", ca.independent, "Independent set as digit strings, e.g. 00,22");
    if (which == 1) cr->add_option("--cm", ca.cm, "Constant for m odd, t = ceil(m/2)");
    else cr->add_option("--H", ca.h, "Exponent H (default m^n / v(n,t))");
    cr->callback([&, which] {
      action = [&, which] {
        auto rr = cmd_container_run(ca, which == 2, ctx.limits);
        if (ctx.format != "json") return emit(rr.output);
        *ctx.out << rr.jsonl;
        if (rr.output.violation.empty()) return 0;
        err << "invariant violated: " << rr.output.violation << '\n';
        return 3;
      };
    });
  }
  auto* cf = cont->add_subcommand("family", "Container family over all independent sets");
  graph_opts(cf);
  cf->add_option("--eps", ca.eps, "Epsilon");
  cf->add_option("--variant", ca.variant, "algorithm1 | algorithm2");
  cf->add_option("--cm", ca.cm);
  cf->add_option("--H", ca.h);
  cf->callback([&] { action = [&] { return emit(cmd_container_family(ca, ctx.limits)); }; });
  auto* cs = cont->add_subcommand("supersat", "Supersaturation report for a node subset");
  graph_opts(cs);
  cs->add_option("-C,--subset", ca.subset, "Subset as digit strings, or 'all'")->required();
  cs->add_option("--eps", ca.eps, "Epsilon for the degree classes");
  cs->add_option("--cm", ca.cm);
  cs->callback([&] { action = [&] { return emit(cmd_container_supersat(ca, ctx.limits)); }; });

  CompareArgs cpa;
  auto* cmp = app.add_subcommand("compare", "Container exponent against the bipartite count bound");
  cmp->add_option("-m", cpa.m);
  cmp->add_option("--t-max", cpa.t_max);
  cmp->add_option("--n-max", cpa.n_max);
  cmp->add_option("--n-min", cpa.n_min);
  cmp->add_option("--eps", cpa.eps);
  cmp->add_option("-S,--size", cpa.size, "Restrict both sides to codes of this size");
  cmp->callback([&] { action = [&] { return emit(cmd_compare(cpa)); }; });

  std::string suite;
  std::string preset = "standard";
  auto* ver = app.add_subcommand("verify", "Property suites");
  ver->add_option("suite", suite, "volumes | intersections | bounds | container | density | appendix | all")->required();
  ver->add_option("--grid-preset", preset, "standard | quick")->check(CLI::IsMember({"standard", "quick"}));
  ver->callback([&] {
    action = [&] {
      if (!is_verify_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
      VerifyOptions vo;
      vo.preset = parse_grid_preset(preset);
      vo.seed = ctx.seed;
      const auto rep = run_verify(suite, vo);
      if (ctx.format == "json") *ctx.out << to_json(rep) << '\n';
      else *ctx.out << verify_table(rep, parse_format(ctx.format));
      return rep.passed() ? 0 : 3;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  std::unique_ptr<std::ofstream> file;
  ctx.out = &out;
  try {
    ctx.limits = limits_from_env();
    if (!ctx.out_path.empty()) {
      file = std::make_unique<std::ofstream>(ctx.out_path, std::ios::binary);
      if (!*file) throw std::invalid_argument("cannot open " + ctx.out_path);
      ctx.out = file.get();
    }
    return action ? action() : 1;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return 2;
  } catch (const SearchFailure& e) {
    err << "search failed: " << e.what() << " (" << e.counterexample() << ")\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace leelab::cli
