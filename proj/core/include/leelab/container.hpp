#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leelab/lee_core.hpp"
#include "leelab/node_set.hpp"

namespace leelab {

// Graph on Z_m^n with x ~ y iff 0 < d(x,y) <= 2t. Node i is word_at(space, i).
class LeeGraph {
 public:
  LeeGraph(Space space, long t, std::vector<Word> words, std::vector<std::vector<std::uint32_t>> adjacency);

  Space space() const { return space_; }
  long t() const { return t_; }
  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  const std::vector<std::uint32_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
  bool adjacent(std::size_t a, std::size_t b) const;
  long distance(std::size_t a, std::size_t b) const { return lee_distance(words_[a], words_[b]); }
  NodeSet all() const { return NodeSet(size(), true); }
  bool is_independent(const NodeSet& s) const;

  NodeSet parse_set(const std::string& csv) const;  // "00,22"
  std::string format_set(const NodeSet& s) const;

 private:
  Space space_;
  long t_;
  std::vector<Word> words_;
  std::vector<std::vector<std::uint32_t>> adjacency_;  // sorted
};

LeeGraph build_lee_graph(Space space, long t, const Limits& limits = {});
// Lee graph with edges at distance in [1, max_distance].
LeeGraph build_distance_graph(Space space, long max_distance, const Limits& limits = {});

struct DegreeProfile {
  long t = 0;
  std::vector<std::size_t> nodes;             // members of the subset
  std::vector<std::vector<long>> degree;      // degree[k][r], r in [0, 2t]
  std::vector<Count> edges_by_distance;       // |E_r|, r in [0, 2t]
  Count edges = 0;
  long max_degree = 0;
  bool degree_bound_holds = true;                  // deg_r <= 3^r C(n,r) for r <= n/2
};
DegreeProfile degree_profile(const LeeGraph& g, const NodeSet& subset);

// i(G[subset]), empty set included.
Count count_independent_sets(const LeeGraph& g, const std::optional<NodeSet>& induced_on = std::nullopt,
                             const Limits& limits = {});
// Coefficient k = number of independent k-sets of G[subset].
std::vector<Count> independence_polynomial(const LeeGraph& g, const std::optional<NodeSet>& induced_on = std::nullopt,
                                           const Limits& limits = {});

// Independent sets in lexicographic order of their sorted index sequences.
void for_each_independent_set(const LeeGraph& g, const std::function<void(const NodeSet&)>& visit,
                              const Limits& limits = {});
std::vector<NodeSet> enumerate_independent_sets(const LeeGraph& g, const Limits& limits = {});

enum class ContainerVariant { algorithm1, algorithm2 };
std::string to_string(ContainerVariant v);

struct ContainerStep {
  std::size_t index = 0;
  std::size_t node = 0;
  long degree = 0;
  std::string action;     // drop | take | stop | count_ok | exhausted
  std::size_t live_after = 0;
  std::optional<Count> independent_sets;  // algorithm 2 only
};

struct ContainerRun {
  ContainerVariant variant = ContainerVariant::algorithm1;
  Ratio epsilon;
  Ratio delta_threshold;  // Delta for algorithm 1, (1+eps)h for algorithm 2
  NodeSet input;
  NodeSet fingerprint;    // P
  NodeSet container;      // f(P)
  std::vector<ContainerStep> steps;
  bool contains_input = false;  // I subset of P ∪ f(P)

  NodeSet members() const;      // P ∪ f(P)
};

// Delta for algorithm 1 by the parity rule.
Ratio algorithm1_delta(Space space, long t, const Ratio& epsilon, std::optional<Ratio> c_m);

ContainerRun run_algorithm1(const LeeGraph& g, const NodeSet& independent, const Ratio& epsilon,
                            std::optional<Ratio> c_m = std::nullopt);
// h defaults to m^n / v(n,t).
ContainerRun run_algorithm2(const LeeGraph& g, const NodeSet& independent, const Ratio& epsilon,
                            std::optional<Ratio> h = std::nullopt, const Limits& limits = {});

// One JSON object per line: a run header, one line per step, a result line.
std::string to_jsonl(const LeeGraph& g, const ContainerRun& run);

struct ContainerParams {
  std::optional<Ratio> c_m;
  std::optional<Ratio> h;
};

struct ContainerFamily {
  ContainerVariant variant = ContainerVariant::algorithm1;
  Ratio epsilon;
  std::vector<NodeSet> members;     // deduplicated, sorted
  std::size_t independent_sets = 0;
  bool covers_all = false;          // every independent set inside some member
  Count total_count = 0;            // i(G)
  Count family_count = 0;           // sum of i(G[F])
  bool counting_sound = false;      // total_count <= family_count
};
ContainerFamily build_container_family(const LeeGraph& g, const Ratio& epsilon, ContainerVariant variant,
                                       const ContainerParams& params = {}, const Limits& limits = {});

struct SupersaturationReport {
  long size = 0;
  Ratio h;                         // m^n / v(n,t)
  Count volume;                    // v(n,t)
  std::vector<Count> w;            // W(t,r), r in [0, 2t]
  std::vector<Count> edges_by_distance;
  Count edges = 0;                 // |E[C]|
  Count weighted = 0;              // sum_r W(t,r)|E_r|
  Count ball_pairs = 0;            // sum_x C(|C ∩ B(x,t)|, 2), equals `weighted`

  bool dense_hypothesis = false; // |C| >= 2h
  Ratio weighted_lower;
  bool weighted_ok = false;
  std::optional<Ratio> dense_edges_lower;  // empty when C_m is needed and missing
  bool dense_edges_ok = false;

  Ratio gamma;                     // |C| - h
  bool excess_hypothesis = false; // gamma > 0
  std::optional<Ratio> excess_edges_lower;
  bool excess_edges_ok = false;

  std::optional<Ratio> epsilon;
  long radius_window = 0;          // min(20, n floor(m/2))
  long c1_size = 0;
  long c2_size = 0;
  long c1_c2_union = 0;
};
SupersaturationReport supersaturation_report(const LeeGraph& g, const NodeSet& subset,
                                             std::optional<Ratio> c_m = std::nullopt,
                                             std::optional<Ratio> epsilon = std::nullopt);

}  // namespace leelab
