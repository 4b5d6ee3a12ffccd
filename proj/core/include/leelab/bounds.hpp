#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leelab/lee_core.hpp"

namespace leelab {

struct BoundReport {
  std::string name;
  // The bound itself, or its exponent when log_base is set (bound = log_base^value).
  Ratio value;
  std::optional<long> log_base;
  bool hypotheses_ok = false;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string note;
};

Ratio hamming_bound(Space space, long t);
BoundReport hamming_report(Space space, long t);

// Exponent s(n - (8t+4)/(p^s+1) + 1) with base p. Requires p >= 3 prime.
BoundReport plotkin_like_bound(long p, long s, long n, long t);

// theta*n*d / (r^2 - 2 theta n r + theta n d) * m^n / v(n,r), for r <= theta*n
// and a positive denominator. Failing hypotheses are reported, not thrown.
BoundReport elias_bound(Space space, long d, long r);
// Elias bound for d = 2t+1 with the auxiliary radius r = t + 7.
BoundReport elias_preset(Space space, long t);
constexpr long kEliasPresetOffset = 7;

struct GvResult {
  long t = 0;
  Count volume;     // v(n, 2t)
  Ratio exponent;   // n(1-R): the condition is v(n,2t) >= m^exponent
};
// Smallest t with v(n,2t) >= m^{n(1-R)}.
GvResult gv_radius(Space space, const Ratio& rate);

struct ExactCodeResult {
  Count size;
  std::vector<std::uint64_t> code;  // word indices of one optimal code
  std::uint64_t expanded = 0;       // branch-and-bound nodes
};
// A_m(n,d) by branch and bound over the graph with edges at distance < d.
ExactCodeResult search_max_code(Space space, long d, const Limits& limits = {});
Count max_code_size_exact(Space space, long d, const Limits& limits = {});

bool is_prime(long p);

}  // namespace leelab
