#pragma once

#include <optional>
#include <vector>

#include "leelab/lee_core.hpp"

namespace leelab {

// Container exponent against the bipartite count bound, both in bits.
//   A = (1+eps) H                       (container: at most 2^A codes)
//   B = log2 sum_S C(N,S) max(0, delta_up(S))   (bipartite density upper bound)
// With `size`, both sides are restricted to codes of that size:
//   A_S = eps H + log2 C(floor((1+eps)H), S),  B_S = log2 of the size-S term.
struct CompareCell {
  int m = 0;
  int n = 0;
  long t = 0;
  std::optional<long> size;
  Ratio h;
  Ratio a_exact;              // A when size is absent
  long double a_bits = 0;
  long double b_bits = 0;
  bool b_exact = false;       // false: b_bits is a certified lower bound
  long b_argmax = 0;          // size attaining the largest term
  bool container_sharper = false;  // A < B
};

struct CompareOptions {
  int m = 4;
  long t_max = 3;
  long n_max = 20;
  long n_min = 1;
  Ratio epsilon = Ratio(1, 10);
  std::optional<long> size;
  std::uint64_t exact_limit = 4096;  // m^n up to this is summed in full
};

CompareCell compare_cell(Space space, long t, const Ratio& epsilon, std::optional<long> size = std::nullopt,
                         std::uint64_t exact_limit = 4096);
std::vector<CompareCell> compare_table(const CompareOptions& options);

}  // namespace leelab
