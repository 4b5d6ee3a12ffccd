#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leelab/lee_core.hpp"

namespace leelab {

// Association of magnitude r on the left nodes of a bipartite graph.
struct AssociationSpec {
  long magnitude = 0;
  std::vector<Count> class_sizes;  // |alpha^{-1}(l)|, l in [0, r], ordered pairs
  std::vector<Count> codegrees;    // W_l(alpha)
  Count left_size = 0;
  Count right_size = 0;
};

struct CountBounds {
  Ratio lower;
  Ratio upper;
};

// Bounds on the number of non-isolated right nodes.
CountBounds alpha_regular_bounds(const AssociationSpec& spec);

// Number of k-dimensional subspaces of F_p^n.
Count gaussian_binomial(long n, long k, long p);

struct NonlinearBounds {
  Ratio lower;   // on |F|, the size-S codes with distance <= 2t
  Ratio upper;
  Ratio beta0;
  Ratio beta1;
  Ratio theta;
  Count volume;  // v(n,2t), at most m^n
};
NonlinearBounds nonlinear_code_bounds(Space space, long S, long t);
// The association behind the nonlinear bounds: left nodes are the close pairs,
// alpha counts shared points.
AssociationSpec nonlinear_association(Space space, long S, long t);

struct DensityBounds {
  Ratio lower;                 // clamped to [0,1]
  Ratio upper;
  Ratio raw_lower;
  Ratio raw_upper;
  std::optional<Ratio> exact;
};
DensityBounds nonlinear_density_bounds(Space space, long S, long t);

struct CodeCount {
  Count good;    // minimum distance >= 2t+1
  Count total;
  Count close;   // total - good
  Ratio density;
};
CodeCount nonlinear_density_exact(Space space, long S, long t, const Limits& limits = {});

Ratio linear_theta_bar(long p, long n, long k, long t);
CountBounds linear_code_bounds(long p, long n, long k, long t);
DensityBounds linear_density_bounds(long p, long n, long k, long t);
CodeCount linear_density_exact(long p, long n, long k, long t, const Limits& limits = {});

enum class TrendDirection { increasing, decreasing, constant, nonincreasing, nondecreasing, mixed, single };
std::string to_string(TrendDirection d);

struct TrendRow {
  long parameter = 0;
  std::optional<Ratio> exact;   // exact value when available
  long double approx = 0;       // value used for classification when exact is absent
  std::string note;
};

struct TrendTable {
  std::string name;
  std::string parameter;
  std::vector<TrendRow> rows;
  TrendDirection direction = TrendDirection::single;
};

TrendDirection classify_trend(const std::vector<TrendRow>& rows);

// Raw lower density bound for linear codes over a prime sweep.
TrendTable linear_lower_trend(long n, long k, long t, const std::vector<long>& primes);
// Nonlinear density lower bound at fixed S over a modulus sweep.
TrendTable nonlinear_density_trend(long n, long S, long t, const std::vector<int>& moduli);
// Density upper bound at the Plotkin-attaining size p^{n-(8t+4)/(p+1)+1}: the
// real-dimension expression 1 - (v-1)/(p^{(8t+4)/(p+1)-1}(p-1) + v - p).
TrendTable plotkin_density_trend(long n, long t, const std::vector<long>& primes);
// Same sweep evaluated exactly at the integer dimension just below.
TrendTable plotkin_density_floor_trend(long n, long t, const std::vector<long>& primes);

}  // namespace leelab
