#pragma once

#include <cstddef>
#include <cstdint>

namespace leelab {

/// Runtime caps for the exhaustive parts of the library. Exceeding any of
/// them raises CapacityError.
struct Limits {
  /// Words visited by full enumeration of Z_m^n.
  std::uint64_t enumeration = std::uint64_t{1} << 24;
  /// Nodes of an explicitly materialized Lee graph.
  std::uint64_t explicit_graph = std::uint64_t{1} << 16;
  /// Graph size accepted by the exact maximum-code search.
  std::uint64_t exact_search = std::uint64_t{1} << 16;
  /// Branch-and-bound nodes expanded by the exact maximum-code search.
  std::uint64_t search_nodes = std::uint64_t{1} << 32;
  /// Node count accepted by exact independent-set counting.
  std::size_t counting_nodes = 64;
  /// Independent sets materialized by enumeration.
  std::uint64_t independent_sets = std::uint64_t{1} << 20;
  /// Subspaces visited by the linear-code density oracle.
  std::uint64_t subspaces = 1'000'000;
};

}  // namespace leelab
