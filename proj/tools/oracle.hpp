#pragma once

/// @file oracle.hpp
/// Brute-force recomputation of closure orders, Schlafli types and
/// parabolic intersections, independent of the stabilizer-chain paths.

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "psl3/catalogue.hpp"

namespace psl3::cli {

struct OracleOptions {
  std::size_t cap = 20'000'000;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  /// When set, only <generators at these indices> is examined; indices are
  /// 1-based for sigma tuples and 0-based for rho tuples.
  std::optional<std::vector<int>> subgroup;
};

/// Order of an element read off the cycle lengths of its point permutation.
std::uint64_t permutation_order(pg::ProjMatrix const& m);

/// Result has "consistent": false when any brute-force value disagrees with
/// the library path. Throws grp::EnumerationError when a closure exceeds the
/// cap.
nlohmann::json oracle(catalogue::Instance const& in, OracleOptions const& opt);

}  // namespace psl3::cli
