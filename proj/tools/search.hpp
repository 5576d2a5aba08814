#pragma once

/// @file search.hpp
/// Exhaustive scan of rotation-group generator tuples for PSL(3,2) and
/// PSL(3,3).

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "psl3/cgroup.hpp"

namespace psl3::cli {

struct SearchOptions {
  std::uint32_t q = 2;
  int rank = 3;
  bool search_duality = true;
  unsigned jobs = 1;
};

struct SearchResult {
  std::uint32_t q = 0;
  int rank = 0;
  std::uint64_t group_order = 0;
  std::vector<pg::ProjMatrix> sigma1_classes;  // representatives scanned
  std::uint64_t string_tuples = 0;       // string property holds
  std::uint64_t involution_rejected = 0;  // string holds but some sigma_i has order 2
  std::uint64_t full_group = 0;
  std::uint64_t ip_plus = 0;
  std::uint64_t chiral = 0;
  std::uint64_t regular = 0;
  std::uint64_t undecided = 0;
  std::vector<std::vector<pg::ProjMatrix>> chiral_tuples;
};

/// Every element of PSL(3,q), sorted by canonical entries.
std::vector<pg::ProjMatrix> psl3_elements(pg::Field const& f);

/// Conjugacy-class representatives (smallest element of each class).
std::vector<pg::ProjMatrix> class_representatives(std::vector<pg::ProjMatrix> const& group);

/// Throws catalogue::ParameterError outside q in {2,3}, rank in {3,4,5}.
SearchResult search(SearchOptions const& opt);

nlohmann::json to_json(SearchResult const& r);

}  // namespace psl3::cli
