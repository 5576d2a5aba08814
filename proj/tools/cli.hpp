#pragma once

/// @file cli.hpp
/// Command-line front end: verify, witness, search and oracle subcommands.
///
/// Exit codes: 0 all expectations met, 1 some expectation not met, 2 usage
/// or parameter error, 3 internal inconsistency.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psl3/catalogue.hpp"

namespace psl3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;
  std::string family;
  std::vector<std::uint32_t> qs;
  catalogue::FamilyParams params;  // q is filled per instance
  std::string parity;
  std::string subgroup;            // oracle: comma-separated generator indices
  Format format = Format::json;
  std::string out;                 // empty: stdout
  std::size_t cap = 20'000'000;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 200;       // oracle: random words per tuple
  bool search_duality = true;
  bool timings = true;

  /// Throws catalogue::ParameterError when inconsistent.
  void validate() const;
};

/// Parses argv and dispatches; never throws.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

/// Runs a validated configuration.
int dispatch(RunConfig const& cfg, std::ostream& out, std::ostream& err);

}  // namespace psl3::cli
