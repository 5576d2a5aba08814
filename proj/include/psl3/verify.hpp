#pragma once

/// @file verify.hpp
/// Runs every applicable check on a catalogue instance and assembles a
/// VerificationReport.

#include <cstdint>
#include <stdexcept>

#include "psl3/catalogue.hpp"
#include "psl3/report.hpp"

namespace psl3::verify {

/// Two independent computations disagreed (closure vs. stabilizer chain, or a
/// witness failing revalidation).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t cap = grp::kDefaultCap;
  bool search_duality = true;
  bool timings = true;
  /// Groups up to this order are also enumerated by plain closure and the
  /// size compared against the stabilizer chain.
  std::uint64_t oracle_limit = 1'000'000;
};

report::VerificationReport run(catalogue::Instance const& in, Options const& opt = {});
report::VerificationReport run(catalogue::FamilyId id, catalogue::FamilyParams const& params,
                               Options const& opt = {});

}  // namespace psl3::verify
