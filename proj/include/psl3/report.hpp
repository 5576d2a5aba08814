#pragma once

/// @file report.hpp
/// Verification reports and their JSON / CSV / text forms.
///
/// JSON is the source of truth; the schema is
///
///   {family, q, params, rank, convention, schlafli, degenerate,
///    checks: {name: verdict}, expected: {name: verdict}, matched,
///    witnesses: {...}, group_order, expected_order, timings_ms: {...}}
///
/// Verdict strings are "pass", "fail", "skipped", and for the chirality
/// entry "chiral", "regular" or "undecided".

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psl3/projmat.hpp"

namespace psl3::report {

using json = nlohmann::json;

/// Element as a JSON number (prime field) or coefficient list.
json element_json(gf::Field const& f, gf::Code c);
/// Inverse of element_json.
gf::Element element_from_json(gf::Field const& f, json const& j);
/// Row-major list of 9 elements.
json matrix_json(pg::ProjMatrix const& m);
json point_json(gf::Field const& f, pg::ProjPoint const& p);
json line_json(gf::Field const& f, pg::ProjLine const& l);

struct VerificationReport {
  std::string family;
  std::uint32_t q = 0;
  json params = json::object();
  int rank = 0;
  std::string convention;  // "sigma_1..sigma_{r-1}" or "rho_0..rho_{r-1}"
  std::vector<std::uint64_t> schlafli;
  bool degenerate = false;
  std::map<std::string, std::string> checks;
  std::map<std::string, std::string> expected;
  bool matched = false;
  json witnesses = json::object();
  std::optional<std::uint64_t> group_order;
  std::optional<std::uint64_t> expected_order;
  std::map<std::string, double> timings_ms;

  /// True iff every expected verdict, the expected order and the expected
  /// Schlafli type (when recorded in `expected`) agree with the outcome.
  bool compute_matched() const;
  bool operator==(VerificationReport const&) const = default;
};

void to_json(json& j, VerificationReport const& r);
void from_json(json const& j, VerificationReport& r);

std::string csv_header();
std::string to_csv_row(VerificationReport const& r);
std::string to_text(VerificationReport const& r);

std::string schlafli_string(std::vector<std::uint64_t> const& s);

}  // namespace psl3::report
