#include <doctest.h>

#include <sstream>

#include "psl3/report.hpp"
#include "psl3/verify.hpp"

using namespace psl3;
using report::json;

namespace {

verify::Options quiet() {
  verify::Options o;
  o.timings = false;
  return o;
}

catalogue::FamilyParams at(std::uint32_t q) {
  catalogue::FamilyParams p;
  p.q = q;
  return p;
}

std::size_t csv_fields(std::string const& row) {
  std::size_t n = 1;
  bool quoted = false;
  for (char c : row) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("element json round-trip") {
  for (std::uint32_t q : {7u, 9u, 8u}) {
    auto const& f = gf::field_of_order(q);
    for (gf::Code c = 0; c < q; ++c) {
      auto e = report::element_from_json(f, json::parse(report::element_json(f, c).dump()));
      CHECK(e.code() == c);
    }
  }
}

TEST_CASE("report json round-trip") {
  for (auto [id, q] : {std::pair{catalogue::FamilyId::THM1, 5u}, {catalogue::FamilyId::R3_ODD_CASE5, 7u},
                       {catalogue::FamilyId::R4_EVEN, 4u}, {catalogue::FamilyId::THM2, 7u}}) {
    auto r = verify::run(id, at(q), quiet());
    CHECK(r.matched);
    auto back = json::parse(json(r).dump()).get<report::VerificationReport>();
    CHECK(back == r);
    CHECK(back.compute_matched() == r.matched);
  }
}

TEST_CASE("report schema") {
  auto r = verify::run(catalogue::FamilyId::THM1, at(7), quiet());
  json j = r;
  for (auto key : {"family", "q", "params", "rank", "convention", "schlafli", "degenerate", "checks", "expected",
                   "matched", "witnesses", "group_order", "expected_order", "timings_ms"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["family"] == "THM1");
  CHECK(j["schlafli"] == json::array({6, 4, 6}));
  CHECK(j["checks"]["chirality"] == "chiral");
  CHECK(j["group_order"] == 1876896);
  CHECK(j["timings_ms"].empty());
}

TEST_CASE("csv and text") {
  CHECK(report::csv_header() ==
        "family,q,params,rank,schlafli,string,ip,full_group,chirality,group_order,expected_order,matched");
  auto r = verify::run(catalogue::FamilyId::THM1, at(5), quiet());
  auto row = report::to_csv_row(r);
  CHECK(csv_fields(row) == csv_fields(report::csv_header()));
  CHECK(row.rfind("THM1,5,", 0) == 0);
  CHECK(row.find("\"[4,8,4]\"") != std::string::npos);
  CHECK(report::to_text(r).find("matches expectations") != std::string::npos);
}

TEST_CASE("mismatch detection") {
  auto r = verify::run(catalogue::FamilyId::THM1, at(5), quiet());
  r.expected["chirality"] = "regular";
  CHECK_FALSE(r.compute_matched());
  r = verify::run(catalogue::FamilyId::THM1, at(5), quiet());
  r.expected_order = 1;
  CHECK_FALSE(r.compute_matched());
}
