#include "psl3/report.hpp"

#include <sstream>

namespace psl3::report {

json element_json(gf::Field const& f, gf::Code c) {
  if (f.n() == 1) return c;
  return f.coeffs(c);
}

gf::Element element_from_json(gf::Field const& f, json const& j) {
  if (j.is_array()) return gf::Element(f, f.from_coeffs(j.get<std::vector<std::uint32_t>>()));
  return gf::Element(f, j.get<gf::Code>());
}

json matrix_json(pg::ProjMatrix const& m) {
  json a = json::array();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.push_back(element_json(m.field(), m.at(r, c)));
  return a;
}

json point_json(gf::Field const& f, pg::ProjPoint const& p) {
  json a = json::array();
  for (auto c : p.c) a.push_back(element_json(f, c));
  return a;
}

json line_json(gf::Field const& f, pg::ProjLine const& l) {
  json a = json::array();
  for (auto c : l.c) a.push_back(element_json(f, c));
  return a;
}

std::string schlafli_string(std::vector<std::uint64_t> const& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

bool VerificationReport::compute_matched() const {
  for (auto const& [name, want] : expected) {
    if (name == "schlafli") {
      if (schlafli_string(schlafli) != want) return false;
      continue;
    }
    auto it = checks.find(name);
    if (it == checks.end() || it->second != want) return false;
  }
  if (expected_order && group_order != expected_order) return false;
  return true;
}

void to_json(json& j, VerificationReport const& r) {
  j = json{{"family", r.family},
           {"q", r.q},
           {"params", r.params},
           {"rank", r.rank},
           {"convention", r.convention},
           {"schlafli", r.schlafli},
           {"degenerate", r.degenerate},
           {"checks", r.checks},
           {"expected", r.expected},
           {"matched", r.matched},
           {"witnesses", r.witnesses},
           {"group_order", r.group_order ? json(*r.group_order) : json(nullptr)},
           {"expected_order", r.expected_order ? json(*r.expected_order) : json(nullptr)},
           {"timings_ms", r.timings_ms}};
}

void from_json(json const& j, VerificationReport& r) {
  j.at("family").get_to(r.family);
  j.at("q").get_to(r.q);
  r.params = j.at("params");
  j.at("rank").get_to(r.rank);
  j.at("convention").get_to(r.convention);
  j.at("schlafli").get_to(r.schlafli);
  j.at("degenerate").get_to(r.degenerate);
  j.at("checks").get_to(r.checks);
  j.at("expected").get_to(r.expected);
  j.at("matched").get_to(r.matched);
  r.witnesses = j.at("witnesses");
  auto opt = [&](char const* key) -> std::optional<std::uint64_t> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::uint64_t>();
  };
  r.group_order = opt("group_order");
  r.expected_order = opt("expected_order");
  j.at("timings_ms").get_to(r.timings_ms);
}

namespace {

std::string csv_quote(std::string const& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string check_or_dash(VerificationReport const& r, std::string const& name) {
  auto it = r.checks.find(name);
  return it == r.checks.end() ? "-" : it->second;
}

}  // namespace

std::string csv_header() {
  return "family,q,params,rank,schlafli,string,ip,full_group,chirality,group_order,expected_order,matched";
}

std::string to_csv_row(VerificationReport const& r) {
  std::ostringstream os;
  os << r.family << ',' << r.q << ',' << csv_quote(r.params.dump()) << ',' << r.rank << ','
     << csv_quote(schlafli_string(r.schlafli)) << ',' << check_or_dash(r, "string") << ','
     << check_or_dash(r, "ip") << ',' << check_or_dash(r, "full_group") << ',' << check_or_dash(r, "chirality")
     << ',' << (r.group_order ? std::to_string(*r.group_order) : "") << ','
     << (r.expected_order ? std::to_string(*r.expected_order) : "") << ',' << (r.matched ? "yes" : "no");
  return os.str();
}

std::string to_text(VerificationReport const& r) {
  std::ostringstream os;
  os << r.family << " q=" << r.q << " " << r.params.dump() << "\n";
  os << "  rank " << r.rank << ", schlafli " << schlafli_string(r.schlafli) << (r.degenerate ? " (degenerate)" : "")
     << "\n";
  if (r.group_order) os << "  group order " << *r.group_order << "\n";
  for (auto const& [name, v] : r.checks) {
    os << "  " << name << ": " << v;
    auto it = r.expected.find(name);
    if (it != r.expected.end() && it->second != v) os << " (expected " << it->second << ")";
    os << "\n";
  }
  if (!r.witnesses.empty()) os << "  witnesses " << r.witnesses.dump() << "\n";
  os << "  " << (r.matched ? "matches expectations" : "DOES NOT match expectations") << "\n";
  return os.str();
}

}  // namespace psl3::report
