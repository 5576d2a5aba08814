#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oracle.hpp"
#include "parallel.hpp"
#include "psl3/verify.hpp"
#include "search.hpp"

namespace psl3::cli {

using catalogue::FamilyId;
using catalogue::ParameterError;
using json = nlohmann::json;

void RunConfig::validate() const {
  if (command == "verify" || command == "oracle") {
    if (family.empty()) throw ParameterError("--family is required");
    catalogue::family_from_string(family);
  }
  if (qs.empty()) throw ParameterError("--q is required");
  if (command == "witness" && parity != "even" && parity != "odd")
    throw ParameterError("--parity must be 'even' or 'odd'");
  if (params.k != 1 && params.k != -1) throw ParameterError("--k must be 1 or -1");
  if (params.i != 1 && params.i != 2) throw ParameterError("--i must be 1 or 2");
  if (jobs == 0) throw ParameterError("--jobs must be positive");
  if (cap == 0) throw ParameterError("--cap must be positive");
}

namespace {

std::vector<int> parse_indices(std::string const& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (std::exception const&) {
      throw ParameterError("--subgroup: bad index '" + tok + "'");
    }
  }
  if (out.empty()) throw ParameterError("--subgroup needs at least one index");
  return out;
}

void emit_reports(std::vector<report::VerificationReport> const& reports, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    out << json(reports).dump(2) << "\n";
  } else if (fmt == Format::csv) {
    out << report::csv_header() << "\n";
    for (auto const& r : reports) out << report::to_csv_row(r) << "\n";
  } else {
    for (auto const& r : reports) out << report::to_text(r);
  }
}

std::string witness_summary(report::VerificationReport const& r) {
  if (r.family == "RANK6_WITNESS_EVEN")
    return r.checks.at("common_fixed_point") == "pass" ? "(0,1,0) fixed by all 6 elements"
                                                       : "no common fixed point found";
  return r.checks.at("far_commutation") == "fail" ? "sigma_1 sigma_5 != sigma_5 sigma_1" : "sigma_1 and sigma_5 commute";
}

int run_reports(RunConfig const& cfg, FamilyId id, std::ostream& out) {
  std::vector<catalogue::Instance> instances;
  for (auto q : cfg.qs) {
    auto p = cfg.params;
    p.q = q;
    instances.push_back(catalogue::build(id, p));
  }
  verify::Options opt;
  opt.cap = cfg.cap;
  opt.search_duality = cfg.search_duality;
  opt.timings = cfg.timings;
  std::vector<report::VerificationReport> reports(instances.size());
  parallel_for(instances.size(), cfg.jobs, [&](std::size_t k) { reports[k] = verify::run(instances[k], opt); });
  std::stable_sort(reports.begin(), reports.end(), [](auto const& a, auto const& b) {
    return std::tie(a.family, a.q) < std::tie(b.family, b.q) ||
           (std::tie(a.family, a.q) == std::tie(b.family, b.q) && a.params.dump() < b.params.dump());
  });
  emit_reports(reports, cfg.format, out);
  if (cfg.command == "witness" && cfg.format == Format::text)
    for (auto const& r : reports) out << "  " << witness_summary(r) << "\n";
  bool all = std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.matched; });
  return all ? kExitOk : kExitMismatch;
}

int run_search(RunConfig const& cfg, std::ostream& out) {
  json all = json::array();
  std::string text;
  for (auto q : cfg.qs) {
    SearchOptions opt;
    opt.q = q;
    opt.rank = cfg.params.rank;
    opt.search_duality = cfg.search_duality;
    opt.jobs = cfg.jobs;
    auto r = search(opt);
    all.push_back(to_json(r));
    std::ostringstream os;
    os << "PSL(3," << q << ") rank " << r.rank << ": " << r.sigma1_classes.size() << " sigma_1 classes, "
       << r.string_tuples << " string tuples (" << r.involution_rejected << " with an involution generator), "
       << r.full_group << " generating, " << r.ip_plus << " with IP+, " << r.chiral << " chiral, " << r.regular
       << " regular, " << r.undecided << " undecided\n";
    text += os.str();
  }
  if (cfg.format == Format::text) {
    out << text;
  } else if (cfg.format == Format::csv) {
    out << "q,rank,string_tuples,involution_rejected,full_group,ip_plus,chiral,regular,undecided\n";
    for (auto const& j : all)
      out << j["q"] << ',' << j["rank"] << ',' << j["string_tuples"] << ',' << j["involution_rejected"] << ','
          << j["full_group"] << ',' << j["ip_plus"] << ',' << j["chiral"] << ',' << j["regular"] << ','
          << j["undecided"] << "\n";
  } else {
    out << all.dump(2) << "\n";
  }
  return kExitOk;
}

int run_oracle(RunConfig const& cfg, FamilyId id, std::ostream& out) {
  OracleOptions opt;
  opt.cap = cfg.cap;
  opt.seed = cfg.seed;
  opt.samples = cfg.samples;
  if (!cfg.subgroup.empty()) opt.subgroup = parse_indices(cfg.subgroup);
  std::vector<json> results(cfg.qs.size());
  std::vector<catalogue::Instance> instances;
  for (auto q : cfg.qs) {
    auto p = cfg.params;
    p.q = q;
    instances.push_back(catalogue::build(id, p));
  }
  parallel_for(instances.size(), cfg.jobs, [&](std::size_t k) { results[k] = oracle(instances[k], opt); });
  bool ok = true;
  for (auto const& r : results) ok = ok && r["consistent"].get<bool>();
  if (cfg.format == Format::text) {
    for (auto const& r : results) out << r.dump() << "\n";
  } else {
    out << json(results).dump(2) << "\n";
  }
  return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int dispatch(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw ParameterError("cannot open " + cfg.out + " for writing");
      sink = &file;
    }
    if (cfg.command == "verify") return run_reports(cfg, catalogue::family_from_string(cfg.family), *sink);
    if (cfg.command == "witness")
      return run_reports(cfg, cfg.parity == "even" ? FamilyId::RANK6_WITNESS_EVEN : FamilyId::RANK6_WITNESS_ODD,
                         *sink);
    if (cfg.command == "search") return run_search(cfg, *sink);
    if (cfg.command == "oracle") return run_oracle(cfg, catalogue::family_from_string(cfg.family), *sink);
    throw ParameterError("unknown command '" + cfg.command + "'");
  } catch (ParameterError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (gf::FieldError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (grp::EnumerationError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (verify::InconsistencyError const& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (std::logic_error const& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation and reflection groups of polytopes inside PSL(3,q)", "psl3"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json", case_name, a, b, c, a2, sign, x;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.qs, "Field order; repeat or comma-separate for several")->delimiter(',');
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
    sub->add_option("--cap", cfg.cap, "Enumeration cap for generated subgroups");
    sub->add_option("--jobs", cfg.jobs, "Parallel instances");
    sub->add_option("--seed", cfg.seed, "Seed for randomized cross-checks");
    sub->add_flag("--no-duality-branch", "Skip the duality branch of the chirality search");
    sub->add_flag("--no-timings", "Omit timings so output is reproducible byte for byte");
  };
  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Family id, e.g. THM1, R3_ODD_CASE6");
    sub->add_option("--x", x, "Primitive element or family parameter x");
    sub->add_option("--k", cfg.params.k, "THM2 sign k (1 or -1)");
    sub->add_option("--i", cfg.params.i, "THM2 power i of omega (1 or 2)");
    sub->add_option("--case", case_name, "R4_ODD situation 1..4, EVEN_TRIANGULAR wreath|c2xd8");
    sub->add_option("--rank", cfg.params.rank, "EVEN_TRIANGULAR rank 1..3");
    sub->add_option("--a", a, "Parameter a");
    sub->add_option("--b", b, "Parameter b");
    sub->add_option("--c", c, "Parameter c");
    sub->add_option("--a2", a2, "Parameter a'");
    sub->add_option("--sign", sign, "DIH_3 sign, + or -");
  };

  auto* verify_cmd = app.add_subcommand("verify", "Verify catalogue instances against their expectations");
  common(verify_cmd);
  family_opts(verify_cmd);
  auto* witness_cmd = app.add_subcommand("witness", "Check the rank-6 obstruction witnesses");
  common(witness_cmd);
  witness_cmd->add_option("--parity", cfg.parity, "even or odd")->required();
  witness_cmd->add_option("--a", a, "Parameter a");
  witness_cmd->add_option("--b", b, "Parameter b");
  auto* search_cmd = app.add_subcommand("search", "Exhaustive tuple search for q = 2, 3");
  common(search_cmd);
  search_cmd->add_option("--rank", cfg.params.rank, "Rank 3..5");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks of closure orders and intersections");
  common(oracle_cmd);
  family_opts(oracle_cmd);
  oracle_cmd->add_option("--subgroup", cfg.subgroup, "Only examine the subgroup on these generator indices");
  oracle_cmd->add_option("--samples", cfg.samples, "Random words per tuple");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (auto* sub : {verify_cmd, witness_cmd, search_cmd, oracle_cmd})
    if (sub->parsed()) {
      cfg.command = sub->get_name();
      cfg.search_duality = sub->count("--no-duality-branch") == 0;
      cfg.timings = sub->count("--no-timings") == 0;
    }
  cfg.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
  auto opt = [](std::string const& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  cfg.params.x = opt(x);
  cfg.params.a = opt(a);
  cfg.params.b = opt(b);
  cfg.params.c = opt(c);
  cfg.params.a2 = opt(a2);
  cfg.params.sign = opt(sign);
  cfg.params.variant = case_name;
  return dispatch(cfg, out, err);
}

}  // namespace psl3::cli
