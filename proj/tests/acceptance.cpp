// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psl3/catalogue.hpp"
#include "psl3/verify.hpp"
#include "search.hpp"

using namespace psl3;
using catalogue::FamilyId;
using catalogue::FamilyParams;
using cgroup::RegularTuple;
using gf::Element;
using pg::ProjMatrix;
using report::VerificationReport;

namespace {

constexpr double kThm1SecondsPerQ = 60.0;
constexpr double kSearchSeconds = 600.0;
constexpr std::uint64_t kOracleLimit = 1'000'000;
constexpr int kRandomChecks = 1000;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FamilyParams at(std::uint32_t q) {
  FamilyParams p;
  p.q = q;
  return p;
}

verify::Options quiet() {
  verify::Options o;
  o.timings = false;
  return o;
}

std::string tag(FamilyId id, std::uint32_t q) { return catalogue::to_string(id) + " q=" + std::to_string(q); }

std::uint64_t expected_psl_order(std::uint64_t q) {
  std::uint64_t g = (q - 1) % 3 == 0 ? 3 : 1;
  return q * q * q * (q * q * q - 1) * (q * q - 1) / g;
}

std::string check(VerificationReport const& r, std::string const& name) {
  auto it = r.checks.find(name);
  return it == r.checks.end() ? "missing" : it->second;
}

std::vector<VerificationReport> g_chiral_reports;

VerificationReport run_recorded(FamilyId id, FamilyParams const& p) {
  auto r = verify::run(id, p, quiet());
  if (id == FamilyId::THM1 || id == FamilyId::THM2) g_chiral_reports.push_back(r);
  return r;
}

std::size_t closure_size(std::vector<ProjMatrix> const& gens) {
  auto c = grp::closure(gens.front().field(), gens, kOracleLimit);
  return c ? c->size() : 0;
}

RegularTuple const& chosen(catalogue::Instance const& in, VerificationReport const& r) {
  auto label = r.params.value("candidate", std::string{});
  for (std::size_t i = 0; i < in.candidate_labels.size(); ++i)
    if (in.candidate_labels[i] == label) return in.regular[i];
  return in.regular.front();
}

void criterion1(Outcome& o) {
  for (std::uint32_t q : {5u, 7u, 8u, 9u, 11u, 13u}) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_recorded(FamilyId::THM1, at(q));
    double s = seconds_since(t0);
    std::uint64_t g = (q - 1) % 3 == 0 ? 3 : 1;
    std::vector<std::uint64_t> type{q - 1, 2 * (q - 1) / g, q - 1};
    auto name = tag(FamilyId::THM1, q);
    o.require(check(r, "string") == "pass", name + " string");
    o.require(check(r, "ip") == "pass", name + " IP+");
    o.require(check(r, "full_group") == "pass", name + " full group");
    o.require(r.group_order == expected_psl_order(q), name + " order");
    o.require(r.schlafli == type, name + " schlafli");
    o.require(check(r, "chirality") == "chiral", name + " chirality");
    o.require(s < kThm1SecondsPerQ, name + " took " + std::to_string(s) + " s");
  }
}

void criterion2(Outcome& o) {
  for (std::uint32_t q : {5u, 7u}) {
    auto const& f = gf::field_of_order(q);
    Element x = gf::primitive_element(f);
    auto t = catalogue::thm1_tuple(f, x);
    auto d = catalogue::thm1_duality(f, x);
    auto dual = t.dual();
    for (int i = 1; i <= 3; ++i)
      o.require(catalogue::thm1_phi(t.sigma(i), d) == dual.sigma(i), "q=" + std::to_string(q) + " sigma" + std::to_string(i));
  }
}

void criterion3(Outcome& o) {
  for (std::uint32_t p : {7u, 13u})
    for (int k : {1, -1})
      for (int i : {1, 2}) {
        auto params = at(p);
        params.k = k;
        params.i = i;
        auto r = run_recorded(FamilyId::THM2, params);
        auto name = "p=" + std::to_string(p) + " k=" + std::to_string(k) + " i=" + std::to_string(i);
        std::vector<std::uint64_t> type = k == 1 ? std::vector<std::uint64_t>{3, 6, 6, 3} : std::vector<std::uint64_t>{3, 6, 3, 3};
        o.require(r.schlafli == type, name + " schlafli");
        o.require(check(r, "chirality") == "chiral", name + " chirality");
        o.require(check(r, "invariance") == "pass", name + " invariance");
        if (k == 1) o.require(check(r, "dual_conjugator") == "pass", name + " dual conjugator");
        if (k == -1) {
          auto t = catalogue::thm2_tuple(gf::field_of_order(p), k, i);
          o.require(closure_size({t.sigma(3), t.sigma(4)}) == 12, name + " <sigma3,sigma4> order");
        }
      }
  auto const& f = gf::field_of_order(7);
  auto c = catalogue::thm2_dual_conjugator(f);
  auto a = catalogue::thm2_tuple(f, 1, 1), b = catalogue::thm2_tuple(f, 1, 2).dual();
  for (int s = 1; s <= 4; ++s) o.require(pg::inverse(c) * a.sigma(s) * c == b.sigma(s), "direct conjugator");
}

void criterion4(Outcome& o) {
  auto params = at(25);
  auto r = run_recorded(FamilyId::THM2, params);
  for (auto name : {"string", "ip", "full_group", "facet", "far_commutation", "frobenius_witness"})
    o.require(check(r, name) == "pass", name);
  o.require(check(r, "chirality") == "regular", "chirality " + check(r, "chirality"));
  auto t = catalogue::thm2_tuple(gf::field_of_order(25), 1, 1);
  auto res = cgroup::chirality_check(t);
  o.require(res.witness && res.witness->frobenius_power == 1 && cgroup::validates(t, *res.witness),
            "direct witness");
}

void criterion5(Outcome& o) {
  struct Row {
    FamilyId id;
    std::uint64_t order;
  };
  for (auto const& row : {Row{FamilyId::R3_ODD_CASE2, 20}, Row{FamilyId::R3_ODD_CASE3, 100},
                          Row{FamilyId::R3_ODD_CASE6, 500}}) {
    auto in = catalogue::build(row.id, at(5));
    auto r = verify::run(in, quiet());
    auto name = tag(row.id, 5);
    o.require(closure_size(chosen(in, r).rhos) == row.order, name + " closure order");
    o.require(r.matched, name + " expectations");
  }
  for (auto [rank, type] : {std::pair{1, std::vector<std::uint64_t>{}}, {2, {4}}, {3, {4, 4}}}) {
    auto p = at(4);
    p.rank = rank;
    if (rank == 3) p.variant = "wreath";
    auto r = verify::run(FamilyId::EVEN_TRIANGULAR, p, quiet());
    o.require(r.schlafli == type && check(r, "c_group") == "pass", "triangular rank " + std::to_string(rank));
  }
  auto p = at(4);
  p.variant = "c2xd8";
  o.require(check(verify::run(FamilyId::EVEN_TRIANGULAR, p, quiet()), "ip") == "fail", "C2 x D8 IP failure");

  auto r3 = catalogue::build(FamilyId::R3_EVEN, at(4));
  std::uint64_t k3 = r3.params["k"], q3 = r3.params["q_prime"];
  o.require(closure_size(r3.regular.front().rhos) == 2 * k3 * q3 * q3, "E_{q'}^2:D_{2k} order");
  o.require(verify::run(r3, quiet()).matched, "E_{q'}^2:D_{2k} expectations");
  auto r4 = catalogue::build(FamilyId::R4_EVEN, at(4));
  std::uint64_t k4 = r4.params["k"], q4 = r4.params["q_prime"];
  o.require(closure_size(r4.regular.front().rhos) == 2 * k4 * q4 * q4 * q4 * q4, "E_{q'}^4:D_{2k} order");
  o.require(verify::run(r4, quiet()).matched, "E_{q'}^4:D_{2k} expectations");
}

void criterion6(Outcome& o) {
  struct Row {
    std::uint32_t p;
    std::vector<std::uint64_t> type;
    std::uint64_t order;
  };
  for (auto const& row : {Row{5, {3, 3, 3}, 120}, Row{11, {3, 5, 3}, 660}, Row{19, {5, 3, 5}, 3420}}) {
    auto in = catalogue::build(FamilyId::R4_ODD, at(row.p));
    auto r = verify::run(in, quiet());
    auto name = "p=" + std::to_string(row.p);
    o.require(r.schlafli == row.type, name + " schlafli");
    o.require(closure_size(in.regular.front().rhos) == row.order, name + " order");
    o.require(check(r, "string") == "pass" && check(r, "ip") == "pass", name + " string + IP");
  }
}

void criterion7(Outcome& o) {
  auto const& f4 = gf::field_of_order(4);
  auto r = verify::run(FamilyId::RANK6_WITNESS_EVEN, at(4), quiet());
  o.require(check(r, "common_fixed_point") == "pass", "even report");
  auto even = catalogue::rank6_witness(f4, "even", gf::primitive_element(f4), Element(f4, 1));
  auto pt = pg::make_point(f4, std::array<long long, 3>{0, 1, 0});
  o.require(even.elements.size() == 6, "six elements");
  for (auto const& [name, m] : even.elements) o.require(pg::apply_point(m, pt) == pt, name + " moves (0,1,0)");
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto ro = verify::run(FamilyId::RANK6_WITNESS_ODD, at(q), quiet());
    o.require(check(ro, "far_commutation") == "fail" && ro.matched, "odd q=" + std::to_string(q) + " report");
    auto const& f = gf::field_of_order(q);
    auto odd = catalogue::rank6_witness(f, "odd", Element(f, 1), Element(f, 1));
    o.require(!pg::commute(odd.elements.at("sigma1"), odd.elements.at("sigma5")), "odd q=" + std::to_string(q));
  }
}

void criterion8(Outcome& o) {
  std::vector<std::vector<ProjMatrix>> tuples;
  for (std::uint32_t q : {5u, 7u, 8u, 9u, 11u, 13u}) {
    auto const& f = gf::field_of_order(q);
    tuples.push_back(catalogue::thm1_tuple(f, gf::primitive_element(f)).sigmas());
  }
  for (std::uint32_t p : {7u, 13u})
    for (int k : {1, -1})
      for (int i : {1, 2}) tuples.push_back(catalogue::thm2_tuple(gf::field_of_order(p), k, i).sigmas());
  for (auto id : catalogue::all_families()) {
    if (id == FamilyId::THM1 || id == FamilyId::THM2) continue;
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 11u, 19u}) {
      try {
        auto in = catalogue::build(id, at(q));
        for (auto const& t : in.regular) tuples.push_back(t.rhos);
      } catch (catalogue::ParameterError const&) {
      }
    }
  }
  int checked = 0;
  for (auto const& t : tuples)
    for (std::size_t lo = 0; lo < t.size(); ++lo)
      for (std::size_t hi = lo + 1; hi <= t.size(); ++hi) {
        std::vector<ProjMatrix> w(t.begin() + lo, t.begin() + hi);
        std::uint64_t n = grp::schreier_sims_order(w.front().field(), w);
        if (n > kOracleLimit) continue;
        ++checked;
        o.require(closure_size(w) == n, "window of size " + std::to_string(w.size()) + " order " + std::to_string(n));
      }
  o.require(checked >= 200, "only " + std::to_string(checked) + " groups");
  if (o.ok) o.detail << checked << " groups";
}

ProjMatrix random_matrix(gf::Field const& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<gf::Code> d(0, f.q() - 1);
  for (;;) {
    std::array<gf::Code, 9> raw;
    for (auto& c : raw) c = d(rng);
    try {
      return ProjMatrix::canonicalize(f, raw);
    } catch (pg::SingularMatrix const&) {
    }
  }
}

int random_failures(gf::Field const& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<gf::Code> d(0, f.q() - 1), nz(1, f.q() - 1);
  int bad = 0;
  for (int n = 0; n < kRandomChecks; ++n) {
    Element a(f, d(rng)), b(f, d(rng)), c(f, d(rng)), u(f, nz(rng));
    bad += !((a + b) * c == a * c + b * c);
    bad += !(u * gf::inv(u) == Element(f, 1));
    bad += !(gf::frobenius(a * b, 1) == gf::frobenius(a, 1) * gf::frobenius(b, 1));
    bad += !(gf::frobenius(a + b, 1) == gf::frobenius(a, 1) + gf::frobenius(b, 1));

    ProjMatrix x = random_matrix(f, rng), y = random_matrix(f, rng), z = random_matrix(f, rng);
    std::array<gf::Code, 9> scaled;
    for (int i = 0; i < 9; ++i) scaled[i] = f.mul(u.code(), x.at(i / 3, i % 3));
    bad += !(ProjMatrix::canonicalize(f, scaled) == x);
    bad += !((x * y) * z == x * (y * z));
    bad += !((x * pg::inverse(x)).is_identity());
    bad += !(pg::frobenius_map(x * y, 1) == pg::frobenius_map(x, 1) * pg::frobenius_map(y, 1));
    bad += !(pg::frobenius_map(x, static_cast<long long>(f.n())) == x);
  }
  return bad;
}

void criterion9(Outcome& o) {
  for (auto const& r : g_chiral_reports) {
    auto name = r.family + " q=" + std::to_string(r.q) + " " + r.params.dump();
    o.require(check(r, "facet") == "pass", name + " facet");
    o.require(check(r, "far_commutation") == "pass", name + " far commutation");
    o.require(check(r, "no_involution_generator") == "pass", name + " involution generator");
  }
  o.require(g_chiral_reports.size() == 15, "verified chiral tuples: " + std::to_string(g_chiral_reports.size()));
  std::mt19937_64 rng(20261018);
  for (std::uint32_t q : {5u, 7u, 8u, 9u, 25u}) {
    int bad = random_failures(gf::field_of_order(q), rng);
    o.require(bad == 0, "GF(" + std::to_string(q) + ") " + std::to_string(bad) + " random failures");
  }
  if (o.ok) o.detail << g_chiral_reports.size() << " tuples, " << kRandomChecks << " random rounds per field";
}

void criterion10(Outcome& o) {
  for (int rank : {3, 4}) {
    auto t0 = std::chrono::steady_clock::now();
    cli::SearchOptions opt;
    opt.q = 2;
    opt.rank = rank;
    auto r = cli::search(opt);
    double s = seconds_since(t0);
    o.require(r.chiral == 0, "rank " + std::to_string(rank) + ": " + std::to_string(r.chiral) + " chiral");
    o.require(r.undecided == 0, "rank " + std::to_string(rank) + " undecided");
    o.require(s < kSearchSeconds, "rank " + std::to_string(rank) + " took " + std::to_string(s) + " s");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"first chiral family, q in {5,7,8,9,11,13}", criterion1},
      {"self-duality at q in {5,7}", criterion2},
      {"second chiral family, p in {7,13}, all (k,i)", criterion3},
      {"regular degeneration over GF(25)", criterion4},
      {"catalogue orders at p=5 and q=4", criterion5},
      {"exotic rank-4 cases p in {5,11,19}", criterion6},
      {"rank-6 witnesses", criterion7},
      {"closure equals Schreier-Sims on suite groups", criterion8},
      {"property suites", criterion9},
      {"exhaustive search over PSL(3,2)", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (std::exception const& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f s", seconds_since(t0));
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " (" << secs
              << ")";
    auto d = o.detail.str();
    if (!d.empty()) std::cout << " - " << d;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
