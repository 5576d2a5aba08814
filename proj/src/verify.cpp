#include "psl3/verify.hpp"

#include <chrono>
#include <functional>

namespace psl3::verify {

namespace {

using catalogue::FamilyId;
using catalogue::Instance;
using cgroup::ChiralTuple;
using cgroup::RegularTuple;
using cgroup::SubgroupCache;
using cgroup::Verdict;
using gf::Element;
using pg::ProjMatrix;
using report::VerificationReport;
using json = nlohmann::json;

char const* pf(bool ok) { return ok ? "pass" : "fail"; }

class Timer {
 public:
  Timer(VerificationReport& r, bool on) : r_(r), on_(on) {}
  template <class F>
  auto operator()(std::string const& name, F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record(name, t0);
    } else {
      auto out = fn();
      record(name, t0);
      return out;
    }
  }

 private:
  void record(std::string const& name, std::chrono::steady_clock::time_point t0) {
    if (!on_) return;
    r_.timings_ms[name] += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  VerificationReport& r_;
  bool on_;
};

void put(VerificationReport& r, std::string const& name, Verdict const& v) {
  r.checks[name] = cgroup::to_string(v.status);
  if (v.status == cgroup::Status::fail) r.witnesses[name] = json{{"detail", v.detail}, {"data", v.witness}};
}

void fail_witness(VerificationReport& r, std::string const& name, std::string detail, json data = nullptr) {
  r.witnesses[name] = json{{"detail", std::move(detail)}, {"data", std::move(data)}};
}

json matrices_json(std::vector<ProjMatrix> const& ms) {
  json a = json::array();
  for (auto const& m : ms) a.push_back(report::matrix_json(m));
  return a;
}

void cross_check(grp::GroupHandle const& g, Options const& opt, VerificationReport& r) {
  std::uint64_t n = g.order();
  if (n > opt.oracle_limit) {
    r.checks["oracle"] = "skipped";
    return;
  }
  auto c = grp::closure(g.field(), g.generators(), opt.oracle_limit);
  if (!c || c->size() != n)
    throw InconsistencyError("closure size " + (c ? std::to_string(c->size()) : std::string("> limit")) +
                             " disagrees with stabilizer chain order " + std::to_string(n));
  r.checks["oracle"] = "pass";
}

void finish(Instance const& in, VerificationReport& r) {
  for (auto const& [k, v] : in.expect.checks) r.expected[k] = v;
  if (in.expect.schlafli) r.expected["schlafli"] = report::schlafli_string(*in.expect.schlafli);
  r.expected_order = in.expect.order;
  r.matched = r.compute_matched();
}

bool fixes(ProjMatrix const& m, std::vector<pg::ProjPoint> const& set) {
  for (auto const& p : set)
    if (std::find(set.begin(), set.end(), pg::apply_point(m, p)) == set.end()) return false;
  return true;
}

bool fixes(ProjMatrix const& m, std::vector<pg::ProjLine> const& set) {
  for (auto const& l : set)
    if (std::find(set.begin(), set.end(), pg::apply_line(m, l)) == set.end()) return false;
  return true;
}

void thm1_extras(Instance const& in, ChiralTuple const& t, VerificationReport& r) {
  auto const& f = t.field();
  Element x = report::element_from_json(f, in.params.at("x"));
  ProjMatrix d = catalogue::thm1_duality(f, x);
  ChiralTuple dual = t.dual();
  bool ok = true;
  for (int i = 1; i < t.rank(); ++i) ok = ok && catalogue::thm1_phi(t.sigma(i), d) == dual.sigma(i);
  r.checks["self_duality"] = pf(ok);
  r.witnesses["self_duality"] = json{{"map", "M -> D M^-T D^-1"}, {"D", report::matrix_json(d)}};

  Element o = Element::from_int(f, 1), z = Element::from_int(f, 0);
  std::vector<pg::ProjLine> lines{pg::make_line(f, std::array<gf::Code, 3>{z.code(), o.code(), (-o).code()}),
                                  pg::make_line(f, std::array<gf::Code, 3>{z.code(), x.code(), (-o).code()})};
  std::vector<pg::ProjPoint> points{pg::make_point(f, std::array<long long, 3>{0, 1, 0}),
                                    pg::make_point(f, std::array<long long, 3>{0, 0, 1})};
  bool st = fixes(t.sigma(1), lines) && fixes(t.sigma(2), lines) && fixes(t.sigma(2), points) &&
            fixes(t.sigma(3), points);
  r.checks["stabilizers"] = pf(st);
}

void thm2_extras(Instance const& in, ChiralTuple const& t, SubgroupCache& cache, VerificationReport& r) {
  auto const& f = t.field();
  int k = in.params.at("k").get<int>(), i = in.params.at("i").get<int>();
  Element w = gf::pow(report::element_from_json(f, in.params.at("omega")), i);
  Element w2 = w * w;
  bool ok = true;
  if (k == -1) {
    pg::QuadraticForm conic(f, {0, 1, w2.code(), 0, w.code(), 0});
    for (int s = 2; s <= 4; ++s) ok = ok && pg::preserves_form(t.sigma(s), conic);
    r.witnesses["invariance"] = json{{"conic", "XY + w YZ + w^2 ZX"}, {"w", report::element_json(f, w.code())}};
    r.checks["alt4"] = pf(cache.get({t.sigma(3), t.sigma(4)}).order() == 12);
  } else {
    auto pt = pg::make_point(f, std::array<gf::Code, 3>{1, w.code(), w2.code()});
    for (int s = 2; s <= 4; ++s) ok = ok && pg::apply_point(t.sigma(s), pt) == pt;
    r.witnesses["invariance"] = json{{"point", report::point_json(f, pt)}};
    // C^-1 T(1,1) C = dual T(1,2), equivalently C T(1,2) C^-1 = dual T(1,1).
    ProjMatrix c = catalogue::thm2_dual_conjugator(f);
    ChiralTuple other = catalogue::thm2_tuple(f, 1, 3 - i).dual();
    ProjMatrix g = i == 1 ? pg::inverse(c) : c;
    bool dc = true;
    for (int s = 1; s <= 4; ++s) dc = dc && pg::conjugate(t.sigma(s), g) == other.sigma(s);
    r.checks["dual_conjugator"] = pf(dc);
    r.witnesses["dual_conjugator"] = json{{"C", report::matrix_json(c)}, {"map", i == 1 ? "M -> C^-1 M C" : "M -> C M C^-1"}};
  }
  r.checks["invariance"] = pf(ok);
}

VerificationReport run_chiral(Instance const& in, Options const& opt) {
  ChiralTuple const& t = *in.chiral;
  auto const& f = t.field();
  VerificationReport r;
  r.rank = t.rank();
  r.convention = "sigma_1..sigma_{r-1}";
  r.witnesses["generators"] = matrices_json(t.sigmas());
  Timer time(r, opt.timings);
  SubgroupCache cache(f, opt.cap);

  auto s = cgroup::schlafli(t);
  r.schlafli = s.entries;
  r.degenerate = s.degenerate;
  r.checks["nondegenerate"] = pf(!s.degenerate);

  bool psl = true;
  for (auto const& m : t.sigmas()) psl = psl && pg::in_psl(m);
  r.checks["in_psl"] = pf(psl);

  Verdict str = time("string", [&] { return cgroup::check_string_chiral(t); });
  put(r, "string", str);
  if (str.passed()) {
    put(r, "ip", time("ip", [&] { return cgroup::check_ip_plus(t, cache); }));
    put(r, "facet", time("facet", [&] { return cgroup::check_facet(t, cache); }));
  } else {
    r.checks["ip"] = r.checks["facet"] = "skipped";
  }
  put(r, "far_commutation", cgroup::check_far_commutation(t));

  auto const& full = cache.get(t.sigmas());
  std::uint64_t n = time("full_group", [&] { return full.order(); });
  r.group_order = n;
  r.checks["full_group"] = pf(psl && n == grp::psl3_order(f.q()));
  time("oracle", [&] { cross_check(full, opt, r); });

  bool involution = false;
  for (auto const& m : t.sigmas()) involution = involution || pg::order(m) == 2;
  r.checks["no_involution_generator"] = pf(!involution);

  if (r.checks["string"] == "pass" && r.checks["ip"] == "pass" && r.checks["full_group"] == "pass") {
    auto c = time("chirality", [&] { return cgroup::chirality_check(t, opt.search_duality); });
    r.checks["chirality"] = cgroup::to_string(c.verdict);
    json cj{{"branches", c.branches}};
    if (c.witness) {
      if (!cgroup::validates(t, *c.witness)) throw InconsistencyError("automorphism witness fails revalidation");
      cj["automorphism"] = json{{"conjugator", report::matrix_json(c.witness->conjugator)},
                                {"frobenius_power", c.witness->frobenius_power},
                                {"duality", c.witness->duality}};
    }
    r.witnesses["chirality"] = cj;
    if (c.verdict == cgroup::Chirality::regular)
      r.checks["frobenius_witness"] = pf(c.witness->frobenius_power == 1);
    else
      r.checks["frobenius_witness"] = "skipped";
  } else {
    r.checks["chirality"] = "skipped";
  }

  if (in.family == FamilyId::THM1) thm1_extras(in, t, r);
  if (in.family == FamilyId::THM2) time("family", [&] { thm2_extras(in, t, cache, r); });
  return r;
}

std::uint64_t parse_bound(std::string const& b, gf::Field const& f) {
  if (b == "2") return 2;
  if (b == "q-1") return f.q() - 1;
  if (b == "q+1") return f.q() + 1;
  if (b == "2p") return 2 * f.p();
  throw std::logic_error("unknown bound " + b);
}

std::optional<pg::QuadraticForm> invariant_form(Instance const& in, RegularTuple const& t) {
  auto const& f = t.field();
  auto get = [&](char const* k) { return report::element_from_json(f, in.params.at(k)); };
  switch (in.family) {
    case FamilyId::R3_CONIC: return catalogue::r3_conic_form(get("a"), get("b"));
    case FamilyId::R4_ODD:
      if (in.params.at("case").get<int>() == 1) return catalogue::r4_odd_form(get("a"), get("a2"));
      return std::nullopt;
    case FamilyId::R3_EVEN: {
      Element a = get("a"), b = get("b"), c = get("c");
      if (b.is_zero() || b == a || c.is_zero()) return std::nullopt;
      // (x^2 + a xz + a z^2) / ((a+b) b) + y^2 / c^2
      Element s = gf::inv((a + b) * b);
      Element y2 = gf::inv(c * c);
      return pg::QuadraticForm(f, {s.code(), 0, (a * s).code(), y2.code(), 0, (a * s).code()});
    }
    default: return std::nullopt;
  }
}

VerificationReport run_regular(Instance const& in, Options const& opt) {
  VerificationReport r;
  r.convention = "rho_0..rho_{r-1}";
  Timer time(r, opt.timings);
  auto const& f = *in.field;
  SubgroupCache cache(f, opt.cap);

  std::size_t chosen = 0;
  Verdict str, ip;
  for (std::size_t c = 0; c < in.regular.size(); ++c) {
    Verdict s = time("string", [&] { return cgroup::check_string_regular(in.regular[c]); });
    Verdict i = s.passed() ? time("ip", [&] { return cgroup::check_ip_regular(in.regular[c], cache); })
                           : Verdict{cgroup::Status::skipped, {}, nullptr};
    if (c == 0 || (s.passed() && i.passed())) chosen = c, str = s, ip = i;
    if (s.passed() && i.passed()) break;
  }
  RegularTuple const& t = in.regular[chosen];
  r.rank = t.rank();
  r.params["candidate"] = in.candidate_labels.at(chosen);
  r.witnesses["generators"] = matrices_json(t.rhos);
  put(r, "string", str);
  put(r, "ip", ip);
  r.checks["c_group"] = pf(str.passed() && ip.passed());

  auto s = cgroup::schlafli(t);
  r.schlafli = s.entries;
  r.degenerate = s.degenerate;
  r.checks["nondegenerate"] = pf(!s.degenerate);

  auto const& g = cache.get(t.rhos);
  std::uint64_t n = time("full_group", [&] { return g.order(); });
  r.group_order = n;
  time("oracle", [&] { cross_check(g, opt, r); });

  auto bound = in.params.find("sigma_order_bound");
  if (bound != in.params.end()) {
    std::uint64_t o = pg::order(t.rhos[0] * t.rhos[1]);
    r.params["sigma_order"] = o;
    r.checks["sigma_order"] = pf(parse_bound(bound->get<std::string>(), f) % o == 0);
    r.checks["order"] = pf(n == 2 * o && (!in.expect.order || n == *in.expect.order));
  }
  if (auto q = invariant_form(in, t)) {
    bool ok = q->nondegenerate();
    for (auto const& m : t.rhos) ok = ok && pg::preserves_form(m, *q);
    r.checks["form"] = pf(ok);
    json cs = json::array();
    for (auto c : q->coeffs()) cs.push_back(report::element_json(f, c));
    r.witnesses["form"] = json{{"coefficients", cs}, {"order", "x1^2,x1x2,x1x3,x2^2,x2x3,x3^2"}};
  }
  if (in.family == FamilyId::EVEN_TRIANGULAR && t.rank() == 3)
    r.checks["rho13_commutes_rho2"] = pf(pg::commute(t.rhos[0] * t.rhos[2], t.rhos[1]));
  return r;
}

VerificationReport run_witness(Instance const& in) {
  auto const& w = *in.witness;
  auto const& f = *in.field;
  auto const& e = w.elements;
  VerificationReport r;
  r.rank = 6;
  r.convention = "tau_{i,j} = sigma_i ... sigma_j";
  json els = json::object();
  for (auto const& [k, m] : e) els[k] = report::matrix_json(m);
  r.witnesses["elements"] = els;
  Element a = report::element_from_json(f, in.params.at("a"));
  Element o = Element::from_int(f, 1), z = Element::from_int(f, 0);
  bool even = w.parity == "even";
  ProjMatrix t45 = even ? ProjMatrix::canonicalize({o, z, z, o, o, z, a, z, o})
                        : ProjMatrix::from_ints(f, {-1, 0, 0, -1, 1, 0, 0, 0, -1});
  ProjMatrix t35 = even ? ProjMatrix::from_ints(f, {1, 0, 0, 1, 1, 1, 0, 0, 1})
                        : ProjMatrix::from_ints(f, {-1, 0, 0, 0, 1, 0, 0, 0, -1});
  r.checks["displayed_products"] = pf(e.at("tau45") == t45 && e.at("tau35") == t35);
  if (even) {
    auto p = pg::make_point(f, std::array<long long, 3>{0, 1, 0});
    bool ok = true;
    for (auto const& [k, m] : e) {
      auto ca = pg::center_axis(m);
      ok = ok && pg::apply_point(m, p) == p && pg::incident(f, p, ca.axis);
    }
    ok = ok && !(pg::center_axis(t45).axis == pg::center_axis(t35).axis);
    r.checks["common_fixed_point"] = pf(ok);
    r.witnesses["common_fixed_point"] = json{{"point", report::point_json(f, p)}};
  } else {
    ProjMatrix s1 = e.at("sigma1"), s5 = e.at("sigma5");
    bool c = pg::commute(s1, s5);
    r.checks["far_commutation"] = pf(c);
    if (!c)
      fail_witness(r, "far_commutation", "sigma_1 and sigma_5 do not commute",
                   json{{"sigma1", report::matrix_json(s1)}, {"sigma5", report::matrix_json(s5)},
                        {"commutator", report::matrix_json(pg::inverse(s1) * pg::inverse(s5) * s1 * s5)}});
  }
  return r;
}

}  // namespace

VerificationReport run(Instance const& in, Options const& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = in.chiral ? run_chiral(in, opt) : in.witness ? run_witness(in) : run_regular(in, opt);
  r.family = catalogue::to_string(in.family);
  r.q = in.field->q();
  json params = in.params;
  params.update(r.params);
  r.params = params;
  if (opt.timings)
    r.timings_ms["total"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  finish(in, r);
  return r;
}

VerificationReport run(catalogue::FamilyId id, catalogue::FamilyParams const& params, Options const& opt) {
  return run(catalogue::build(id, params), opt);
}

}  // namespace psl3::verify
