#include "psl3/catalogue.hpp"

#include <array>

#include "psl3/grp.hpp"
#include "psl3/report.hpp"

namespace psl3::catalogue {

namespace {

struct Named {
  FamilyId id;
  char const* name;
};

constexpr Named kNames[] = {
    {FamilyId::THM1, "THM1"},
    {FamilyId::THM2, "THM2"},
    {FamilyId::DIH_A, "DIH_A"},
    {FamilyId::DIH_B, "DIH_B"},
    {FamilyId::DIH_1, "DIH_1"},
    {FamilyId::DIH_2, "DIH_2"},
    {FamilyId::DIH_3, "DIH_3"},
    {FamilyId::DIH_4, "DIH_4"},
    {FamilyId::R3_ODD_CASE1, "R3_ODD_CASE1"},
    {FamilyId::R3_ODD_CASE2, "R3_ODD_CASE2"},
    {FamilyId::R3_ODD_CASE2_DUAL, "R3_ODD_CASE2_DUAL"},
    {FamilyId::R3_ODD_CASE3, "R3_ODD_CASE3"},
    {FamilyId::R3_ODD_CASE4, "R3_ODD_CASE4"},
    {FamilyId::R3_ODD_CASE5, "R3_ODD_CASE5"},
    {FamilyId::R3_ODD_CASE6, "R3_ODD_CASE6"},
    {FamilyId::R3_ODD_CASE7, "R3_ODD_CASE7"},
    {FamilyId::R3_ODD_CASE8, "R3_ODD_CASE8"},
    {FamilyId::R3_CONIC, "R3_CONIC"},
    {FamilyId::R3_EVEN, "R3_EVEN"},
    {FamilyId::R4_ODD, "R4_ODD"},
    {FamilyId::R4_EVEN, "R4_EVEN"},
    {FamilyId::EVEN_TRIANGULAR, "EVEN_TRIANGULAR"},
    {FamilyId::RANK6_WITNESS_EVEN, "RANK6_WITNESS_EVEN"},
    {FamilyId::RANK6_WITNESS_ODD, "RANK6_WITNESS_ODD"},
};

Element el(Field const& f, long long v) { return Element::from_int(f, v); }

ProjMatrix mat(std::array<Element, 9> const& e) { return ProjMatrix::canonicalize(e); }

ProjMatrix mat(Field const& f, std::array<long long, 9> const& v) { return ProjMatrix::from_ints(f, v); }

Field const& field_for(std::uint32_t q) {
  if (q < 2) throw ParameterError("--q is required (a prime power >= 2)");
  try {
    return gf::field_of_order(q);
  } catch (gf::FieldError const& e) {
    throw ParameterError("q = " + std::to_string(q) + " is not a supported prime power: " + e.what());
  }
}

Element parse(Field const& f, std::string const& text, char const* what) {
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      Element num(f, gf::parse_element(f, text.substr(0, slash)));
      Element den(f, gf::parse_element(f, text.substr(slash + 1)));
      if (den.is_zero()) throw ParameterError(std::string(what) + ": division by zero");
      return num / den;
    }
    return Element(f, gf::parse_element(f, text));
  } catch (gf::FieldError const& e) {
    throw ParameterError(std::string(what) + ": " + e.what());
  } catch (std::logic_error const& e) {
    if (dynamic_cast<ParameterError const*>(&e)) throw;
    throw ParameterError(std::string(what) + ": cannot parse '" + text + "'");
  }
}

Element param_or(Field const& f, std::optional<std::string> const& text, Element fallback, char const* what) {
  return text ? parse(f, *text, what) : fallback;
}

void require_odd(Field const& f, FamilyId id) {
  if (f.p() == 2) throw ParameterError(to_string(id) + " requires odd q");
}

void require_even(Field const& f, FamilyId id) {
  if (f.p() != 2) throw ParameterError(to_string(id) + " requires even q");
}

json ej(Element const& e) { return report::element_json(e.field(), e.code()); }

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t subfield_order(Field const& f, std::vector<Element> const& elems) {
  std::vector<gf::Code> codes;
  for (auto const& e : elems) codes.push_back(e.code());
  return upow(f.p(), static_cast<int>(gf::generated_subfield_degree(f, codes)));
}

}  // namespace

std::string to_string(FamilyId id) {
  for (auto const& n : kNames)
    if (n.id == id) return n.name;
  return "?";
}

FamilyId family_from_string(std::string const& name) {
  for (auto const& n : kNames)
    if (name == n.name) return n.id;
  throw ParameterError("unknown family '" + name + "'");
}

std::vector<FamilyId> all_families() {
  std::vector<FamilyId> r;
  for (auto const& n : kNames) r.push_back(n.id);
  return r;
}

ChiralTuple thm1_tuple(Field const& f, Element x) {
  Element o = el(f, 1), z = el(f, 0), xi = inv(x);
  ProjMatrix s1 = mat({x, o, z, z, o + xi, -xi, z, o, z});
  ProjMatrix s2 = mat({-xi, z, z, z, z, o, z, x, z});
  ProjMatrix s3 = mat({x, z, z, x - xi, o, z, x - xi, z, xi});
  return ChiralTuple({s1, s2, s3});
}

ProjMatrix thm1_duality(Field const& f, Element x) {
  Element o = el(f, 1), z = el(f, 0);
  return mat({inv(x - inv(x)), z, z, z, o, o, z, o, x});
}

ProjMatrix thm1_phi(ProjMatrix const& m, ProjMatrix const& d) { return d * pg::dual(m) * pg::inverse(d); }

ChiralTuple thm2_tuple(Field const& f, int k, int i) {
  if (k != 1 && k != -1) throw ParameterError("THM2: k must be 1 or -1");
  if (i != 1 && i != 2) throw ParameterError("THM2: i must be 1 or 2");
  auto w = gf::primitive_cube_root(f);
  if (!w) throw ParameterError("THM2: GF(" + std::to_string(f.q()) + ") has no primitive cube root of unity");
  Element wi = pow(*w, i), w2i = pow(*w, 2 * i);
  Element o = el(f, 1), z = el(f, 0), kk = el(f, k);
  ProjMatrix s1 = mat({o, z, z, z, wi, z, z, z, w2i});
  ProjMatrix s2 = mat({-o, z, -kk, z, -w2i, -kk * w2i, z, z, wi});
  ProjMatrix s3 = mat({o, kk, z, z, kk, o, z, -o, z});
  ProjMatrix s4 = mat({z, o, z, z, z, o, o, z, z});
  return ChiralTuple({s1, s2, s3, s4});
}

ProjMatrix thm2_dual_conjugator(Field const& f) {
  auto w = gf::primitive_cube_root(f);
  if (!w) throw ParameterError("no primitive cube root of unity");
  Element o = el(f, 1), w2 = (*w) * (*w);
  return mat({*w, w2, o, w2, *w, o, o, o, o});
}

ProjMatrix phi(Field const& f, int which) {
  std::array<long long, 9> v{-1, 0, 0, 0, -1, 0, 0, 0, -1};
  v[4 * (which - 1)] = 1;
  return mat(f, v);
}

ProjMatrix r3_odd_rho2(Field const& f, int c, Element a) {
  Element o = el(f, 1), z = el(f, 0), t = el(f, 2);
  switch (c) {
    case 1: return mat({o, z, z, z, -o, z, z, z, -o});
    case 2: return mat({o, z, z, o, -o, z, z, z, -o});
    case 3: return mat({o, z, z, o, -o, z, o, z, -o});
    case 4: return mat({o, -t, z, z, -o, z, z, z, -o});
    case 5: return mat({z, -o, z, -o, z, z, z, z, -o});
    case 6: return mat({a, -a - o, z, a - o, -a, z, z, z, -o});
    case 7: return mat({o, -t, z, z, -o, z, o, -o, -o});
    case 8: return mat({z, -o, z, -o, z, z, o, -o, -o});
    case 9: return mat({a, -a - o, z, a - o, -a, z, o, -o, -o});
  }
  throw std::out_of_range("rho_2 case must be 1..9");
}

ProjMatrix m_xy(Element x, Element y) {
  Field const& f = x.field();
  Element o = el(f, 1), z = el(f, 0);
  return mat({o, z, z, z, o, z, x, y, o});
}

ProjMatrix r3_conic_rho2(Element a, Element b) {
  Field const& f = a.field();
  Element o = el(f, 1);
  if ((a + o).is_zero() || (a + b).is_zero() || (b + o).is_zero())
    throw ParameterError("R3_CONIC: a+1, a+b and b+1 must be nonzero");
  return mat({a, -a - o, a + o, a + b, -a - b - o, a + b, b + o, -b - o, b});
}

pg::QuadraticForm r3_conic_form(Element a, Element b) {
  Field const& f = a.field();
  Element o = el(f, 1);
  return pg::QuadraticForm(f, {inv(a + o).code(), 0, 0, (-inv(a + b)).code(), 0, inv(b + o).code()});
}

RegularTuple r4_odd_tuple(Field const& f, int situation, Element a, Element a2) {
  Element o = el(f, 1), z = el(f, 0);
  Element b, c, b2, c2;
  switch (situation) {
    case 1:
      b = -a - o, c = a - o, b2 = -a2 - o, c2 = a2 - o;
      break;
    case 2:
      a = o, b = z, c = o, b2 = -a2 - o, c2 = a2 - o;
      break;
    case 3:
      a = o, a2 = o, b = z, b2 = z, c = o, c2 = o;
      break;
    case 4:
      a = o, a2 = o, b = z, c2 = z, b2 = o, c = o;
      break;
    default:
      throw ParameterError("R4_ODD: --case must be 1, 2, 3 or 4");
  }
  ProjMatrix r1 = mat({o, z, z, z, -o, z, z, z, -o});
  ProjMatrix r2 = mat({a, b, z, c, -a, z, z, z, -o});
  ProjMatrix r3 = mat({-o, z, z, z, -a2, c2, z, b2, a2});
  ProjMatrix r4 = mat({-o, z, z, z, -o, z, z, z, o});
  return RegularTuple{{r1, r2, r3, r4}};
}

pg::QuadraticForm r4_odd_form(Element a, Element a2) {
  Field const& f = a.field();
  Element o = el(f, 1);
  return pg::QuadraticForm(f, {((o - a) * (o + a2)).code(), 0, 0, ((o + a) * (o + a2)).code(), 0,
                               ((o + a) * (o - a2)).code()});
}

RegularTuple r4_even_tuple(Element a, Element b) {
  Field const& f = a.field();
  Element o = el(f, 1), z = el(f, 0);
  return RegularTuple{{mat({o, z, z, z, o, o, z, z, o}), mat({o, z, z, z, o, z, a, z, o}),
                       mat({o, z, b, z, o, z, z, z, o}), mat({o, z, z, o, o, z, z, z, o})}};
}

RegularTuple r3_even_tuple(Element a, Element b, Element c) {
  Field const& f = a.field();
  Element o = el(f, 1), z = el(f, 0);
  return RegularTuple{{mat({o, z, a, z, o, z, z, z, o}), mat({o, z, z, z, o, z, o, z, o}),
                       mat({o, z, b, z, o, c, z, z, o})}};
}

ProjMatrix unitriangular(Element x, Element y, Element z) {
  Field const& f = x.field();
  Element o = el(f, 1), n = el(f, 0);
  return mat({o, x, y, n, o, z, n, n, o});
}

Rank6Witness rank6_witness(Field const& f, std::string const& parity, Element a, Element b) {
  Rank6Witness w{parity, {}};
  Element o = el(f, 1), z = el(f, 0);
  if (parity == "even") {
    if (f.p() != 2) throw ParameterError("even witness requires even q");
    w.elements.emplace("tau12", mat({o, z, z, z, o, o, z, z, o}));
    w.elements.emplace("tau13", mat({o, z, z, z, o, z, a, z, o}));
    w.elements.emplace("tau14", mat({o, z, b, z, o, z, z, z, o}));
    w.elements.emplace("tau15", mat({o, z, z, o, o, z, z, z, o}));
  } else if (parity == "odd") {
    if (f.p() == 2) throw ParameterError("odd witness requires odd q");
    if (a.is_zero()) throw ParameterError("odd witness requires a != 0");
    w.elements.emplace("tau12", mat({o, z, z, z, -o, z, z, z, -o}));
    w.elements.emplace("tau13", mat({o, z, z, o, -o, z, z, z, -o}));
    w.elements.emplace("tau14", mat({-o, z, z, z, -o, z, z, o, o}));
    w.elements.emplace("tau15", mat({-o, z, z, z, -o, z, z, z, o}));
    w.elements.emplace("tau25", mat({-o, z, el(f, 2) * a, z, -o, a, z, z, o}));
  } else {
    throw ParameterError("--parity must be 'even' or 'odd'");
  }
  auto const& e = w.elements;
  // tau_{4,5} = tau_{1,3}^-1 tau_{1,5} and tau_{3,5} = tau_{1,2}^-1 tau_{1,5}.
  w.elements.emplace("tau45", pg::inverse(e.at("tau13")) * e.at("tau15"));
  w.elements.emplace("tau35", pg::inverse(e.at("tau12")) * e.at("tau15"));
  if (parity == "odd") {
    // tau_{1,5} = sigma_1 tau_{2,5} and tau_{1,5} = tau_{1,4} sigma_5.
    w.elements.emplace("sigma1", e.at("tau15") * pg::inverse(e.at("tau25")));
    w.elements.emplace("sigma5", pg::inverse(e.at("tau14")) * e.at("tau15"));
  }
  return w;
}

Element require_sqrt(Element v) {
  auto r = gf::sqrt(v);
  if (!r) throw ParameterError(gf::to_string(v) + " is not a square in GF(" + std::to_string(v.field().q()) + ")");
  return *r;
}

Element default_dih4_parameter(Field const& f) {
  for (gf::Code x = 0; x < f.q(); ++x) {
    bool root = false;
    for (gf::Code t = 0; t < f.q() && !root; ++t)
      root = f.add(f.sub(f.mul(t, t), f.mul(x, t)), 1) == 0;
    if (!root) return Element(f, x);
  }
  throw ParameterError("no irreducible X^2 - xX + 1");
}

namespace {

void build_thm1(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  if (f.q() < 5) throw ParameterError("THM1 requires q >= 5");
  Element x = param_or(f, p.x, gf::primitive_element(f), "--x");
  if (x.is_zero() || gf::element_order(x) != f.q() - 1) throw ParameterError("THM1: x must be a primitive element");
  in.params["x"] = ej(x);
  in.chiral = thm1_tuple(f, x);
  std::uint64_t q = f.q(), g = gf::gcd(3, q - 1);
  in.expect.group_name = "PSL(3," + std::to_string(q) + ")";
  in.expect.order = grp::psl3_order(q);
  in.expect.schlafli = std::vector<std::uint64_t>{q - 1, 2 * (q - 1) / g, q - 1};
  in.expect.checks = {{"string", "pass"},        {"ip", "pass"},           {"full_group", "pass"},
                      {"chirality", "chiral"},   {"facet", "pass"},        {"far_commutation", "pass"},
                      {"in_psl", "pass"},        {"no_involution_generator", "pass"},
                      {"self_duality", "pass"},  {"stabilizers", "pass"}};
}

void build_thm2(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  if (f.p() == 2 || f.p() == 3) throw ParameterError("THM2 requires characteristic other than 2 and 3");
  in.chiral = thm2_tuple(f, p.k, p.i);
  in.params["k"] = p.k;
  in.params["i"] = p.i;
  in.params["omega"] = ej(*gf::primitive_cube_root(f));
  in.expect.group_name = "PSL(3," + std::to_string(f.q()) + ")";
  in.expect.order = grp::psl3_order(f.q());
  in.expect.schlafli = p.k == 1 ? std::vector<std::uint64_t>{3, 6, 6, 3} : std::vector<std::uint64_t>{3, 6, 3, 3};
  in.expect.checks = {{"string", "pass"},  {"ip", "pass"},     {"full_group", "pass"}, {"facet", "pass"},
                      {"in_psl", "pass"},  {"invariance", "pass"}, {"far_commutation", "pass"}};
  if (p.k == -1) in.expect.checks["alt4"] = "pass";
  if (p.k == 1) in.expect.checks["dual_conjugator"] = "pass";
  if (f.n() == 1) {
    in.expect.checks["chirality"] = "chiral";
    in.expect.checks["no_involution_generator"] = "pass";
  } else if (f.n() == 2 && f.p() % 6 == 5) {
    in.expect.checks["chirality"] = "regular";
    in.expect.checks["frobenius_witness"] = "pass";
  }
}

void build_dihedral(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  Element o = el(f, 1), z = el(f, 0);
  ProjMatrix sigma = ProjMatrix::identity(f), tau = sigma;
  std::string bound;
  switch (in.family) {
    case FamilyId::DIH_A: {
      require_even(f, in.family);
      Element a = param_or(f, p.a, gf::primitive_element(f), "--a");
      if (a.is_zero() || a == o) throw ParameterError("DIH_A: a must differ from 0 and 1");
      in.params["a"] = ej(a);
      sigma = unitriangular(o, z, z);
      tau = unitriangular(a, z, z);
      in.expect.group_name = "D_4";
      in.expect.order = 4;
      bound = "2";
      break;
    }
    case FamilyId::DIH_B:
      require_odd(f, in.family);
      sigma = mat(f, {-1, 0, 0, 0, -1, 0, 0, 0, 1});
      tau = mat(f, {1, 0, 0, 0, -1, 0, 0, 0, -1});
      in.expect.group_name = "D_4";
      in.expect.order = 4;
      bound = "2";
      break;
    case FamilyId::DIH_1: {
      Element x = param_or(f, p.x, gf::primitive_element(f), "--x");
      if (x.is_zero() || x == o || x == -o) throw ParameterError("DIH_1: x must differ from 0, 1 and -1");
      in.params["x"] = ej(x);
      sigma = mat({x, z, z, z, o, z, z, z, inv(x)});
      tau = mat(f, {0, 0, 1, 0, -1, 0, 1, 0, 0});
      bound = "q-1";
      break;
    }
    case FamilyId::DIH_2:
      sigma = mat(f, {1, 1, 0, 0, 1, 1, 0, 0, 1});
      tau = mat(f, {-1, -1, 0, 0, 1, 0, 0, 0, -1});
      bound = "2p";
      break;
    case FamilyId::DIH_3: {
      require_odd(f, in.family);
      std::string s = p.sign.value_or("+");
      if (s != "+" && s != "-") throw ParameterError("DIH_3: --sign must be + or -");
      long long e = s == "+" ? 1 : -1;
      in.params["sign"] = s;
      sigma = mat(f, {e, 1, 0, 0, e, 0, 0, 0, 1});
      tau = mat(f, {1, 0, 0, 0, -1, 0, 0, 0, -1});
      bound = "2p";
      break;
    }
    case FamilyId::DIH_4: {
      Element x = param_or(f, p.x, default_dih4_parameter(f), "--x");
      for (gf::Code t = 0; t < f.q(); ++t)
        if (f.add(f.sub(f.mul(t, t), f.mul(x.code(), t)), 1) == 0)
          throw ParameterError("DIH_4: X^2 - xX + 1 must be irreducible");
      in.params["x"] = ej(x);
      sigma = mat({o, z, z, z, z, -o, z, o, x});
      tau = mat({-o, z, z, z, o, x, z, z, -o});
      bound = "q+1";
      break;
    }
    default:
      break;
  }
  in.params["sigma_order_bound"] = bound;
  in.regular.push_back(RegularTuple{{tau, tau * sigma}});
  in.candidate_labels.push_back("(tau, tau sigma)");
  in.expect.checks = {{"string", "pass"}, {"ip", "pass"}, {"sigma_order", "pass"}, {"order", "pass"}};
}

void build_r3_odd(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  require_odd(f, in.family);
  std::uint64_t pp = f.p();
  int c = 0;
  Element a = el(f, 2);
  auto& e = in.expect;
  switch (in.family) {
    case FamilyId::R3_ODD_CASE1:
      c = 1, e.group_name = "D_4", e.checks = {{"c_group", "fail"}};
      break;
    case FamilyId::R3_ODD_CASE2:
      c = 2, e.group_name = "D_{4p}", e.order = 4 * pp, e.checks = {{"c_group", "pass"}};
      break;
    case FamilyId::R3_ODD_CASE2_DUAL:
      c = 4, e.group_name = "D_{4p}", e.order = 4 * pp, e.checks = {{"c_group", "pass"}};
      break;
    case FamilyId::R3_ODD_CASE3:
      c = 3, e.group_name = "D_{2p}^2", e.order = 4 * pp * pp, e.checks = {{"c_group", "pass"}};
      break;
    case FamilyId::R3_ODD_CASE4:
      c = 5, e.group_name = "D_8", e.checks = {{"c_group", "fail"}};
      break;
    case FamilyId::R3_ODD_CASE5:
      c = 6, e.group_name = "D_{2k}";
      break;
    case FamilyId::R3_ODD_CASE6:
      c = 7, e.group_name = "He_p:C_2^2", e.order = 4 * pp * pp * pp, e.checks = {{"c_group", "pass"}};
      break;
    case FamilyId::R3_ODD_CASE7:
      c = 8, e.group_name = "D_{2p} wr C_2", e.order = 8 * pp * pp, e.checks = {{"c_group", "pass"}};
      break;
    case FamilyId::R3_ODD_CASE8:
      c = 9, e.group_name = "E_{q'}^2:D_{2k}", e.checks = {{"c_group", "pass"}};
      break;
    default:
      break;
  }
  if (c == 6 || c == 9) {
    a = param_or(f, p.a, a, "--a");
    Element o = el(f, 1);
    if (a.is_zero() || a == o || a == -o) throw ParameterError("a must differ from 0, 1 and -1");
    in.params["a"] = ej(a);
  }
  in.params["rho2_matrix"] = c;
  ProjMatrix rho2 = r3_odd_rho2(f, c, a);
  if (c == 6 || c == 9) {
    // The dihedral group <phi_1, phi_3, rho_2> of the fifth case; as a rank-3
    // string C-group it is D_{4k} with k odd and type [k,2].
    std::uint64_t dihedral = grp::schreier_sims_order(f, {phi(f, 1), r3_odd_rho2(f, 6, a), phi(f, 3)});
    in.params["two_k"] = dihedral;
    if (c == 6) {
      if (dihedral % 4 == 0 && (dihedral / 4) % 2 == 1)
        e.checks = {{"c_group", "pass"}, {"nondegenerate", "fail"}};
      else
        e.checks = {{"c_group", "fail"}};
    } else {
      std::uint64_t qq = subfield_order(f, {a});
      in.params["q_prime"] = qq;
      e.order = dihedral * qq * qq;
    }
  }
  // rho_1 and rho_3 range over ordered pairs of distinct phi_i.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) {
        in.regular.push_back(RegularTuple{{phi(f, i), rho2, phi(f, j)}});
        in.candidate_labels.push_back("rho1=phi" + std::to_string(i) + ",rho3=phi" + std::to_string(j));
      }
}

void build_r3_conic(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  require_odd(f, in.family);
  Element half = -inv(el(f, 2));
  Element a = param_or(f, p.a, half, "--a");
  Element b = param_or(f, p.b, half, "--b");
  in.params["a"] = ej(a);
  in.params["b"] = ej(b);
  ProjMatrix rho2 = r3_conic_rho2(a, b);
  in.regular.push_back(RegularTuple{{phi(f, 1), rho2, phi(f, 3)}});
  in.candidate_labels.push_back("rho1=phi1,rho3=phi3");
  in.expect.checks = {{"c_group", "pass"}, {"form", "pass"}};
  Element z = el(f, 0);
  if ((a == half && b == half) || (a == z && b == half) || (a == half && b == z)) {
    in.expect.group_name = "Sym(4)";
    in.expect.order = 24;
  }
  if (auto X = gf::sqrt(el(f, 5)); X && !X->is_zero()) {
    Element four = el(f, 4);
    Element plus = (-el(f, 1) + *X) / four, minus = (-el(f, 1) - *X) / four;
    auto is = [&](Element u, Element v) { return (a == u && b == v) || (a == v && b == u); };
    if (is(half, plus) || is(half, minus) || is(plus, minus)) {
      in.expect.group_name = "Alt(5)";
      in.expect.order = 60;
    }
  }
}

void build_r4_odd(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  require_odd(f, in.family);
  int situation = p.variant.empty() ? 1 : std::atoi(p.variant.c_str());
  Element o = el(f, 1);
  Element a = o, a2 = o;
  in.params["case"] = situation;
  auto& e = in.expect;
  std::uint64_t pp = f.p();
  if (situation == 1) {
    Element half = -inv(el(f, 2));
    if (!p.a && !p.a2) {
      if (f.n() != 1) throw ParameterError("R4_ODD case 1 presets exist for p = 5, 11, 19; pass --a and --a2");
      if (pp == 5 || pp == 11) {
        a = a2 = half;
      } else if (pp == 19) {
        Element X = require_sqrt(el(f, 5));
        a = a2 = (-o + X) / el(f, 4);
      } else {
        throw ParameterError("R4_ODD case 1 presets exist for p = 5, 11, 19; pass --a and --a2");
      }
      in.params["preset"] = "table";
      if (pp == 5) e.group_name = "PGL(2,5)", e.order = 120, e.schlafli = std::vector<std::uint64_t>{3, 3, 3};
      if (pp == 11) e.group_name = "PSL(2,11)", e.order = 660, e.schlafli = std::vector<std::uint64_t>{3, 5, 3};
      if (pp == 19) e.group_name = "PSL(2,19)", e.order = 3420, e.schlafli = std::vector<std::uint64_t>{5, 3, 5};
    } else {
      a = param_or(f, p.a, half, "--a");
      a2 = param_or(f, p.a2, half, "--a2");
    }
    for (Element v : {a, a2})
      if (v.is_zero() || v == o || v == -o) throw ParameterError("R4_ODD case 1: a and a' must differ from 0, 1, -1");
    in.params["a"] = ej(a);
    in.params["a2"] = ej(a2);
    e.checks = {{"c_group", "pass"}, {"form", "pass"}};
  } else if (situation == 2) {
    a2 = param_or(f, p.a2, el(f, 2), "--a2");
    if (a2.is_zero() || a2 == -o) throw ParameterError("R4_ODD case 2: a' must differ from 0 and -1");
    in.params["a2"] = ej(a2);
    if (!(a2 == o)) e.checks = {{"c_group", "fail"}};
  } else if (situation == 3) {
    e.group_name = "D_{2p}^2";
    e.order = 4 * pp * pp;
    e.checks = {{"c_group", "pass"}, {"nondegenerate", "fail"}};
  } else if (situation == 4) {
    e.group_name = "He_p:C_2^2";
    e.order = 4 * pp * pp * pp;
    e.schlafli = std::vector<std::uint64_t>{pp, 2 * pp, pp};
    e.checks = {{"c_group", "pass"}};
  }
  in.regular.push_back(r4_odd_tuple(f, situation, a, a2));
  in.candidate_labels.push_back("case " + std::to_string(situation));
}

void build_r4_even(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  require_even(f, in.family);
  Element x = gf::primitive_element(f);
  Element a = param_or(f, p.a, x, "--a");
  Element b = param_or(f, p.b, inv(x), "--b");
  if (a.is_zero() || b.is_zero()) throw ParameterError("R4_EVEN: a and b must be nonzero");
  std::uint64_t qq = subfield_order(f, {a * b});
  if (subfield_order(f, {a * b, a}) == qq) throw ParameterError("R4_EVEN: a must lie outside F_2[ab]");
  in.params["a"] = ej(a);
  in.params["b"] = ej(b);
  in.params["q_prime"] = qq;
  RegularTuple t = r4_even_tuple(a, b);
  std::uint64_t k = pg::order(t.rhos[1] * t.rhos[2]);
  in.params["k"] = k;
  in.regular.push_back(t);
  in.candidate_labels.push_back("displayed");
  in.expect.group_name = "E_{q'}^4:D_{2k}";
  in.expect.order = 2 * k * upow(qq, 4);
  in.expect.schlafli = std::vector<std::uint64_t>{4, k, 4};
  in.expect.checks = {{"c_group", "pass"}};
}

void build_r3_even(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  require_even(f, in.family);
  Element x = gf::primitive_element(f);
  Element a = param_or(f, p.a, x, "--a");
  Element b = param_or(f, p.b, el(f, 0), "--b");
  Element c = param_or(f, p.c, el(f, 1), "--c");
  if (a.is_zero()) throw ParameterError("R3_EVEN: a must be nonzero");
  in.params["a"] = ej(a);
  in.params["b"] = ej(b);
  in.params["c"] = ej(c);
  std::uint64_t qq = subfield_order(f, {a, b});
  in.params["q_prime"] = qq;
  RegularTuple t = r3_even_tuple(a, b, c);
  in.regular.push_back(t);
  in.candidate_labels.push_back("displayed");
  in.expect.checks = {{"c_group", "pass"}};
  if (b.is_zero() || b == a) {
    std::uint64_t k = pg::order(t.rhos[0] * t.rhos[1]);
    in.params["k"] = k;
    in.expect.group_name = "E_{q'}^2:D_{2k}";
    in.expect.order = 2 * k * qq * qq;
  } else {
    in.expect.group_name = "PSL(2,q')";
    in.expect.order = qq * (qq * qq - 1);
    if (!c.is_zero()) in.expect.checks["form"] = "pass";
  }
}

void build_even_triangular(Instance& in, FamilyParams const& p) {
  Field const& f = *in.field;
  require_even(f, in.family);
  Element o = el(f, 1), z = el(f, 0);
  in.params["rank"] = p.rank;
  ProjMatrix r1 = unitriangular(z, z, o), r2 = unitriangular(o, z, z);
  auto& e = in.expect;
  if (p.rank == 1) {
    in.regular.push_back(RegularTuple{{r1}});
    e.group_name = "C_2", e.order = 2, e.schlafli = std::vector<std::uint64_t>{};
    e.checks = {{"c_group", "pass"}};
  } else if (p.rank == 2) {
    in.regular.push_back(RegularTuple{{r1, r2}});
    e.group_name = "D_8", e.order = 8, e.schlafli = std::vector<std::uint64_t>{4};
    e.checks = {{"c_group", "pass"}};
  } else if (p.rank == 3) {
    std::string v = p.variant.empty() ? "wreath" : p.variant;
    in.params["variant"] = v;
    if (v == "wreath") {
      if (f.q() < 4) throw ParameterError("EVEN_TRIANGULAR wreath needs q >= 4");
      in.regular.push_back(RegularTuple{{r1, r2, unitriangular(z, z, gf::primitive_element(f))}});
      e.group_name = "C_2^2 wr C_2", e.order = 32, e.schlafli = std::vector<std::uint64_t>{4, 4};
      e.checks = {{"c_group", "pass"}, {"rho13_commutes_rho2", "fail"}};
    } else if (v == "c2xd8") {
      // rho_1 rho_3 = U(0,y,0) with y outside F_2 commutes with rho_2 but
      // lies outside <rho_1, rho_2>.
      if (f.q() < 4) throw ParameterError("EVEN_TRIANGULAR c2xd8 needs q >= 4");
      in.regular.push_back(RegularTuple{{r1, r2, unitriangular(z, gf::primitive_element(f), o)}});
      e.group_name = "C_2 x D_8", e.order = 16;
      e.checks = {{"string", "pass"}, {"ip", "fail"}, {"rho13_commutes_rho2", "pass"}};
    } else {
      throw ParameterError("EVEN_TRIANGULAR rank 3: --case must be 'wreath' or 'c2xd8'");
    }
  } else {
    throw ParameterError("EVEN_TRIANGULAR: --rank must be 1, 2 or 3");
  }
  in.candidate_labels.push_back("displayed");
}

}  // namespace

Instance build(FamilyId id, FamilyParams const& p) {
  Instance in;
  in.family = id;
  in.field = &field_for(p.q);
  Field const& f = *in.field;
  switch (id) {
    case FamilyId::THM1: build_thm1(in, p); break;
    case FamilyId::THM2: build_thm2(in, p); break;
    case FamilyId::DIH_A:
    case FamilyId::DIH_B:
    case FamilyId::DIH_1:
    case FamilyId::DIH_2:
    case FamilyId::DIH_3:
    case FamilyId::DIH_4: build_dihedral(in, p); break;
    case FamilyId::R3_ODD_CASE1:
    case FamilyId::R3_ODD_CASE2:
    case FamilyId::R3_ODD_CASE2_DUAL:
    case FamilyId::R3_ODD_CASE3:
    case FamilyId::R3_ODD_CASE4:
    case FamilyId::R3_ODD_CASE5:
    case FamilyId::R3_ODD_CASE6:
    case FamilyId::R3_ODD_CASE7:
    case FamilyId::R3_ODD_CASE8: build_r3_odd(in, p); break;
    case FamilyId::R3_CONIC: build_r3_conic(in, p); break;
    case FamilyId::R3_EVEN: build_r3_even(in, p); break;
    case FamilyId::R4_ODD: build_r4_odd(in, p); break;
    case FamilyId::R4_EVEN: build_r4_even(in, p); break;
    case FamilyId::EVEN_TRIANGULAR: build_even_triangular(in, p); break;
    case FamilyId::RANK6_WITNESS_EVEN:
    case FamilyId::RANK6_WITNESS_ODD: {
      bool even = id == FamilyId::RANK6_WITNESS_EVEN;
      Element a = param_or(f, p.a, even ? gf::primitive_element(f) : el(f, 1), "--a");
      Element b = param_or(f, p.b, el(f, 1), "--b");
      in.params["a"] = ej(a);
      if (even) in.params["b"] = ej(b);
      in.witness = rank6_witness(f, even ? "even" : "odd", a, b);
      in.expect.checks = {{even ? "common_fixed_point" : "far_commutation", even ? "pass" : "fail"}};
      break;
    }
  }
  return in;
}

}  // namespace psl3::catalogue
