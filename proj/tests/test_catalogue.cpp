#include <doctest.h>

#include "psl3/catalogue.hpp"
#include "psl3/report.hpp"

using namespace psl3;
using namespace psl3::catalogue;
using gf::Element;
using pg::ProjMatrix;

namespace {

FamilyParams at(std::uint32_t q) {
  FamilyParams p;
  p.q = q;
  return p;
}

Element report_element(Instance const& in, char const* key) {
  return report::element_from_json(*in.field, in.params.at(key));
}

std::uint64_t order_of(RegularTuple const& t) { return grp::schreier_sims_order(t.field(), t.rhos); }

}  // namespace

TEST_CASE("family names round-trip") {
  for (auto id : all_families()) CHECK(family_from_string(to_string(id)) == id);
  CHECK_THROWS_AS(family_from_string("THM3"), ParameterError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build(FamilyId::THM1, at(4)), ParameterError);
  CHECK_THROWS_AS(build(FamilyId::THM2, at(9)), ParameterError);
  CHECK_THROWS_AS(build(FamilyId::THM2, at(11)), ParameterError);
  auto p = at(7);
  p.x = "2";
  CHECK_THROWS_AS(build(FamilyId::THM1, p), ParameterError);
  p = at(7);
  p.sign = "*";
  CHECK_THROWS_AS(build(FamilyId::DIH_3, p), ParameterError);
  p = at(4);
  p.rank = 4;
  CHECK_THROWS_AS(build(FamilyId::EVEN_TRIANGULAR, p), ParameterError);
  p = at(7);
  p.a = "-1";
  CHECK_THROWS_AS(build(FamilyId::R3_CONIC, p), ParameterError);
  p = at(4);
  p.a = "1";
  p.b = "1";
  CHECK_THROWS_AS(build(FamilyId::R4_EVEN, p), ParameterError);
  CHECK_THROWS_AS(build(FamilyId::R3_ODD_CASE6, at(4)), ParameterError);
  CHECK_THROWS_AS(build(FamilyId::R3_EVEN, at(5)), ParameterError);
  p = at(7);
  p.a = "not-a-number";
  CHECK_THROWS_AS(build(FamilyId::R3_CONIC, p), ParameterError);
  p = at(7);
  p.variant = "1";
  CHECK_THROWS_AS(build(FamilyId::R4_ODD, p), ParameterError);
  CHECK_THROWS_AS(require_sqrt(Element(gf::field_of_order(7), 5)), ParameterError);
}

TEST_CASE("first chiral family") {
  auto in = build(FamilyId::THM1, at(7));
  CHECK(in.params["x"] == 3);
  CHECK(cgroup::schlafli(*in.chiral).entries == std::vector<std::uint64_t>{6, 4, 6});
  CHECK(*in.expect.schlafli == std::vector<std::uint64_t>{6, 4, 6});
  CHECK(*in.expect.order == 1876896);
  CHECK(cgroup::schlafli(*build(FamilyId::THM1, at(5)).chiral).entries == std::vector<std::uint64_t>{4, 8, 4});
  auto in8 = build(FamilyId::THM1, at(8));
  CHECK(in8.field->q() == 8);
}

TEST_CASE("second chiral family conjugator") {
  auto const& f = gf::field_of_order(13);
  ProjMatrix c = thm2_dual_conjugator(f);
  auto a = thm2_tuple(f, 1, 1), b = thm2_tuple(f, 1, 2).dual();
  for (int s = 1; s <= 4; ++s) CHECK(pg::conjugate(a.sigma(s), pg::inverse(c)) == b.sigma(s));
}

TEST_CASE("elementary abelian translations") {
  auto const& f = gf::field_of_order(9);
  for (gf::Code x = 0; x < 9; ++x)
    for (gf::Code y = 0; y < 9; y += 4) {
      Element X(f, x), Y(f, y), U(f, 5), V(f, 7);
      CHECK(m_xy(X, Y) * m_xy(U, V) == m_xy(X + U, Y + V));
    }
}

TEST_CASE("rank-3 odd orders at p=5") {
  CHECK(*build(FamilyId::R3_ODD_CASE2, at(5)).expect.order == 20);
  CHECK(*build(FamilyId::R3_ODD_CASE3, at(5)).expect.order == 100);
  auto case6 = build(FamilyId::R3_ODD_CASE6, at(5));
  CHECK(case6.regular.size() == 6);
  CHECK(order_of(case6.regular.front()) == 500);
  auto case8 = build(FamilyId::R3_ODD_CASE8, at(5));
  CHECK(*case8.expect.order == 300);
  CHECK(case8.params["two_k"] == 12);
}

TEST_CASE("conic family exceptional groups") {
  auto const& f = gf::field_of_order(11);
  Element x = require_sqrt(Element::from_int(f, 5));
  Element half = -gf::inv(Element::from_int(f, 2));
  Element plus = (-Element::from_int(f, 1) + x) / Element::from_int(f, 4);
  auto p = at(11);
  p.a = gf::to_string(half);
  p.b = gf::to_string(plus);
  auto in = build(FamilyId::R3_CONIC, p);
  CHECK(in.expect.group_name == "Alt(5)");
  CHECK(order_of(in.regular.front()) == 60);
  auto sym4 = build(FamilyId::R3_CONIC, at(11));
  CHECK(order_of(sym4.regular.front()) == 24);
}

TEST_CASE("rank-4 odd presets") {
  struct Row {
    std::uint32_t p;
    std::uint64_t order;
    std::vector<std::uint64_t> type;
  };
  for (auto const& r : {Row{5, 120, {3, 3, 3}}, Row{11, 660, {3, 5, 3}}, Row{19, 3420, {5, 3, 5}}}) {
    auto in = build(FamilyId::R4_ODD, at(r.p));
    auto const& t = in.regular.front();
    CHECK(order_of(t) == r.order);
    CHECK(cgroup::schlafli(t).entries == r.type);
    cgroup::SubgroupCache cache(t.field());
    CHECK(cgroup::check_string_regular(t).passed());
    CHECK(cgroup::check_ip_regular(t, cache).passed());
    auto q = r4_odd_form(report_element(in, "a"), report_element(in, "a2"));
    for (auto const& m : t.rhos) CHECK(pg::preserves_form(m, q));
  }
}

TEST_CASE("even families") {
  auto r4 = build(FamilyId::R4_EVEN, at(4));
  CHECK(order_of(r4.regular.front()) == *r4.expect.order);
  auto r3 = build(FamilyId::R3_EVEN, at(8));
  CHECK(order_of(r3.regular.front()) == *r3.expect.order);
  auto p = at(4);
  p.rank = 2;
  CHECK(order_of(build(FamilyId::EVEN_TRIANGULAR, p).regular.front()) == 8);
}

TEST_CASE("rank-6 witnesses") {
  auto const& f4 = gf::field_of_order(4);
  auto even = rank6_witness(f4, "even", gf::primitive_element(f4), Element(f4, 1));
  CHECK(even.elements.size() == 6);
  CHECK(even.elements.at("tau35") == ProjMatrix::from_ints(f4, {1, 0, 0, 1, 1, 1, 0, 0, 1}));
  auto p = pg::make_point(f4, std::array<long long, 3>{0, 1, 0});
  for (auto const& [name, m] : even.elements) CHECK(pg::apply_point(m, p) == p);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto const& f = gf::field_of_order(q);
    for (long long a : {1, 2}) {
      auto odd = rank6_witness(f, "odd", Element::from_int(f, a), Element(f, 1));
      CHECK(odd.elements.at("tau35") == ProjMatrix::from_ints(f, {-1, 0, 0, 0, 1, 0, 0, 0, -1}));
      CHECK(odd.elements.at("tau15") == odd.elements.at("sigma1") * odd.elements.at("tau25"));
      CHECK_FALSE(pg::commute(odd.elements.at("sigma1"), odd.elements.at("sigma5")));
    }
  }
  CHECK_THROWS_AS(rank6_witness(f4, "odd", Element(f4, 1), Element(f4, 1)), ParameterError);
}
