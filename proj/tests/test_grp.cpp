#include <doctest.h>

#include <random>

#include "psl3/catalogue.hpp"
#include "psl3/grp.hpp"
#include "psl3/schreier_sims.hpp"

using namespace psl3;
using grp::StabilizerChain;
using pg::ProjMatrix;

namespace {

gf::Element E(gf::Field const& f, long long v) { return gf::Element::from_int(f, v); }

cgroup::ChiralTuple thm1(std::uint32_t q) {
  auto const& f = gf::field_of_order(q);
  return catalogue::thm1_tuple(f, gf::primitive_element(f));
}

ProjMatrix random_matrix(gf::Field const& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<gf::Code> pick(0, f.q() - 1);
  for (;;) {
    std::array<gf::Code, 9> raw;
    for (auto& c : raw) c = pick(rng);
    try {
      return ProjMatrix::canonicalize(f, raw);
    } catch (std::invalid_argument const&) {
    }
  }
}

// Plain permutations of {0..n-1}, composed right to left.
struct SymAction {
  std::uint32_t n;
  using P = std::vector<std::uint32_t>;
  P identity() const {
    P p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
    return p;
  }
  P mul(P const& a, P const& b) const {
    P r(n);
    for (std::uint32_t i = 0; i < n; ++i) r[i] = a[b[i]];
    return r;
  }
  P inv(P const& a) const {
    P r(n);
    for (std::uint32_t i = 0; i < n; ++i) r[a[i]] = i;
    return r;
  }
  std::uint32_t image(P const& a, std::uint32_t pt) const { return a[pt]; }
  std::uint32_t degree() const { return n; }
  bool is_identity(P const& a) const { return a == identity(); }
};

// Contiguous sub-tuples of a generator list.
std::vector<std::vector<ProjMatrix>> windows(std::vector<ProjMatrix> const& g) {
  std::vector<std::vector<ProjMatrix>> out;
  for (std::size_t lo = 0; lo < g.size(); ++lo)
    for (std::size_t hi = lo + 1; hi <= g.size(); ++hi) out.emplace_back(g.begin() + lo, g.begin() + hi);
  return out;
}

}  // namespace

TEST_CASE("classical orders") {
  CHECK(grp::pgl3_order(2) == 168);
  CHECK(grp::psl3_order(2) == 168);
  CHECK(grp::psl3_order(3) == 5616);
  CHECK(grp::psl3_order(4) == 20160);
  CHECK(grp::pgl3_order(4) == 60480);
  CHECK(grp::psl3_order(5) == 372000);
  CHECK(grp::psl3_order(7) == 1876896);
  CHECK(grp::psl3_order(13) == 270178272);
}

TEST_CASE("schreier-sims on symmetric groups") {
  for (std::uint32_t n = 2; n <= 9; ++n) {
    SymAction act{n};
    auto swap = act.identity(), cycle = act.identity();
    std::swap(swap[0], swap[1]);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    StabilizerChain<SymAction::P, SymAction> chain({swap, cycle}, act);
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
    CHECK(chain.order() == fact);
    CHECK(chain.contains(act.mul(swap, cycle)));
  }
}

TEST_CASE("closure and stabilizer chain at q=7") {
  auto t = thm1(7);
  auto const& f = t.field();
  CHECK(grp::closure(f, {}, 10)->size() == 1);
  CHECK(grp::closure(f, {t.sigma(2)}, 100)->size() == 4);
  CHECK(grp::closure(f, {t.sigma(2), t.sigma(3)}, 10000)->size() == 1176);
  CHECK_FALSE(grp::closure(f, {t.sigma(2), t.sigma(3)}, 1000).has_value());
  CHECK(grp::schreier_sims_order(f, {t.sigma(2), t.sigma(3)}) == 1176);
  CHECK(grp::schreier_sims_order(f, {}) == 1);
  CHECK(grp::schreier_sims_order(f, t.sigmas()) == grp::psl3_order(7));
}

TEST_CASE("stabilizer chain orders for the first chiral family") {
  auto t5 = thm1(5);
  CHECK(grp::schreier_sims_order(t5.field(), t5.sigmas()) == 372000);
  CHECK(grp::closure(t5.field(), t5.sigmas(), 400000)->size() == 372000);
  auto t13 = thm1(13);
  CHECK(grp::schreier_sims_order(t13.field(), t13.sigmas()) == 270178272);
}

TEST_CASE("membership") {
  auto t = thm1(7);
  auto const& f = t.field();
  grp::GroupHandle s2(f, {t.sigma(2)});
  CHECK(s2.contains(t.sigma(2) * t.sigma(2)));
  grp::GroupHandle s12(f, {t.sigma(1), t.sigma(2)});
  CHECK_FALSE(s12.contains(t.sigma(3)));
  grp::GroupHandle full(f, t.sigmas());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    ProjMatrix m = random_matrix(f, rng);
    CHECK(full.contains(m) == pg::in_psl(m));
  }
  auto t5 = thm1(5);
  grp::GroupHandle full5(t5.field(), t5.sigmas());
  for (int i = 0; i < 50; ++i) CHECK(full5.contains(random_matrix(t5.field(), rng)));
}

TEST_CASE("intersections") {
  auto t = thm1(7);
  auto const& f = t.field();
  grp::GroupHandle a(f, {t.sigma(1)}), b(f, {t.sigma(2)});
  CHECK(grp::intersect(a, b).size() == 1);
  grp::GroupHandle h12(f, {t.sigma(1), t.sigma(2)}), h23(f, {t.sigma(2), t.sigma(3)});
  auto meet = grp::intersect(h12, h23);
  CHECK(meet == *grp::closure(f, {t.sigma(2)}, 10));
  CHECK(meet.size() == 4);
  CHECK(grp::intersect(h23, h23) == *h23.elements());
  grp::GroupHandle tiny(f, t.sigmas(), 1000);
  CHECK_THROWS_AS(grp::intersect(tiny, tiny), grp::EnumerationError);
}

TEST_CASE("full group detection") {
  auto t = thm1(7);
  auto const& f = t.field();
  grp::GroupHandle full(f, t.sigmas());
  CHECK(grp::equals_psl3(full));
  CHECK(full.order() == 1876896);
  CHECK_FALSE(grp::equals_psl3(grp::GroupHandle(f, {t.sigma(2), t.sigma(3)})));
  auto t2 = catalogue::thm2_tuple(f, 1, 1);
  CHECK(grp::equals_psl3(grp::GroupHandle(f, t2.sigmas())));
  CHECK_THROWS(grp::equals_psl3(grp::GroupHandle(f, {ProjMatrix::from_ints(f, {1, 0, 0, 0, 1, 0, 0, 0, 3})})));
}

TEST_CASE("generated subfield") {
  CHECK(grp::generated_subfield(gf::field_of_order(25), {2}).q() == 5);
  auto const& f4 = gf::field_of_order(4);
  CHECK(grp::generated_subfield(f4, {gf::primitive_element(f4).code()}).q() == 4);
  CHECK(grp::generated_subfield(gf::field_of_order(49), {3}).q() == 7);
}

TEST_CASE("point permutation is a homomorphism") {
  std::mt19937_64 rng(17);
  for (std::uint32_t q : {3u, 4u, 5u, 8u}) {
    auto const& f = gf::field_of_order(q);
    grp::PermAction act(f);
    for (int i = 0; i < 100; ++i) {
      ProjMatrix a = random_matrix(f, rng), b = random_matrix(f, rng);
      CHECK(act.perm_of(a * b) == act.mul(act.perm_of(a), act.perm_of(b)));
      CHECK(act.perm_of(pg::inverse(a)) == act.inv(act.perm_of(a)));
    }
    CHECK(act.is_identity(act.perm_of(ProjMatrix::identity(f))));
  }
}

TEST_CASE("closure matches the stabilizer chain on every suite group up to 10^6") {
  using catalogue::FamilyId;
  std::vector<std::vector<ProjMatrix>> tuples;
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) tuples.push_back(thm1(q).sigmas());
  for (int k : {1, -1})
    for (int i : {1, 2}) tuples.push_back(catalogue::thm2_tuple(gf::field_of_order(7), k, i).sigmas());
  for (auto id : catalogue::all_families()) {
    if (id == FamilyId::THM1 || id == FamilyId::THM2) continue;
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 11u}) {
      catalogue::FamilyParams p;
      p.q = q;
      try {
        auto in = catalogue::build(id, p);
        for (auto const& t : in.regular) tuples.push_back(t.rhos);
      } catch (catalogue::ParameterError const&) {
      }
    }
  }
  int checked = 0;
  for (auto const& t : tuples)
    for (auto const& w : windows(t)) {
      auto const& f = w.front().field();
      std::uint64_t n = grp::schreier_sims_order(f, w);
      if (n > 1'000'000) continue;
      auto c = grp::closure(f, w, 1'000'000);
      REQUIRE(c.has_value());
      CHECK(c->size() == n);
      ++checked;
    }
  CHECK(checked > 200);
}
