#include "psl3/cgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "psl3/linalg.hpp"
#include "psl3/report.hpp"

namespace psl3::cgroup {

namespace {

std::string tuple_label(char sym, int from, int to) {
  std::string s = "<";
  for (int i = from; i <= to; ++i) {
    if (i > from) s += ",";
    s += sym + std::to_string(i);
  }
  return s + ">";
}

}  // namespace

ChiralTuple::ChiralTuple(std::vector<ProjMatrix> sigmas) : sigmas_(std::move(sigmas)) {
  if (sigmas_.empty()) throw std::invalid_argument("a chiral tuple needs at least one generator");
  for (auto const& s : sigmas_)
    if (!(s.field() == sigmas_.front().field())) throw gf::FieldError("generators over different fields");
  std::size_t m = sigmas_.size();
  tau_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    tau_[i].push_back(sigmas_[i]);
    for (std::size_t j = i + 1; j < m; ++j) tau_[i].push_back(tau_[i].back() * sigmas_[j]);
  }
}

ProjMatrix const& ChiralTuple::tau(int i, int j) const {
  if (i < 1 || j < i || j > rank() - 1) throw std::out_of_range("tau index out of range");
  return tau_[i - 1][j - i];
}

ChiralTuple ChiralTuple::dual() const {
  std::vector<ProjMatrix> d;
  for (auto it = sigmas_.rbegin(); it != sigmas_.rend(); ++it) d.push_back(pg::inverse(*it));
  return ChiralTuple(std::move(d));
}

ChiralTuple ChiralTuple::conjugated(ProjMatrix const& g) const {
  std::vector<ProjMatrix> c;
  for (auto const& s : sigmas_) c.push_back(pg::conjugate(s, g));
  return ChiralTuple(std::move(c));
}

RegularTuple RegularTuple::dual() const { return {std::vector<ProjMatrix>(rhos.rbegin(), rhos.rend())}; }

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

Status status_from_string(std::string const& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

GroupHandle const& SubgroupCache::get(std::vector<ProjMatrix> const& gens) {
  std::vector<pg::Entries> key;
  for (auto const& g : gens) key.push_back(g.entries());
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(std::move(key), GroupHandle(*f_, gens, cap_)).first;
  return it->second;
}

Verdict check_intersection(SubgroupCache& cache, std::vector<ProjMatrix> const& a,
                           std::vector<ProjMatrix> const& b, std::vector<ProjMatrix> const& c,
                           std::string const& label) {
  GroupHandle const& ha = cache.get(a);
  GroupHandle const& hb = cache.get(b);
  GroupHandle const& hc = cache.get(c);

  // <c> inside both sides.
  for (auto const& g : c) {
    if (!ha.contains(g) || !hb.contains(g))
      return Verdict::fail(label + ": generator of the right side is missing from the intersection",
                           {{"equality", label}, {"element", report::matrix_json(g)}});
  }

  bool a_in_b = std::all_of(a.begin(), a.end(), [&](ProjMatrix const& g) {
    return std::find(b.begin(), b.end(), g) != b.end();
  });
  if (a_in_b) {
    for (auto const& g : a)
      if (!hc.contains(g))
        return Verdict::fail(label + ": element of the intersection outside the right side",
                             {{"equality", label}, {"element", report::matrix_json(g)}});
    return Verdict::pass();
  }

  grp::ElementSet meet = grp::intersect(ha, hb);
  for (auto const& e : meet.entries()) {
    ProjMatrix m = ProjMatrix::from_canonical(cache.field(), e);
    if (!hc.contains(m))
      return Verdict::fail(label + ": element of the intersection outside the right side",
                           {{"equality", label},
                            {"element", report::matrix_json(m)},
                            {"intersection_order", meet.size()},
                            {"expected_order", hc.order()}});
  }
  if (meet.size() != hc.order())
    throw std::logic_error(label + ": double inclusion holds but orders differ");
  return Verdict::pass();
}

Verdict check_string_chiral(ChiralTuple const& t) {
  int m = t.rank() - 1;
  for (int i = 1; i <= m; ++i) {
    if (t.sigma(i).is_identity())
      return Verdict::fail("sigma_" + std::to_string(i) + " is trivial", {{"i", i}, {"j", i}});
    for (int j = i + 1; j <= m; ++j) {
      ProjMatrix const& tij = t.tau(i, j);
      if (tij.is_identity() || !(tij * tij).is_identity())
        return Verdict::fail("tau_{" + std::to_string(i) + "," + std::to_string(j) + "} is not an involution",
                             {{"i", i}, {"j", j}, {"tau", report::matrix_json(tij)}});
    }
  }
  return Verdict::pass();
}

Verdict check_ip_plus(ChiralTuple const& t, SubgroupCache& cache) {
  auto const& s = t.sigmas();
  for (int m = 2; m <= static_cast<int>(s.size()); ++m) {
    // (sigma_1..sigma_{m-1}) has IP+ from the previous round.
    std::vector<ProjMatrix> left(s.begin(), s.begin() + (m - 1));
    for (int i = 1; i <= m; ++i) {
      std::vector<ProjMatrix> right(s.begin() + (i - 1), s.begin() + m);
      std::vector<ProjMatrix> meet(s.begin() + (i - 1), s.begin() + (m - 1));
      std::string label = tuple_label('s', 1, m - 1) + " ^ " + tuple_label('s', i, m) + " = " +
                          (i <= m - 1 ? tuple_label('s', i, m - 1) : std::string("<>"));
      Verdict v = check_intersection(cache, left, right, meet, label);
      if (!v.passed()) {
        v.witness["i"] = i;
        v.witness["rank"] = m + 1;
        return v;
      }
    }
  }
  return Verdict::pass();
}

Verdict check_string_regular(RegularTuple const& t) {
  int r = t.rank();
  for (int i = 0; i < r; ++i) {
    ProjMatrix const& x = t.rhos[i];
    if (x.is_identity() || !(x * x).is_identity())
      return Verdict::fail("rho_" + std::to_string(i) + " is not an involution",
                           {{"i", i}, {"j", i}, {"rho", report::matrix_json(x)}});
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 2; j < r; ++j)
      if (!pg::commute(t.rhos[i], t.rhos[j]))
        return Verdict::fail("rho_" + std::to_string(i) + " and rho_" + std::to_string(j) + " do not commute",
                             {{"i", i}, {"j", j}});
  return Verdict::pass();
}

Verdict check_ip_regular(RegularTuple const& t, SubgroupCache& cache) {
  // Contiguous ranges [lo, hi], longest last; shorter ranges are settled first.
  auto const& r = t.rhos;
  int n = t.rank();
  for (int len = 2; len <= n; ++len) {
    for (int lo = 0; lo + len <= n; ++lo) {
      int hi = lo + len - 1;
      std::vector<ProjMatrix> a(r.begin() + lo, r.begin() + hi);
      std::vector<ProjMatrix> b(r.begin() + lo + 1, r.begin() + hi + 1);
      std::vector<ProjMatrix> c(r.begin() + lo + 1, r.begin() + hi);
      std::string label = tuple_label('r', lo, hi - 1) + " ^ " + tuple_label('r', lo + 1, hi) + " = " +
                          (len > 2 ? tuple_label('r', lo + 1, hi - 1) : std::string("<>"));
      Verdict v = check_intersection(cache, a, b, c, label);
      if (!v.passed()) {
        v.witness["range"] = {lo, hi};
        return v;
      }
    }
  }
  return Verdict::pass();
}

Schlafli schlafli(ChiralTuple const& t) {
  Schlafli s;
  for (auto const& g : t.sigmas()) s.entries.push_back(pg::order(g));
  s.degenerate = std::count(s.entries.begin(), s.entries.end(), 2) > 0;
  return s;
}

Schlafli schlafli(RegularTuple const& t) {
  Schlafli s;
  for (std::size_t i = 0; i + 1 < t.rhos.size(); ++i) s.entries.push_back(pg::order(t.rhos[i] * t.rhos[i + 1]));
  s.degenerate = std::count(s.entries.begin(), s.entries.end(), 2) > 0;
  return s;
}

Verdict check_far_commutation(ChiralTuple const& t) {
  int m = t.rank() - 1;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 3; j <= m; ++j)
      if (!pg::commute(t.sigma(i), t.sigma(j)))
        return Verdict::fail("sigma_" + std::to_string(i) + " and sigma_" + std::to_string(j) + " do not commute",
                             {{"i", i}, {"j", j}});
  return Verdict::pass();
}

Facet facet_extract(ChiralTuple const& t) {
  Facet f;
  for (int j = 2; j <= t.rank() - 1; ++j) f.tuple.rhos.push_back(t.tau(1, j));
  for (int j = 3; j <= t.rank() - 1; ++j) f.rotation_gens.push_back(t.sigma(j));
  return f;
}

Verdict check_facet(ChiralTuple const& t, SubgroupCache& cache) {
  if (t.rank() < 3) return Verdict::pass("rank below 3 has no facet");
  Facet f = facet_extract(t);
  Verdict v = check_string_regular(f.tuple);
  if (v.passed()) v = check_ip_regular(f.tuple, cache);
  if (!v.passed()) {
    v.detail = "facet: " + v.detail;
    return v;
  }
  std::uint64_t whole = cache.get(f.tuple.rhos).order();
  std::uint64_t rot = f.rotation_gens.empty() ? 1 : cache.get(f.rotation_gens).order();
  if (whole != 2 * rot)
    return Verdict::fail("facet rotation subgroup does not have index 2",
                         {{"facet_order", whole}, {"rotation_order", rot}});
  return Verdict::pass();
}

namespace {

// Rows of the 9-unknown system g A - lambda B g = 0, unknowns g_{rc} at 3r+c.
std::vector<linalg::Row> intertwiner_rows(ProjMatrix const& a, ProjMatrix const& b, pg::Code lambda) {
  Field const& f = a.field();
  std::vector<linalg::Row> rows;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      linalg::Row row(9, 0);
      for (int k = 0; k < 3; ++k) {
        row[3 * i + k] = f.add(row[3 * i + k], a.at(k, j));
        row[3 * k + j] = f.sub(row[3 * k + j], f.mul(lambda, b.at(i, k)));
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace

IntertwinerResult solve_intertwiners(std::vector<std::pair<ProjMatrix, ProjMatrix>> const& pairs,
                                     std::size_t limit) {
  if (pairs.empty()) throw std::invalid_argument("solve_intertwiners needs at least one pair");
  Field const& f = pairs.front().first.field();

  // Candidate scalars: g A g^-1 = lambda B forces det A = lambda^3 det B.
  auto scalars = [&](ProjMatrix const& a, ProjMatrix const& b) {
    pg::Code ratio = f.div(pg::det(a).code(), pg::det(b).code());
    std::vector<pg::Code> out;
    for (pg::Code l = 1; l < f.q(); ++l)
      if (f.mul(l, f.mul(l, l)) == ratio) out.push_back(l);
    return out;
  };

  std::vector<std::vector<linalg::Row>> systems{{}};
  for (auto const& [a, b] : pairs) {
    std::vector<std::vector<linalg::Row>> next;
    for (auto const& sys : systems)
      for (pg::Code l : scalars(a, b)) {
        auto rows = sys;
        auto extra = intertwiner_rows(a, b, l);
        rows.insert(rows.end(), extra.begin(), extra.end());
        linalg::rref(f, rows, 9);
        std::erase_if(rows, [](linalg::Row const& r) {
          return std::all_of(r.begin(), r.end(), [](pg::Code c) { return c == 0; });
        });
        if (rows.size() < 9) next.push_back(std::move(rows));
      }
    systems = std::move(next);
    if (systems.empty()) break;
  }

  IntertwinerResult res;
  std::set<ProjMatrix> found;
  for (auto const& sys : systems) {
    auto basis = linalg::nullspace(f, sys, 9);
    std::size_t budget = limit - std::min(limit, found.size());
    auto vecs = linalg::projective_points(f, basis, budget + 1);
    if (vecs.size() > budget) {
      res.truncated = true;
      vecs.resize(budget);
    }
    for (auto const& v : vecs) {
      std::array<pg::Code, 9> raw;
      std::copy(v.begin(), v.end(), raw.begin());
      try {
        found.insert(ProjMatrix::canonicalize(f, raw));
      } catch (pg::SingularMatrix const&) {
      }
    }
  }
  res.solutions.assign(found.begin(), found.end());
  return res;
}

std::string to_string(Chirality c) {
  switch (c) {
    case Chirality::chiral: return "chiral";
    case Chirality::regular: return "regular";
    case Chirality::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

ProjMatrix field_part(ProjMatrix const& m, int k, bool duality) {
  ProjMatrix r = pg::frobenius_map(m, k);
  return duality ? pg::dual(r) : r;
}

}  // namespace

ProjMatrix apply_automorphism(ProjMatrix const& m, AutomorphismWitness const& w) {
  return pg::conjugate(field_part(m, w.frobenius_power, w.duality), w.conjugator);
}

bool validates(ChiralTuple const& t, AutomorphismWitness const& w) {
  if (apply_automorphism(t.sigma(1), w) != pg::inverse(t.sigma(1))) return false;
  for (int i = 2; i <= t.rank() - 1; ++i)
    if (apply_automorphism(t.tau(1, i), w) != t.tau(1, i)) return false;
  return true;
}

ChiralityResult chirality_check(ChiralTuple const& t, bool search_duality) {
  ChiralityResult res;
  res.verdict = Chirality::chiral;
  int n = static_cast<int>(t.field().n());
  for (int d = 0; d < (search_duality ? 2 : 1); ++d) {
    for (int k = 0; k < n; ++k) {
      res.branches.push_back("k=" + std::to_string(k) + (d ? ",dual" : ""));
      std::vector<std::pair<ProjMatrix, ProjMatrix>> pairs;
      pairs.emplace_back(field_part(t.sigma(1), k, d), pg::inverse(t.sigma(1)));
      for (int i = 2; i <= t.rank() - 1; ++i) pairs.emplace_back(field_part(t.tau(1, i), k, d), t.tau(1, i));
      IntertwinerResult sol = solve_intertwiners(pairs);
      for (auto const& g : sol.solutions) {
        AutomorphismWitness w{g, k, d == 1};
        if (!validates(t, w)) throw std::logic_error("intertwiner failed re-validation");
        res.verdict = Chirality::regular;
        res.witness = w;
        return res;
      }
      if (sol.truncated) res.verdict = Chirality::undecided;
    }
  }
  return res;
}

}  // namespace psl3::cgroup
