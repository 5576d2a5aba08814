#include "search.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"
#include "psl3/catalogue.hpp"
#include "psl3/report.hpp"

namespace psl3::cli {

using pg::ProjMatrix;

std::vector<ProjMatrix> psl3_elements(pg::Field const& f) {
  std::set<ProjMatrix> out;
  std::uint64_t q = f.q(), total = 1;
  for (int i = 0; i < 9; ++i) total *= q;
  std::array<gf::Code, 9> raw{};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (auto& c : raw) c = static_cast<gf::Code>(v % q), v /= q;
    bool zero = std::all_of(raw.begin(), raw.end(), [](gf::Code c) { return c == 0; });
    if (zero) continue;
    try {
      ProjMatrix m = ProjMatrix::canonicalize(f, raw);
      if (pg::in_psl(m)) out.insert(m);
    } catch (pg::SingularMatrix const&) {
    }
  }
  return {out.begin(), out.end()};
}

std::vector<ProjMatrix> class_representatives(std::vector<ProjMatrix> const& group) {
  pg::Field const& f = group.front().field();
  std::vector<ProjMatrix> gens;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c) {
        std::array<long long, 9> e{1, 0, 0, 0, 1, 0, 0, 0, 1};
        e[3 * r + c] = 1;
        gens.push_back(ProjMatrix::from_ints(f, e));
      }
  std::set<ProjMatrix> seen;
  std::vector<ProjMatrix> reps;
  for (auto const& g : group) {
    if (seen.count(g)) continue;
    reps.push_back(g);  // group is sorted, so g is the smallest of its class
    std::vector<ProjMatrix> frontier{g};
    seen.insert(g);
    while (!frontier.empty()) {
      ProjMatrix m = frontier.back();
      frontier.pop_back();
      for (auto const& h : gens) {
        ProjMatrix c = pg::conjugate(m, h);
        if (seen.insert(c).second) frontier.push_back(c);
      }
    }
  }
  return reps;
}

namespace {

bool involution(ProjMatrix const& m) { return !m.is_identity() && (m * m).is_identity(); }

struct Scan {
  pg::Field const& f;
  SearchOptions const& opt;
  std::vector<ProjMatrix> const& involutions;
  std::uint64_t psl_order;
  SearchResult part;
  std::vector<ProjMatrix> sigmas;
  std::vector<std::vector<ProjMatrix>> tau;  // tau[i][j] = sigma_{i+1}..sigma_{j+1}

  void finish() {
    ++part.string_tuples;
    for (auto const& s : sigmas)
      if (pg::order(s) == 2) {
        ++part.involution_rejected;
        return;
      }
    if (grp::schreier_sims_order(f, sigmas) != psl_order) return;
    ++part.full_group;
    cgroup::ChiralTuple t(sigmas);
    if (!cgroup::check_string_chiral(t).passed()) throw std::logic_error("incremental string check disagrees");
    cgroup::SubgroupCache cache(f);
    if (!cgroup::check_ip_plus(t, cache).passed()) return;
    ++part.ip_plus;
    auto c = cgroup::chirality_check(t, opt.search_duality);
    if (c.verdict == cgroup::Chirality::chiral) {
      ++part.chiral;
      part.chiral_tuples.push_back(sigmas);
    } else if (c.verdict == cgroup::Chirality::regular) {
      ++part.regular;
    } else {
      ++part.undecided;
    }
  }

  void extend() {
    std::size_t j = sigmas.size();
    if (static_cast<int>(j) == opt.rank - 1) {
      finish();
      return;
    }
    ProjMatrix prev_inv = pg::inverse(sigmas.back());
    for (auto const& t : involutions) {
      ProjMatrix s = prev_inv * t;
      if (s.is_identity()) continue;
      std::vector<ProjMatrix> row;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < j && ok; ++i) {
        row.push_back(tau[i].back() * s);
        ok = involution(row.back());
      }
      if (!ok) continue;
      row.push_back(t);
      sigmas.push_back(s);
      for (std::size_t i = 0; i < j; ++i) tau[i].push_back(row[i]);
      tau.push_back({s});
      extend();
      tau.pop_back();
      for (std::size_t i = 0; i < j; ++i) tau[i].pop_back();
      sigmas.pop_back();
    }
  }
};

}  // namespace

SearchResult search(SearchOptions const& opt) {
  if (opt.q != 2 && opt.q != 3) throw catalogue::ParameterError("search supports q = 2 and q = 3 only");
  if (opt.rank < 3 || opt.rank > 5) throw catalogue::ParameterError("search supports ranks 3, 4 and 5");
  pg::Field const& f = gf::field_of_order(opt.q);
  auto group = psl3_elements(f);
  std::vector<ProjMatrix> involutions;
  for (auto const& g : group)
    if (involution(g)) involutions.push_back(g);
  SearchResult r;
  r.q = opt.q;
  r.rank = opt.rank;
  r.group_order = group.size();
  if (r.group_order != grp::psl3_order(opt.q)) throw std::logic_error("PSL(3,q) enumeration has the wrong size");
  for (auto const& c : class_representatives(group)) {
    auto o = pg::order(c);
    if (o > 2) r.sigma1_classes.push_back(c);
  }
  std::vector<SearchResult> parts(r.sigma1_classes.size());
  parallel_for(parts.size(), opt.jobs, [&](std::size_t k) {
    Scan scan{f, opt, involutions, r.group_order, {}, {r.sigma1_classes[k]}, {{r.sigma1_classes[k]}}};
    scan.extend();
    parts[k] = std::move(scan.part);
  });
  for (auto& p : parts) {
    r.string_tuples += p.string_tuples;
    r.involution_rejected += p.involution_rejected;
    r.full_group += p.full_group;
    r.ip_plus += p.ip_plus;
    r.chiral += p.chiral;
    r.regular += p.regular;
    r.undecided += p.undecided;
    for (auto& t : p.chiral_tuples) r.chiral_tuples.push_back(std::move(t));
  }
  return r;
}

nlohmann::json to_json(SearchResult const& r) {
  nlohmann::json reps = nlohmann::json::array(), tuples = nlohmann::json::array();
  for (auto const& m : r.sigma1_classes) reps.push_back(report::matrix_json(m));
  for (auto const& t : r.chiral_tuples) {
    nlohmann::json a = nlohmann::json::array();
    for (auto const& m : t) a.push_back(report::matrix_json(m));
    tuples.push_back(a);
  }
  return {{"q", r.q},
          {"rank", r.rank},
          {"group_order", r.group_order},
          {"sigma1_classes", reps},
          {"string_tuples", r.string_tuples},
          {"involution_rejected", r.involution_rejected},
          {"full_group", r.full_group},
          {"ip_plus", r.ip_plus},
          {"chiral", r.chiral},
          {"regular", r.regular},
          {"undecided", r.undecided},
          {"chiral_tuples", tuples}};
}

}  // namespace psl3::cli
