#include "oracle.hpp"

#include <numeric>
#include <random>

#include "psl3/cgroup.hpp"
#include "psl3/report.hpp"

namespace psl3::cli {

using json = nlohmann::json;
using pg::ProjMatrix;

std::uint64_t permutation_order(ProjMatrix const& m) {
  auto const& f = m.field();
  auto pts = pg::all_points(f);
  std::vector<bool> seen(pts.size(), false);
  std::uint64_t l = 1;
  for (std::size_t s = 0; s < pts.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = s; !seen[x]; x = pg::point_index(f, pg::apply_point(m, pts[x]))) {
      seen[x] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

namespace {

grp::ElementSet close(pg::Field const& f, std::vector<ProjMatrix> const& gens, std::size_t cap) {
  auto c = grp::closure(f, gens, cap);
  if (!c) throw grp::EnumerationError("closure exceeds the cap of " + std::to_string(cap));
  return std::move(*c);
}

std::vector<ProjMatrix> slice(std::vector<ProjMatrix> const& v, int lo, int hi) {
  return {v.begin() + lo, v.begin() + hi};
}

struct Probe {
  pg::Field const& f;
  OracleOptions const& opt;
  bool consistent = true;

  json order(std::vector<ProjMatrix> const& gens) {
    auto c = close(f, gens, opt.cap);
    std::uint64_t ss = grp::schreier_sims_order(f, gens);
    bool ok = c.size() == ss;
    consistent = consistent && ok;
    return {{"closure_order", c.size()}, {"schreier_sims_order", ss}, {"agree", ok}};
  }

  // <a> ^ <b> by filtering the closure of a against the closure of b.
  json intersection(std::vector<ProjMatrix> const& a, std::vector<ProjMatrix> const& b,
                    std::vector<ProjMatrix> const& c, std::string const& label, bool chain_pass) {
    auto A = close(f, a, opt.cap), B = close(f, b, opt.cap), C = close(f, c, opt.cap);
    std::size_t both = 0;
    bool inside = true;
    for (auto const& e : A.entries())
      if (B.contains(e)) {
        ++both;
        inside = inside && C.contains(e);
      }
    bool equal = inside && both == C.size();
    consistent = consistent && equal == chain_pass;
    return {{"label", label}, {"size", both}, {"expected_size", C.size()}, {"equal", equal}, {"chain_verdict", chain_pass}};
  }

  json samples(std::vector<ProjMatrix> const& gens) {
    auto C = close(f, gens, opt.cap);
    grp::GroupHandle h(f, gens, opt.cap);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), len(1, 40);
    std::size_t agree = 0;
    for (std::size_t s = 0; s < opt.samples; ++s) {
      ProjMatrix w = ProjMatrix::identity(f);
      for (std::size_t k = len(rng); k > 0; --k) w = w * gens[pick(rng)];
      bool ok = C.contains(w) && h.contains(w) && permutation_order(w) == pg::order(w);
      agree += ok;
    }
    consistent = consistent && agree == opt.samples;
    return {{"seed", opt.seed}, {"samples", opt.samples}, {"agree", agree}};
  }
};

json schlafli_entry(std::vector<std::uint64_t> const& chain, std::vector<std::uint64_t> const& brute, bool& consistent) {
  bool ok = chain == brute;
  consistent = consistent && ok;
  return {{"oracle", brute}, {"library", chain}, {"agree", ok}};
}

}  // namespace

json oracle(catalogue::Instance const& in, OracleOptions const& opt) {
  pg::Field const& f = *in.field;
  Probe probe{f, opt};
  json out{{"family", catalogue::to_string(in.family)}, {"q", f.q()}, {"params", in.params}};
  cgroup::SubgroupCache cache(f, opt.cap);

  if (in.witness) throw catalogue::ParameterError("oracle does not apply to witness families");

  if (in.chiral) {
    auto const& t = *in.chiral;
    auto const& s = t.sigmas();
    if (opt.subgroup) {
      std::vector<ProjMatrix> gens;
      for (int i : *opt.subgroup) {
        if (i < 1 || i > static_cast<int>(s.size())) throw catalogue::ParameterError("--subgroup index out of range");
        gens.push_back(t.sigma(i));
      }
      out["subgroup"] = {{"indices", *opt.subgroup}, {"order", probe.order(gens)}};
    } else {
      out["group"] = probe.order(s);
      std::vector<std::uint64_t> brute;
      for (auto const& m : s) brute.push_back(permutation_order(m));
      out["schlafli"] = schlafli_entry(cgroup::schlafli(t).entries, brute, probe.consistent);
      json ints = json::array();
      int r = t.rank();
      for (int m = 2; m <= r - 1; ++m)
        for (int i = 1; i <= m; ++i) {
          auto a = slice(s, 0, m - 1), b = slice(s, i - 1, m), c = slice(s, i - 1, m - 1);
          std::string label = "<s1..s" + std::to_string(m - 1) + "> ^ <s" + std::to_string(i) + "..s" +
                              std::to_string(m) + ">";
          bool chain = cgroup::check_intersection(cache, a, b, c, label).passed();
          ints.push_back(probe.intersection(a, b, c, label, chain));
        }
      out["intersections"] = ints;
      out["random_words"] = probe.samples(s);
    }
  } else {
    json tuples = json::array();
    for (std::size_t k = 0; k < in.regular.size(); ++k) {
      auto const& rho = in.regular[k].rhos;
      json tj{{"candidate", in.candidate_labels.at(k)}};
      if (opt.subgroup) {
        std::vector<ProjMatrix> gens;
        for (int i : *opt.subgroup) {
          if (i < 0 || i >= static_cast<int>(rho.size())) throw catalogue::ParameterError("--subgroup index out of range");
          gens.push_back(rho[i]);
        }
        tj["subgroup"] = {{"indices", *opt.subgroup}, {"order", probe.order(gens)}};
      } else {
        tj["group"] = probe.order(rho);
        std::vector<std::uint64_t> brute;
        for (std::size_t i = 0; i + 1 < rho.size(); ++i) brute.push_back(permutation_order(rho[i] * rho[i + 1]));
        tj["schlafli"] = schlafli_entry(cgroup::schlafli(in.regular[k]).entries, brute, probe.consistent);
        json ints = json::array();
        int n = static_cast<int>(rho.size());
        for (int len = 2; len <= n; ++len)
          for (int lo = 0; lo + len <= n; ++lo) {
            int hi = lo + len - 1;
            auto a = slice(rho, lo, hi), b = slice(rho, lo + 1, hi + 1), c = slice(rho, lo + 1, hi);
            std::string label = "<r" + std::to_string(lo) + "..r" + std::to_string(hi - 1) + "> ^ <r" +
                                std::to_string(lo + 1) + "..r" + std::to_string(hi) + ">";
            bool chain = cgroup::check_intersection(cache, a, b, c, label).passed();
            ints.push_back(probe.intersection(a, b, c, label, chain));
          }
        tj["intersections"] = ints;
        tj["random_words"] = probe.samples(rho);
      }
      tuples.push_back(tj);
    }
    out["tuples"] = tuples;
  }
  out["consistent"] = probe.consistent;
  return out;
}

}  // namespace psl3::cli
