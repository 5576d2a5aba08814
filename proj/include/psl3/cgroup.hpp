#pragma once

/// @file cgroup.hpp
/// Polytope axioms at the group level.
///
/// Chiral (rotation) tuples are 1-based sigma_1..sigma_{r-1}; regular tuples
/// are 0-based rho_0..rho_{r-1}. Intersection properties are decided through
/// the standard recursive reductions: for regular tuples, IP of
/// (rho_0..rho_{r-1}) follows from IP of both rank-(r-1) subtuples plus
/// <rho_0..rho_{r-2}> ^ <rho_1..rho_{r-1}> = <rho_1..rho_{r-2}>; for rotation
/// tuples, IP+ of (s_1..s_{r-1}) follows from IP+ of (s_1..s_{r-2}) plus
/// <s_1..s_{r-2}> ^ <s_i..s_{r-1}> = <s_i..s_{r-2}> for every i. Every set
/// equality is checked by double inclusion on enumerated subgroups.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psl3/grp.hpp"

namespace psl3::cgroup {

using grp::GroupHandle;
using pg::Field;
using pg::ProjMatrix;
using json = nlohmann::json;

/// Rotation-group generators sigma_1..sigma_{r-1} with all products
/// tau_{i,j} = sigma_i ... sigma_j cached.
class ChiralTuple {
 public:
  explicit ChiralTuple(std::vector<ProjMatrix> sigmas);

  Field const& field() const { return sigmas_.front().field(); }
  int rank() const { return static_cast<int>(sigmas_.size()) + 1; }
  std::vector<ProjMatrix> const& sigmas() const { return sigmas_; }
  /// sigma_i, 1-based.
  ProjMatrix const& sigma(int i) const { return sigmas_.at(i - 1); }
  /// tau_{i,j} for 1 <= i <= j <= r-1.
  ProjMatrix const& tau(int i, int j) const;

  /// (sigma_{r-1}^-1, ..., sigma_1^-1).
  ChiralTuple dual() const;
  ChiralTuple conjugated(ProjMatrix const& g) const;

 private:
  std::vector<ProjMatrix> sigmas_;
  std::vector<std::vector<ProjMatrix>> tau_;  // tau_[i-1][j-i]
};

/// Involutions rho_0..rho_{r-1}.
struct RegularTuple {
  std::vector<ProjMatrix> rhos;
  int rank() const { return static_cast<int>(rhos.size()); }
  Field const& field() const { return rhos.front().field(); }
  RegularTuple dual() const;
};

enum class Status { pass, fail, skipped };
std::string to_string(Status s);
Status status_from_string(std::string const& s);

struct Verdict {
  Status status = Status::skipped;
  std::string detail;
  json witness;  // null on pass

  bool passed() const { return status == Status::pass; }
  static Verdict pass(std::string detail = {}) { return {Status::pass, std::move(detail), nullptr}; }
  static Verdict fail(std::string detail, json witness) {
    return {Status::fail, std::move(detail), std::move(witness)};
  }
};

/// Subgroups generated by subsets of one field's matrices, memoized by
/// generator list so repeated parabolic subgroups are built once.
class SubgroupCache {
 public:
  explicit SubgroupCache(Field const& f, std::size_t cap = grp::kDefaultCap) : f_(&f), cap_(cap) {}
  GroupHandle const& get(std::vector<ProjMatrix> const& gens);
  std::size_t cap() const { return cap_; }
  Field const& field() const { return *f_; }

 private:
  Field const* f_;
  std::size_t cap_;
  std::map<std::vector<pg::Entries>, GroupHandle> cache_;
};

/// Checks <a> ^ <b> = <c> by double inclusion. The shortcut when a's
/// generators all appear among b's (so a <= b and the intersection is a)
/// avoids enumerating the whole group.
Verdict check_intersection(SubgroupCache& cache, std::vector<ProjMatrix> const& a,
                           std::vector<ProjMatrix> const& b, std::vector<ProjMatrix> const& c,
                           std::string const& label);

/// tau_{i,j} involutions for all i < j, and no tau_{i,j} trivial.
Verdict check_string_chiral(ChiralTuple const& t);
Verdict check_ip_plus(ChiralTuple const& t, SubgroupCache& cache);

/// Involutions, and rho_i rho_j = rho_j rho_i whenever |i-j| > 1.
Verdict check_string_regular(RegularTuple const& t);
Verdict check_ip_regular(RegularTuple const& t, SubgroupCache& cache);

struct Schlafli {
  std::vector<std::uint64_t> entries;
  bool degenerate = false;  // some entry equals 2
};
Schlafli schlafli(ChiralTuple const& t);
Schlafli schlafli(RegularTuple const& t);

/// sigma_i sigma_j = sigma_j sigma_i for |i-j| > 2; failure lists the pair.
Verdict check_far_commutation(ChiralTuple const& t);

struct Facet {
  RegularTuple tuple;                   // (tau_{1,2}, ..., tau_{1,r-1})
  std::vector<ProjMatrix> rotation_gens;  // sigma_3 .. sigma_{r-1}
};
Facet facet_extract(ChiralTuple const& t);

/// Regular axioms on the facet plus index 2 of the rotation subgroup
/// (the facet is directly regular).
Verdict check_facet(ChiralTuple const& t, SubgroupCache& cache);

struct IntertwinerResult {
  std::vector<ProjMatrix> solutions;  // canonical, deduplicated, sorted
  bool truncated = false;             // enumeration limit hit
};

/// All g in PGL(3,q) with g A_i = lambda_i B_i g for nonzero scalars lambda_i,
/// i.e. g A_i g^-1 = B_i projectively for every pair.
IntertwinerResult solve_intertwiners(std::vector<std::pair<ProjMatrix, ProjMatrix>> const& pairs,
                                     std::size_t limit = 1'000'000);

enum class Chirality { chiral, regular, undecided };
std::string to_string(Chirality c);

struct AutomorphismWitness {
  ProjMatrix conjugator;
  int frobenius_power = 0;
  bool duality = false;
};

struct ChiralityResult {
  Chirality verdict = Chirality::undecided;
  std::optional<AutomorphismWitness> witness;
  std::vector<std::string> branches;  // searched (k, duality) branches, in order
};

/// M -> g F(M) g^-1 where F is x -> x^(p^k) entrywise, followed by inverse
/// transpose when `duality` is set.
ProjMatrix apply_automorphism(ProjMatrix const& m, AutomorphismWitness const& w);

/// True iff w sends sigma_1 to its inverse and fixes every tau_{1,i}.
bool validates(ChiralTuple const& t, AutomorphismWitness const& w);

/// Searches Aut(PSL(3,q)) = PGL(3,q) x field automorphisms x duality for an
/// automorphism inverting sigma_1 and fixing tau_{1,2}..tau_{1,r-1}.
/// Field-automorphism branches (no duality) are searched first.
ChiralityResult chirality_check(ChiralTuple const& t, bool search_duality = true);

}  // namespace psl3::cgroup
