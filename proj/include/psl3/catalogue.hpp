#pragma once

/// @file catalogue.hpp
/// Builders for the explicit matrix families: the rank-4 and rank-5 chiral
/// constructions for PSL(3,q), the dihedral, rank-3 and rank-4 string
/// C-groups inside PSL(3,q), and the rank-6 obstruction witnesses.
///
/// Families are named by stable identifiers (THM1, R3_ODD_CASE6, ...) and
/// take their parameters from a FamilyParams record; field elements are given
/// in the serialized element syntax (decimal code or "[c0,c1,..]").

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psl3/cgroup.hpp"

namespace psl3::catalogue {

using cgroup::ChiralTuple;
using cgroup::RegularTuple;
using gf::Element;
using gf::Field;
using pg::ProjMatrix;
using json = nlohmann::json;

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FamilyId {
  THM1,
  THM2,
  DIH_A,
  DIH_B,
  DIH_1,
  DIH_2,
  DIH_3,
  DIH_4,
  R3_ODD_CASE1,
  R3_ODD_CASE2,
  R3_ODD_CASE2_DUAL,
  R3_ODD_CASE3,
  R3_ODD_CASE4,
  R3_ODD_CASE5,
  R3_ODD_CASE6,
  R3_ODD_CASE7,
  R3_ODD_CASE8,
  R3_CONIC,
  R3_EVEN,
  R4_ODD,
  R4_EVEN,
  EVEN_TRIANGULAR,
  RANK6_WITNESS_EVEN,
  RANK6_WITNESS_ODD,
};

std::string to_string(FamilyId id);
/// Throws ParameterError for an unknown name.
FamilyId family_from_string(std::string const& name);
std::vector<FamilyId> all_families();

struct FamilyParams {
  std::uint32_t q = 0;
  std::optional<std::string> x;   // THM1 primitive element, DIH_1 / DIH_4 parameter
  int k = 1;                      // THM2: +1 or -1
  int i = 1;                      // THM2: power of omega, 1 or 2
  std::optional<std::string> a;   // family parameters a, b, c, a'
  std::optional<std::string> b;
  std::optional<std::string> c;
  std::optional<std::string> a2;
  std::optional<std::string> sign;  // DIH_3: "+" or "-"
  std::string variant;            // R4_ODD case "1".."4"; EVEN_TRIANGULAR "wreath" / "c2xd8"
  int rank = 3;                   // EVEN_TRIANGULAR rank 1..3
};

/// Paper-stated expectations for one instance.
struct Rank6Witness {
  std::string parity;
  std::map<std::string, ProjMatrix> elements;  // "tau12", ..., "sigma1", "sigma5"
};

struct Expectation {
  std::string group_name;                         // structure label, may be empty
  std::optional<std::uint64_t> order;             // expected group order
  std::optional<std::vector<std::uint64_t>> schlafli;
  std::map<std::string, std::string> checks;      // check name -> verdict
};

/// A built family instance.
struct Instance {
  FamilyId family;
  Field const* field = nullptr;
  json params = json::object();  // resolved parameters, serialized
  std::optional<ChiralTuple> chiral;
  /// Regular families: candidate tuples in scan order (one unless the family
  /// leaves a choice open, as for the rank-3 odd cases).
  std::vector<RegularTuple> regular;
  std::vector<std::string> candidate_labels;
  std::optional<Rank6Witness> witness;
  Expectation expect;
};

/// Builds any family; throws ParameterError on violated preconditions.
Instance build(FamilyId id, FamilyParams const& params);

// Individual builders.

ChiralTuple thm1_tuple(Field const& f, Element x);
/// D = [(x - x^-1)^-1, 0, 0; 0, 1, 1; 0, 1, x].
ProjMatrix thm1_duality(Field const& f, Element x);
/// M -> D M^-T D^-1.
ProjMatrix thm1_phi(ProjMatrix const& m, ProjMatrix const& d);

ChiralTuple thm2_tuple(Field const& f, int k, int i);
/// [w, w^2, 1; w^2, w, 1; 1, 1, 1].
ProjMatrix thm2_dual_conjugator(Field const& f);

/// phi_1 = diag(1,-1,-1), phi_2 = diag(-1,1,-1), phi_3 = diag(-1,-1,1).
ProjMatrix phi(Field const& f, int which);
/// The nine rho_2 matrices of the rank-3 odd analysis, 1-based; cases 6 and
/// 9 take the parameter a.
ProjMatrix r3_odd_rho2(Field const& f, int matrix_case, Element a);
/// M(x,y) = [1,0,0; 0,1,0; x,y,1].
ProjMatrix m_xy(Element x, Element y);

/// rho_2 of the conic family; requires a+1, a+b, b+1 nonzero.
ProjMatrix r3_conic_rho2(Element a, Element b);
/// Q = x1^2/(a+1) - x2^2/(a+b) + x3^2/(b+1).
pg::QuadraticForm r3_conic_form(Element a, Element b);

/// Rank-4 odd tuple for situation 1..4 with parameters a, a' (situations
/// 2..4 fix some of them).
RegularTuple r4_odd_tuple(Field const& f, int situation, Element a, Element a2);
/// Q = (1-a)(1+a')x1^2 + (1+a)(1+a')x2^2 + (1+a)(1-a')x3^2.
pg::QuadraticForm r4_odd_form(Element a, Element a2);
RegularTuple r4_even_tuple(Element a, Element b);
RegularTuple r3_even_tuple(Element a, Element b, Element c);
/// U(x,y,z) = [1,x,y; 0,1,z; 0,0,1].
ProjMatrix unitriangular(Element x, Element y, Element z);

Rank6Witness rank6_witness(Field const& f, std::string const& parity, Element a, Element b);

/// Smallest t with t^2 = v, or ParameterError naming the non-residue.
Element require_sqrt(Element v);
/// Smallest x with X^2 - xX + 1 irreducible over the field.
Element default_dih4_parameter(Field const& f);

}  // namespace psl3::catalogue
