#pragma once

/// @file grp.hpp
/// Subgroups of PGL(3,q) given by generators: closure enumeration,
/// Schreier-Sims orders over the point action on PG(2,q), membership and
/// intersection.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "psl3/projmat.hpp"
#include "psl3/schreier_sims.hpp"

namespace psl3::grp {

using pg::Entries;
using pg::Field;
using pg::ProjMatrix;

inline constexpr std::size_t kDefaultCap = 20'000'000;

/// |PGL(3,q)| = q^3 (q^3-1)(q^2-1).
std::uint64_t pgl3_order(std::uint64_t q);
/// |PSL(3,q)| = |PGL(3,q)| / gcd(3, q-1).
std::uint64_t psl3_order(std::uint64_t q);

/// Insertion-ordered hash set of canonical matrices over one field.
class ElementSet {
 public:
  explicit ElementSet(Field const& f) : f_(&f) { slots_.assign(1024, 0); }

  Field const& field() const { return *f_; }
  std::size_t size() const { return elems_.size(); }
  bool insert(ProjMatrix const& m) { return insert(m.entries()); }
  bool insert(Entries const& e);
  bool contains(ProjMatrix const& m) const { return contains(m.entries()); }
  bool contains(Entries const& e) const;
  ProjMatrix at(std::size_t i) const { return ProjMatrix::from_canonical(*f_, elems_[i]); }
  std::vector<Entries> const& entries() const { return elems_; }
  std::vector<ProjMatrix> to_vector() const;
  bool operator==(ElementSet const& o) const;

 private:
  void grow();
  Field const* f_;
  std::vector<Entries> elems_;
  std::vector<std::uint32_t> slots_;  // index + 1 into elems_, 0 = empty
};

/// Breadth-first closure of <generators>. Returns nullopt (never a truncated
/// set) when the group has more than `cap` elements.
std::optional<ElementSet> closure(Field const& f, std::vector<ProjMatrix> const& generators,
                                  std::size_t cap = kDefaultCap);

/// Permutation of point indices; perm[x] is the image of point x.
using Perm = std::vector<std::uint32_t>;

/// The action of PGL(3,q) on the points of PG(2,q), in all_points() order.
class PermAction {
 public:
  explicit PermAction(Field const& f);
  Field const& field() const { return *f_; }
  std::vector<pg::ProjPoint> const& points() const { return points_; }
  Perm perm_of(ProjMatrix const& m) const;

  // Action interface for StabilizerChain<Perm, PermAction>.
  Perm identity() const;
  Perm mul(Perm const& a, Perm const& b) const;
  Perm inv(Perm const& a) const;
  std::uint32_t image(Perm const& a, std::uint32_t pt) const { return a[pt]; }
  std::uint32_t degree() const { return static_cast<std::uint32_t>(points_.size()); }
  bool is_identity(Perm const& a) const;

 private:
  Field const* f_;
  std::vector<pg::ProjPoint> points_;
};

/// The same action with matrices as group elements: sifting stays in matrix
/// form and only the base points are ever moved.
class MatrixAction {
 public:
  explicit MatrixAction(Field const& f) : f_(&f), degree_(pg::point_count(f)) {}
  ProjMatrix identity() const { return ProjMatrix::identity(*f_); }
  ProjMatrix mul(ProjMatrix const& a, ProjMatrix const& b) const { return a * b; }
  ProjMatrix inv(ProjMatrix const& a) const { return pg::inverse(a); }
  std::uint32_t image(ProjMatrix const& a, std::uint32_t pt) const;
  std::uint32_t degree() const { return degree_; }
  bool is_identity(ProjMatrix const& a) const { return a.is_identity(); }

 private:
  Field const* f_;
  std::uint32_t degree_;
};

using MatrixChain = StabilizerChain<ProjMatrix, MatrixAction>;
using PermChain = StabilizerChain<Perm, PermAction>;

std::uint64_t schreier_sims_order(Field const& f, std::vector<ProjMatrix> const& generators);

/// A generated subgroup with lazily computed element set and stabilizer
/// chain. Copies share the caches; population is guarded by a mutex.
class GroupHandle {
 public:
  GroupHandle(Field const& f, std::vector<ProjMatrix> generators, std::size_t cap = kDefaultCap);

  Field const& field() const { return *state_->field; }
  std::vector<ProjMatrix> const& generators() const { return state_->generators; }
  std::size_t cap() const { return state_->cap; }

  /// Exact group order from the stabilizer chain.
  std::uint64_t order() const;
  MatrixChain const& chain() const;
  /// Enumerated elements, or nullptr when the order exceeds the cap.
  std::shared_ptr<ElementSet const> elements() const;
  bool enumerable() const { return order() <= cap(); }
  bool contains(ProjMatrix const& m) const;

 private:
  struct State {
    Field const* field;
    std::vector<ProjMatrix> generators;
    std::size_t cap;
    std::mutex mu;
    std::unique_ptr<MatrixChain> chain;
    std::shared_ptr<ElementSet const> elements;
    bool enumerated = false;
  };
  std::shared_ptr<State> state_;
};

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact intersection: enumerate the smaller group and filter by membership
/// in the other. Throws EnumerationError if neither is enumerable.
ElementSet intersect(GroupHandle const& a, GroupHandle const& b);

/// True iff the order equals |PSL(3,q)|. Throws std::invalid_argument when a
/// generator lies outside PSL(3,q).
bool equals_psl3(GroupHandle const& h);

/// Smallest subfield of f containing all the given elements.
Field const& generated_subfield(Field const& f, std::vector<pg::Code> const& elems);

}  // namespace psl3::grp
