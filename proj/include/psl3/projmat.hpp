#pragma once

/// @file projmat.hpp
/// PGL(3,q): 3x3 invertible matrices modulo scalars, acting on the points and
/// lines of PG(2,q).
///
/// A ProjMatrix is always stored in canonical form: the first nonzero entry in
/// row-major order is 1. Two matrices are projectively equal iff their
/// canonical entries are bytewise equal, which is what hashing and equality
/// use.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psl3/gf.hpp"

namespace psl3::pg {

using gf::Code;
using gf::Element;
using gf::Field;

using Entries = std::array<std::uint16_t, 9>;

class SingularMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ProjMatrix {
 public:
  /// Canonical representative of raw (row-major codes); throws SingularMatrix.
  static ProjMatrix canonicalize(Field const& f, std::array<Code, 9> const& raw);
  static ProjMatrix canonicalize(std::array<Element, 9> const& raw);
  /// Integer entries mapped through Z -> GF(p).
  static ProjMatrix from_ints(Field const& f, std::array<long long, 9> const& raw);
  static ProjMatrix identity(Field const& f);
  /// Rebuild from canonical entries without re-checking (used by element sets).
  static ProjMatrix from_canonical(Field const& f, Entries const& e) { return ProjMatrix(f, e); }

  Field const& field() const { return *f_; }
  Code at(int r, int c) const { return e_[3 * r + c]; }
  Element entry(int r, int c) const { return Element(*f_, at(r, c)); }
  Entries const& entries() const { return e_; }
  bool is_identity() const;

  ProjMatrix operator*(ProjMatrix const& o) const;
  bool operator==(ProjMatrix const& o) const { return f_ == o.f_ && e_ == o.e_; }
  bool operator!=(ProjMatrix const& o) const { return !(*this == o); }
  /// Bytewise order on canonical entries.
  bool operator<(ProjMatrix const& o) const { return e_ < o.e_; }

 private:
  ProjMatrix(Field const& f, Entries const& e) : f_(&f), e_(e) {}
  Field const* f_;
  Entries e_;
};

std::size_t hash_entries(Entries const& e);

ProjMatrix inverse(ProjMatrix const& m);
/// Determinant of the canonical representative.
Element det(ProjMatrix const& m);
ProjMatrix power(ProjMatrix const& m, long long k);
/// g * m * g^-1
ProjMatrix conjugate(ProjMatrix const& m, ProjMatrix const& g);
ProjMatrix transpose(ProjMatrix const& m);
bool commute(ProjMatrix const& a, ProjMatrix const& b);

/// True iff some scalar multiple has determinant 1.
bool in_psl(ProjMatrix const& m);
/// Least k >= 1 with m^k = 1. Throws std::logic_error past q^2+q+1.
std::uint64_t order(ProjMatrix const& m);
/// Inverse transpose.
ProjMatrix dual(ProjMatrix const& m);
/// Entrywise x -> x^(p^k).
ProjMatrix frobenius_map(ProjMatrix const& m, long long k);

/// Normalized homogeneous triple (first nonzero coordinate 1).
struct ProjPoint {
  std::array<Code, 3> c{};
  bool operator==(ProjPoint const& o) const { return c == o.c; }
  bool operator<(ProjPoint const& o) const { return c < o.c; }
};
/// Line a*X + b*Y + c*Z = 0 stored as the normalized triple (a, b, c).
struct ProjLine {
  std::array<Code, 3> c{};
  bool operator==(ProjLine const& o) const { return c == o.c; }
  bool operator<(ProjLine const& o) const { return c < o.c; }
};

ProjPoint make_point(Field const& f, std::array<Code, 3> const& raw);
ProjPoint make_point(Field const& f, std::array<long long, 3> const& raw);
ProjLine make_line(Field const& f, std::array<Code, 3> const& raw);
ProjLine make_line(Field const& f, std::array<long long, 3> const& raw);
bool incident(Field const& f, ProjPoint const& p, ProjLine const& l);

ProjPoint apply_point(ProjMatrix const& m, ProjPoint const& p);
ProjLine apply_line(ProjMatrix const& m, ProjLine const& l);

/// All q^2+q+1 points in the fixed enumeration order used by the point action:
/// (0:0:1), (0:1:b) for b ascending, then (1:a:b) in code order.
std::vector<ProjPoint> all_points(Field const& f);
std::uint32_t point_index(Field const& f, ProjPoint const& p);
std::uint32_t point_count(Field const& f);

std::vector<ProjPoint> fixed_points(ProjMatrix const& m);
std::vector<ProjLine> fixed_lines(ProjMatrix const& m);

struct CenterAxis {
  ProjPoint center;
  ProjLine axis;
};
/// Center and axis of an involution; throws std::invalid_argument otherwise.
CenterAxis center_axis(ProjMatrix const& m);

/// Quadratic form sum_{i<=j} c_ij x_i x_j, coefficients ordered
/// (x1^2, x1x2, x1x3, x2^2, x2x3, x3^2). Valid in every characteristic.
class QuadraticForm {
 public:
  QuadraticForm(Field const& f, std::array<Code, 6> const& coeffs);
  /// Symmetric Gram matrix A, Q(v) = v^T A v. Odd characteristic only.
  static QuadraticForm from_gram(Field const& f, std::array<Code, 9> const& gram);

  Field const& field() const { return *f_; }
  std::array<Code, 6> const& coeffs() const { return c_; }
  Code evaluate(std::array<Code, 3> const& v) const;
  bool nondegenerate() const;
  /// Coefficients of v -> Q(M v).
  QuadraticForm pullback(ProjMatrix const& m) const;

 private:
  Field const* f_;
  std::array<Code, 6> c_;
};

/// True iff Q(M v) = lambda Q(v) for some nonzero lambda. Throws
/// std::invalid_argument for a degenerate form.
bool preserves_form(ProjMatrix const& m, QuadraticForm const& q);

std::string to_string(ProjMatrix const& m);
std::string to_string(Field const& f, ProjPoint const& p);
std::string to_string(Field const& f, ProjLine const& l);

}  // namespace psl3::pg

template <>
struct std::hash<psl3::pg::ProjMatrix> {
  std::size_t operator()(psl3::pg::ProjMatrix const& m) const noexcept {
    return psl3::pg::hash_entries(m.entries());
  }
};
