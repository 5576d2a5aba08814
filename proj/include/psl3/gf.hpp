#pragma once

/// @file gf.hpp
/// Exact arithmetic in GF(p^n).
///
/// A field is built once per (p, n) and interned for the lifetime of the
/// process, so elements can carry a plain `Field const*`. Elements are coded
/// as integers in [0, q): the code of c0 + c1 X + ... + c_{n-1} X^{n-1} is
/// c0 + c1 p + ... + c_{n-1} p^{n-1}. Code order is the deterministic element
/// order used for "smallest" choices (primitive element, cube root, square
/// root). Multiplication goes through log/antilog tables; addition through a
/// table for small extension fields and digit arithmetic otherwise.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psl3::gf {

using Code = std::uint32_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// GF(p^n) together with its defining modulus (coefficients, constant first).
class Field {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, constant term first, length n + 1. For n == 1 this is the
  /// placeholder X - 0.
  std::vector<std::uint32_t> const& modulus() const { return modulus_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// Image of an integer under Z -> GF(p).
  Code from_int(long long v) const;

  Code add(Code a, Code b) const {
    if (n_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg_[b]); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws FieldError on zero.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  /// a^e for any integer e; negative exponents require a != 0.
  Code pow(Code a, long long e) const;

  /// Discrete log to the base primitive_element(); a != 0.
  std::uint32_t log(Code a) const { return log_[a]; }
  Code exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// Coefficient vector (constant first, length n) of a code.
  std::vector<std::uint32_t> coeffs(Code a) const;
  Code from_coeffs(std::vector<std::uint32_t> const& c) const;

  /// Smallest (in code order) element of multiplicative order q - 1.
  Code primitive_element() const { return primitive_; }

  bool operator==(Field const& o) const { return this == &o; }

 private:
  friend Field const& make_field(std::uint32_t p, std::uint32_t n);
  Field(std::uint32_t p, std::uint32_t n);
  Code add_digits(Code a, Code b) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Code primitive_ = 1;
  std::vector<Code> exp_;           // length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Code> neg_;
  std::vector<Code> add_table_;  // q*q, only for extension fields with q <= 1024
};

bool is_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Interned field for (p, n). Throws FieldError for composite p, n == 0, or
/// p^n above the supported size (10^6).
Field const& make_field(std::uint32_t p, std::uint32_t n);
/// Field of order q (q must be a prime power).
Field const& field_of_order(std::uint32_t q);

/// Field element with value semantics.
class Element {
 public:
  Element() = default;
  Element(Field const& f, Code c) : f_(&f), c_(c) {}
  static Element from_int(Field const& f, long long v) { return {f, f.from_int(v)}; }

  Field const& field() const { return *f_; }
  Code code() const { return c_; }
  bool is_zero() const { return c_ == 0; }
  bool is_one() const { return c_ == 1; }

  Element operator+(Element const& o) const { return {*f_, f_->add(c_, check(o))}; }
  Element operator-(Element const& o) const { return {*f_, f_->sub(c_, check(o))}; }
  Element operator*(Element const& o) const { return {*f_, f_->mul(c_, check(o))}; }
  Element operator/(Element const& o) const { return {*f_, f_->div(c_, check(o))}; }
  Element operator-() const { return {*f_, f_->neg(c_)}; }
  Element& operator+=(Element const& o) { return *this = *this + o; }
  Element& operator-=(Element const& o) { return *this = *this - o; }
  Element& operator*=(Element const& o) { return *this = *this * o; }

  bool operator==(Element const& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator<(Element const& o) const { return c_ < o.c_; }

 private:
  Code check(Element const& o) const {
    if (f_ != o.f_) throw FieldError("field mismatch");
    return o.c_;
  }
  Field const* f_ = nullptr;
  Code c_ = 0;
};

Element inv(Element const& e);
Element pow(Element const& e, long long k);
/// Least m >= 1 with e^m = 1. Throws on zero.
std::uint64_t element_order(Element const& e);
Element primitive_element(Field const& f);
/// True iff e is a cube in GF(q)*. Throws on zero.
bool is_cube(Element const& e);
/// Smallest element of multiplicative order exactly 3, if q = 1 mod 3.
std::optional<Element> primitive_cube_root(Field const& f);
/// Smallest t with t^2 = e, if any.
std::optional<Element> sqrt(Element const& e);
/// e^(p^k); k may be negative.
Element frobenius(Element const& e, long long k);
/// Degree over GF(p) of the smallest subfield containing all of the inputs.
std::uint32_t generated_subfield_degree(Field const& f, std::vector<Code> const& elems);

/// Decimal for prime fields, "[c0,c1,...]" otherwise.
std::string to_string(Field const& f, Code c);
inline std::string to_string(Element const& e) { return to_string(e.field(), e.code()); }
/// Inverse of to_string; also accepts a bare integer code for extension fields.
Code parse_element(Field const& f, std::string const& text);
/// {"p":..,"n":..,"modulus":[..]} as text.
std::string field_string(Field const& f);

}  // namespace psl3::gf
