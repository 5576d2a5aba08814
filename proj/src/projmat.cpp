#include "psl3/projmat.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "psl3/linalg.hpp"

namespace psl3::pg {

namespace {

using Raw = std::array<Code, 9>;

Raw raw_of(ProjMatrix const& m) {
  Raw r;
  for (int i = 0; i < 9; ++i) r[i] = m.entries()[i];
  return r;
}

Raw raw_mul(Field const& f, Raw const& a, Raw const& b) {
  Raw r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Code s = f.mul(a[3 * i], b[j]);
      s = f.add(s, f.mul(a[3 * i + 1], b[3 + j]));
      s = f.add(s, f.mul(a[3 * i + 2], b[6 + j]));
      r[3 * i + j] = s;
    }
  }
  return r;
}

Code raw_det(Field const& f, Raw const& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(a[3 * r0 + c0], a[3 * r1 + c1]), f.mul(a[3 * r0 + c1], a[3 * r1 + c0]));
  };
  Code d = f.mul(a[0], minor(1, 2, 1, 2));
  d = f.sub(d, f.mul(a[1], minor(1, 2, 0, 2)));
  d = f.add(d, f.mul(a[2], minor(1, 2, 0, 1)));
  return d;
}

// Adjugate: a * adj(a) = det(a) * I.
Raw raw_adj(Field const& f, Raw const& a) {
  auto cof = [&](int r, int c) {
    int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return f.sub(f.mul(a[3 * r0 + c0], a[3 * r1 + c1]), f.mul(a[3 * r0 + c1], a[3 * r1 + c0]));
  };
  Raw adj;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) adj[3 * c + r] = cof(r, c);
  return adj;
}

Entries scale_to_canonical(Field const& f, Raw const& raw) {
  int lead = 0;
  while (lead < 9 && raw[lead] == 0) ++lead;
  Code s = f.inv(raw[lead]);
  Entries e;
  for (int i = 0; i < 9; ++i) e[i] = static_cast<std::uint16_t>(f.mul(raw[i], s));
  return e;
}

std::array<Code, 3> mat_vec(Field const& f, Raw const& m, std::array<Code, 3> const& v) {
  std::array<Code, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i] = f.add(f.add(f.mul(m[3 * i], v[0]), f.mul(m[3 * i + 1], v[1])), f.mul(m[3 * i + 2], v[2]));
  }
  return r;
}

std::array<Code, 3> normalize3(Field const& f, std::array<Code, 3> v) {
  int lead = 0;
  while (lead < 3 && v[lead] == 0) ++lead;
  if (lead == 3) throw std::invalid_argument("zero homogeneous triple");
  Code s = f.inv(v[lead]);
  for (auto& x : v) x = f.mul(x, s);
  return v;
}

// Eigenspaces of a raw matrix, one basis per eigenvalue in GF(q)*.
std::vector<std::pair<Code, std::vector<linalg::Row>>> eigenspaces(Field const& f, Raw const& m) {
  std::vector<std::pair<Code, std::vector<linalg::Row>>> out;
  for (Code lambda = 1; lambda < f.q(); ++lambda) {
    std::vector<linalg::Row> rows(3, linalg::Row(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rows[i][j] = i == j ? f.sub(m[3 * i + j], lambda) : m[3 * i + j];
    auto ns = linalg::nullspace(f, rows, 3);
    if (!ns.empty()) out.emplace_back(lambda, std::move(ns));
  }
  return out;
}

template <class T>
std::vector<T> fixed_of(Field const& f, Raw const& m) {
  std::vector<T> out;
  for (auto const& [lambda, basis] : eigenspaces(f, m)) {
    for (auto const& v : linalg::projective_points(f, basis)) out.push_back(T{{v[0], v[1], v[2]}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string triple_string(Field const& f, std::array<Code, 3> const& c) {
  std::ostringstream os;
  os << '(' << gf::to_string(f, c[0]) << ',' << gf::to_string(f, c[1]) << ',' << gf::to_string(f, c[2])
     << ')';
  return os.str();
}

}  // namespace

std::size_t hash_entries(Entries const& e) {
  std::uint64_t a, b;
  std::memcpy(&a, e.data(), 8);
  std::memcpy(&b, e.data() + 4, 8);
  std::uint64_t h = a * 0x9E3779B97F4A7C15ULL;
  h ^= (b + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
  h ^= std::uint64_t(e[8]) << 17;
  h ^= h >> 31;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

ProjMatrix ProjMatrix::canonicalize(Field const& f, std::array<Code, 9> const& raw) {
  if (f.q() > 65536) throw std::invalid_argument("matrices are supported for q <= 65536");
  if (raw_det(f, raw) == 0) throw SingularMatrix("singular matrix has no projective class");
  return ProjMatrix(f, scale_to_canonical(f, raw));
}

ProjMatrix ProjMatrix::canonicalize(std::array<Element, 9> const& raw) {
  Field const& f = raw[0].field();
  Raw r;
  for (int i = 0; i < 9; ++i) {
    if (!(raw[i].field() == f)) throw gf::FieldError("field mismatch");
    r[i] = raw[i].code();
  }
  return canonicalize(f, r);
}

ProjMatrix ProjMatrix::from_ints(Field const& f, std::array<long long, 9> const& raw) {
  Raw r;
  for (int i = 0; i < 9; ++i) r[i] = f.from_int(raw[i]);
  return canonicalize(f, r);
}

ProjMatrix ProjMatrix::identity(Field const& f) {
  return ProjMatrix(f, Entries{1, 0, 0, 0, 1, 0, 0, 0, 1});
}

bool ProjMatrix::is_identity() const { return e_ == Entries{1, 0, 0, 0, 1, 0, 0, 0, 1}; }

ProjMatrix ProjMatrix::operator*(ProjMatrix const& o) const {
  if (f_ != o.f_) throw gf::FieldError("field mismatch");
  return ProjMatrix(*f_, scale_to_canonical(*f_, raw_mul(*f_, raw_of(*this), raw_of(o))));
}

ProjMatrix inverse(ProjMatrix const& m) {
  Field const& f = m.field();
  return ProjMatrix::from_canonical(f, scale_to_canonical(f, raw_adj(f, raw_of(m))));
}

Element det(ProjMatrix const& m) { return Element(m.field(), raw_det(m.field(), raw_of(m))); }

ProjMatrix power(ProjMatrix const& m, long long k) {
  ProjMatrix base = k < 0 ? inverse(m) : m;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  ProjMatrix r = ProjMatrix::identity(m.field());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

ProjMatrix conjugate(ProjMatrix const& m, ProjMatrix const& g) { return g * m * inverse(g); }

ProjMatrix transpose(ProjMatrix const& m) {
  Raw r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[3 * i + j] = m.at(j, i);
  return ProjMatrix::canonicalize(m.field(), r);
}

bool commute(ProjMatrix const& a, ProjMatrix const& b) { return a * b == b * a; }

bool in_psl(ProjMatrix const& m) { return gf::is_cube(det(m)); }

std::uint64_t order(ProjMatrix const& m) {
  std::uint64_t q = m.field().q();
  std::uint64_t cap = q * q + q + 1;
  ProjMatrix cur = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (cur.is_identity()) return k;
    cur = cur * m;
  }
  throw std::logic_error("element order exceeds q^2+q+1; arithmetic is inconsistent");
}

ProjMatrix dual(ProjMatrix const& m) { return transpose(inverse(m)); }

ProjMatrix frobenius_map(ProjMatrix const& m, long long k) {
  Field const& f = m.field();
  Raw r;
  for (int i = 0; i < 9; ++i) r[i] = gf::frobenius(Element(f, m.entries()[i]), k).code();
  return ProjMatrix::canonicalize(f, r);
}

ProjPoint make_point(Field const& f, std::array<Code, 3> const& raw) {
  return ProjPoint{normalize3(f, raw)};
}

ProjPoint make_point(Field const& f, std::array<long long, 3> const& raw) {
  return make_point(f, std::array<Code, 3>{f.from_int(raw[0]), f.from_int(raw[1]), f.from_int(raw[2])});
}

ProjLine make_line(Field const& f, std::array<Code, 3> const& raw) { return ProjLine{normalize3(f, raw)}; }

ProjLine make_line(Field const& f, std::array<long long, 3> const& raw) {
  return make_line(f, std::array<Code, 3>{f.from_int(raw[0]), f.from_int(raw[1]), f.from_int(raw[2])});
}

bool incident(Field const& f, ProjPoint const& p, ProjLine const& l) {
  Code s = f.add(f.add(f.mul(p.c[0], l.c[0]), f.mul(p.c[1], l.c[1])), f.mul(p.c[2], l.c[2]));
  return s == 0;
}

ProjPoint apply_point(ProjMatrix const& m, ProjPoint const& p) {
  return ProjPoint{normalize3(m.field(), mat_vec(m.field(), raw_of(m), p.c))};
}

ProjLine apply_line(ProjMatrix const& m, ProjLine const& l) {
  return ProjLine{normalize3(m.field(), mat_vec(m.field(), raw_of(dual(m)), l.c))};
}

std::uint32_t point_count(Field const& f) { return f.q() * f.q() + f.q() + 1; }

std::vector<ProjPoint> all_points(Field const& f) {
  std::vector<ProjPoint> pts;
  pts.reserve(point_count(f));
  pts.push_back(ProjPoint{{0, 0, 1}});
  for (Code b = 0; b < f.q(); ++b) pts.push_back(ProjPoint{{0, 1, b}});
  for (Code a = 0; a < f.q(); ++a)
    for (Code b = 0; b < f.q(); ++b) pts.push_back(ProjPoint{{1, a, b}});
  return pts;
}

std::uint32_t point_index(Field const& f, ProjPoint const& p) {
  if (p.c[0] == 1) return 1 + f.q() + p.c[1] * f.q() + p.c[2];
  if (p.c[1] == 1) return 1 + p.c[2];
  return 0;
}

std::vector<ProjPoint> fixed_points(ProjMatrix const& m) {
  return fixed_of<ProjPoint>(m.field(), raw_of(m));
}

std::vector<ProjLine> fixed_lines(ProjMatrix const& m) {
  return fixed_of<ProjLine>(m.field(), raw_of(dual(m)));
}

CenterAxis center_axis(ProjMatrix const& m) {
  if (order(m) != 2) throw std::invalid_argument("center_axis requires an involution");
  Field const& f = m.field();
  Raw r = raw_of(m);
  for (auto const& [lambda, basis] : eigenspaces(f, r)) {
    if (basis.size() != 2) continue;
    // Axis: the line through the two basis points.
    auto normal = linalg::nullspace(f, basis, 3);
    ProjLine axis{normalize3(f, {normal[0][0], normal[0][1], normal[0][2]})};
    // Center: the image of m - lambda I, which has rank one.
    Raw d = r;
    for (int i = 0; i < 3; ++i) d[4 * i] = f.sub(d[4 * i], lambda);
    for (int c = 0; c < 3; ++c) {
      std::array<Code, 3> col{d[c], d[3 + c], d[6 + c]};
      if (col[0] || col[1] || col[2]) return CenterAxis{ProjPoint{normalize3(f, col)}, axis};
    }
  }
  throw std::logic_error("involution without a two-dimensional eigenspace");
}

QuadraticForm::QuadraticForm(Field const& f, std::array<Code, 6> const& coeffs) : f_(&f), c_(coeffs) {}

QuadraticForm QuadraticForm::from_gram(Field const& f, std::array<Code, 9> const& gram) {
  if (f.p() == 2) throw std::invalid_argument("Gram matrices do not determine forms in characteristic 2");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (gram[3 * i + j] != gram[3 * j + i]) throw std::invalid_argument("Gram matrix is not symmetric");
  Code two = f.from_int(2);
  return QuadraticForm(f, {gram[0], f.mul(two, gram[1]), f.mul(two, gram[2]), gram[4],
                           f.mul(two, gram[5]), gram[8]});
}

namespace {
constexpr int kIdx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
}

Code QuadraticForm::evaluate(std::array<Code, 3> const& v) const {
  Field const& f = *f_;
  Code s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) s = f.add(s, f.mul(c_[kIdx[i][j]], f.mul(v[i], v[j])));
  return s;
}

bool QuadraticForm::nondegenerate() const {
  Field const& f = *f_;
  // Polar form B(x,y) = Q(x+y) - Q(x) - Q(y).
  std::vector<linalg::Row> polar(3, linalg::Row(3, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      polar[i][j] = i == j ? f.add(c_[kIdx[i][i]], c_[kIdx[i][i]]) : c_[kIdx[i][j]];
  auto radical = linalg::nullspace(f, polar, 3);
  if (radical.empty()) return true;
  if (radical.size() > 1) return false;
  return evaluate({radical[0][0], radical[0][1], radical[0][2]}) != 0;
}

QuadraticForm QuadraticForm::pullback(ProjMatrix const& m) const {
  Field const& f = *f_;
  // T[k][l] = sum_{i<=j} c_ij M_ik M_jl; Q(Mv) = sum_{k,l} T[k][l] v_k v_l.
  Code t[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Code c = c_[kIdx[i][j]];
      if (!c) continue;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) t[k][l] = f.add(t[k][l], f.mul(c, f.mul(m.at(i, k), m.at(j, l))));
    }
  std::array<Code, 6> d{};
  for (int k = 0; k < 3; ++k)
    for (int l = k; l < 3; ++l) d[kIdx[k][l]] = k == l ? t[k][k] : f.add(t[k][l], t[l][k]);
  return QuadraticForm(f, d);
}

bool preserves_form(ProjMatrix const& m, QuadraticForm const& q) {
  if (!q.nondegenerate()) throw std::invalid_argument("degenerate quadratic form");
  Field const& f = q.field();
  auto const& c = q.coeffs();
  auto const d = q.pullback(m).coeffs();
  int lead = 0;
  while (c[lead] == 0) ++lead;
  Code lambda = f.div(d[lead], c[lead]);
  if (lambda == 0) return false;
  for (int i = 0; i < 6; ++i)
    if (d[i] != f.mul(lambda, c[i])) return false;
  return true;
}

std::string to_string(ProjMatrix const& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 9; ++i) os << (i ? "," : "") << gf::to_string(m.field(), m.entries()[i]);
  os << ']';
  return os.str();
}

std::string to_string(Field const& f, ProjPoint const& p) { return triple_string(f, p.c); }
std::string to_string(Field const& f, ProjLine const& l) { return triple_string(f, l.c); }

}  // namespace psl3::pg
