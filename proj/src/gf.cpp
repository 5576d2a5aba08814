#include "psl3/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace psl3::gf {

namespace {

constexpr std::uint64_t kMaxOrder = 1000000;

using Poly = std::vector<std::uint32_t>;  // constant first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat is plenty.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a monic-or-not nonzero polynomial m.
Poly poly_mod(Poly a, Poly const& m, std::uint32_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(Poly const& a, Poly const& b, Poly const& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly code_to_poly(std::uint64_t c, std::uint32_t p, std::uint32_t n) {
  Poly r(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>(c % p);
    c /= p;
  }
  trim(r);
  return r;
}

std::uint64_t poly_to_code(Poly const& a, std::uint32_t p) {
  std::uint64_t c = 0;
  for (std::size_t i = a.size(); i-- > 0;) c = c * p + a[i];
  return c;
}

bool irreducible(Poly const& f, std::uint32_t p) {
  std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = code_to_poly(low, p, d);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r.push_back(n);
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

Field::Field(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);

  Poly m;
  if (n == 1) {
    m = {0, 1};
  } else {
    std::uint64_t count = q;  // p^n choices for the lower coefficients
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly cand = code_to_poly(low, p, n);
      cand.resize(n + 1, 0);
      cand[n] = 1;
      if (irreducible(cand, p)) {
        m = cand;
        break;
      }
    }
    if (m.empty()) throw FieldError("no irreducible polynomial found");
  }
  modulus_ = m;

  auto mulc = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (n == 1) return a * b % p;
    return poly_to_code(poly_mulmod(code_to_poly(a, p, n), code_to_poly(b, p, n), m, p), p);
  };
  auto powc = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulc(r, a);
      a = mulc(a, a);
      e >>= 1;
    }
    return r;
  };

  // Smallest generator of the multiplicative group.
  if (q == 2) {
    primitive_ = 1;
  } else {
    auto factors = prime_factors(q - 1);
    for (std::uint64_t c = 2; c < q; ++c) {
      bool ok = true;
      for (auto r : factors) {
        if (powc(c, (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = static_cast<Code>(c);
        break;
      }
    }
  }

  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0);
  std::uint64_t cur = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp_[i] = static_cast<Code>(cur);
    exp_[i + q - 1] = static_cast<Code>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mulc(cur, primitive_);
  }

  neg_.assign(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    Poly c = code_to_poly(a, p, n);
    for (auto& x : c) x = (p - x) % p;
    neg_[a] = static_cast<Code>(poly_to_code(c, p));
  }
  if (n > 1 && q <= 1024) {
    add_table_.assign(q * q, 0);
    for (Code a = 0; a < q; ++a)
      for (Code b = 0; b < q; ++b) add_table_[a * q + b] = add_digits(a, b);
  }
}

Code Field::add_digits(Code a, Code b) const {
  Code r = 0, scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    Code d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Code Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

Code Field::inv(Code a) const {
  if (a == 0) throw FieldError("inversion of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Code Field::pow(Code a, long long e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long m = static_cast<long long>(q_) - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % m)) % m;
  if (k < 0) k += m;
  return exp_[k];
}

std::vector<std::uint32_t> Field::coeffs(Code a) const {
  std::vector<std::uint32_t> r(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    r[i] = a % p_;
    a /= p_;
  }
  return r;
}

Code Field::from_coeffs(std::vector<std::uint32_t> const& c) const {
  Code r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i] % p_;
  return r;
}

Field const& make_field(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw FieldError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds the supported size 10^6");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, n}];
  if (!slot) slot.reset(new Field(p, n));
  return *slot;
}

Field const& field_of_order(std::uint32_t q) {
  if (q < 2) throw FieldError("field order must be at least 2");
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    std::uint32_t n = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++n;
    }
    if (r != 1) throw FieldError(std::to_string(q) + " is not a prime power");
    return make_field(p, n);
  }
  throw FieldError("unreachable");
}

Element inv(Element const& e) { return {e.field(), e.field().inv(e.code())}; }

Element pow(Element const& e, long long k) { return {e.field(), e.field().pow(e.code(), k)}; }

std::uint64_t element_order(Element const& e) {
  if (e.is_zero()) throw FieldError("order of zero");
  std::uint64_t m = e.field().q() - 1;
  return m / gcd(e.field().log(e.code()), m);
}

Element primitive_element(Field const& f) { return {f, f.primitive_element()}; }

bool is_cube(Element const& e) {
  if (e.is_zero()) throw FieldError("cube test of zero");
  std::uint64_t g = gcd(3, e.field().q() - 1);
  return e.field().log(e.code()) % g == 0;
}

std::optional<Element> primitive_cube_root(Field const& f) {
  if ((f.q() - 1) % 3 != 0) return std::nullopt;
  for (Code c = 2; c < f.q(); ++c) {
    if (element_order(Element(f, c)) == 3) return Element(f, c);
  }
  return std::nullopt;
}

std::optional<Element> sqrt(Element const& e) {
  Field const& f = e.field();
  for (Code c = 0; c < f.q(); ++c) {
    if (f.mul(c, c) == e.code()) return Element(f, c);
  }
  return std::nullopt;
}

Element frobenius(Element const& e, long long k) {
  Field const& f = e.field();
  long long n = f.n();
  long long kk = ((k % n) + n) % n;
  Element r = e;
  for (long long i = 0; i < kk; ++i) r = pow(r, f.p());
  return r;
}

std::uint32_t generated_subfield_degree(Field const& f, std::vector<Code> const& elems) {
  for (std::uint32_t d = 1; d <= f.n(); ++d) {
    if (f.n() % d) continue;
    bool inside = true;
    for (Code c : elems) {
      if (frobenius(Element(f, c), d).code() != c) {
        inside = false;
        break;
      }
    }
    if (inside) return d;
  }
  return f.n();
}

std::string to_string(Field const& f, Code c) {
  if (f.n() == 1) return std::to_string(c);
  std::ostringstream os;
  os << '[';
  auto cs = f.coeffs(c);
  for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? "," : "") << cs[i];
  os << ']';
  return os.str();
}

Code parse_element(Field const& f, std::string const& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t.empty()) throw FieldError("empty field element");
  if (t.front() == '[') {
    if (t.back() != ']') throw FieldError("malformed field element '" + text + "'");
    std::vector<std::uint32_t> cs;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) cs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    if (cs.size() > f.n()) throw FieldError("too many coefficients in '" + text + "'");
    for (auto c : cs)
      if (c >= f.p()) throw FieldError("coefficient out of range in '" + text + "'");
    return f.from_coeffs(cs);
  }
  long long v = std::stoll(t);
  if (f.n() == 1) return f.from_int(v);
  if (v < 0 || v >= static_cast<long long>(f.q())) throw FieldError("element code out of range");
  return static_cast<Code>(v);
}

std::string field_string(Field const& f) {
  std::ostringstream os;
  os << "{\"p\":" << f.p() << ",\"n\":" << f.n() << ",\"modulus\":[";
  for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
  os << "]}";
  return os.str();
}

}  // namespace psl3::gf
