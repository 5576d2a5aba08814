#include "psl3/grp.hpp"

#include <algorithm>

namespace psl3::grp {

std::uint64_t pgl3_order(std::uint64_t q) { return q * q * q * (q * q * q - 1) * (q * q - 1); }

std::uint64_t psl3_order(std::uint64_t q) { return pgl3_order(q) / gf::gcd(3, q - 1); }

bool ElementSet::insert(Entries const& e) {
  if (2 * (elems_.size() + 1) > slots_.size()) grow();
  std::size_t mask = slots_.size() - 1;
  std::size_t h = pg::hash_entries(e) & mask;
  while (slots_[h]) {
    if (elems_[slots_[h] - 1] == e) return false;
    h = (h + 1) & mask;
  }
  elems_.push_back(e);
  slots_[h] = static_cast<std::uint32_t>(elems_.size());
  return true;
}

bool ElementSet::contains(Entries const& e) const {
  std::size_t mask = slots_.size() - 1;
  std::size_t h = pg::hash_entries(e) & mask;
  while (slots_[h]) {
    if (elems_[slots_[h] - 1] == e) return true;
    h = (h + 1) & mask;
  }
  return false;
}

void ElementSet::grow() {
  std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
  std::size_t mask = fresh.size() - 1;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    std::size_t h = pg::hash_entries(elems_[i]) & mask;
    while (fresh[h]) h = (h + 1) & mask;
    fresh[h] = static_cast<std::uint32_t>(i + 1);
  }
  slots_.swap(fresh);
}

std::vector<ProjMatrix> ElementSet::to_vector() const {
  std::vector<ProjMatrix> r;
  r.reserve(elems_.size());
  for (auto const& e : elems_) r.push_back(ProjMatrix::from_canonical(*f_, e));
  return r;
}

bool ElementSet::operator==(ElementSet const& o) const {
  if (f_ != o.f_ || size() != o.size()) return false;
  for (auto const& e : elems_)
    if (!o.contains(e)) return false;
  return true;
}

std::optional<ElementSet> closure(Field const& f, std::vector<ProjMatrix> const& generators,
                                  std::size_t cap) {
  ElementSet set(f);
  set.insert(ProjMatrix::identity(f));
  for (std::size_t head = 0; head < set.size(); ++head) {
    ProjMatrix g = set.at(head);
    for (auto const& s : generators) {
      if (set.insert(g * s) && set.size() > cap) return std::nullopt;
    }
  }
  return set;
}

PermAction::PermAction(Field const& f) : f_(&f), points_(pg::all_points(f)) {}

Perm PermAction::perm_of(ProjMatrix const& m) const {
  Perm p(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) p[i] = pg::point_index(*f_, pg::apply_point(m, points_[i]));
  return p;
}

Perm PermAction::identity() const {
  Perm p(points_.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = i;
  return p;
}

Perm PermAction::mul(Perm const& a, Perm const& b) const {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm PermAction::inv(Perm const& a) const {
  Perm r(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) r[a[i]] = i;
  return r;
}

bool PermAction::is_identity(Perm const& a) const {
  for (std::uint32_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

std::uint32_t MatrixAction::image(ProjMatrix const& a, std::uint32_t pt) const {
  Field const& f = *f_;
  pg::ProjPoint p;
  if (pt == 0) {
    p = pg::ProjPoint{{0, 0, 1}};
  } else if (pt <= f.q()) {
    p = pg::ProjPoint{{0, 1, pt - 1}};
  } else {
    std::uint32_t r = pt - 1 - f.q();
    p = pg::ProjPoint{{1, r / f.q(), r % f.q()}};
  }
  return pg::point_index(f, pg::apply_point(a, p));
}

std::uint64_t schreier_sims_order(Field const& f, std::vector<ProjMatrix> const& generators) {
  return MatrixChain(generators, MatrixAction(f)).order();
}

GroupHandle::GroupHandle(Field const& f, std::vector<ProjMatrix> generators, std::size_t cap)
    : state_(std::make_shared<State>()) {
  state_->field = &f;
  state_->generators = std::move(generators);
  state_->cap = cap;
  for (auto const& g : state_->generators)
    if (!(g.field() == f)) throw gf::FieldError("generator over a different field");
}

MatrixChain const& GroupHandle::chain() const {
  std::lock_guard lock(state_->mu);
  if (!state_->chain)
    state_->chain = std::make_unique<MatrixChain>(state_->generators, MatrixAction(*state_->field));
  return *state_->chain;
}

std::uint64_t GroupHandle::order() const { return chain().order(); }

std::shared_ptr<ElementSet const> GroupHandle::elements() const {
  if (order() > state_->cap) return nullptr;
  std::lock_guard lock(state_->mu);
  if (!state_->enumerated) {
    auto set = closure(*state_->field, state_->generators, state_->cap);
    if (set) state_->elements = std::make_shared<ElementSet const>(std::move(*set));
    state_->enumerated = true;
  }
  return state_->elements;
}

bool GroupHandle::contains(ProjMatrix const& m) const {
  {
    std::lock_guard lock(state_->mu);
    if (state_->elements) return state_->elements->contains(m);
  }
  return chain().contains(m);
}

ElementSet intersect(GroupHandle const& a, GroupHandle const& b) {
  bool a_small = a.order() <= b.order();
  GroupHandle const& small = a_small ? a : b;
  GroupHandle const& other = a_small ? b : a;
  auto elems = small.elements();
  if (!elems) throw EnumerationError("both groups exceed the enumeration cap; raise --cap to intersect them");
  ElementSet out(small.field());
  for (auto const& e : elems->entries()) {
    ProjMatrix m = ProjMatrix::from_canonical(small.field(), e);
    if (other.contains(m)) out.insert(e);
  }
  return out;
}

bool equals_psl3(GroupHandle const& h) {
  for (auto const& g : h.generators())
    if (!pg::in_psl(g)) throw std::invalid_argument("generator " + pg::to_string(g) + " is not in PSL(3,q)");
  return h.order() == psl3_order(h.field().q());
}

Field const& generated_subfield(Field const& f, std::vector<pg::Code> const& elems) {
  return gf::make_field(f.p(), gf::generated_subfield_degree(f, elems));
}

}  // namespace psl3::grp
