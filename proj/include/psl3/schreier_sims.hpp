#pragma once

/// @file schreier_sims.hpp
/// Deterministic Schreier-Sims over an arbitrary faithful action on points
/// {0, ..., degree-1}.
///
/// The chain is generic in the element type. An Action supplies
///
///   Elem identity() const;
///   Elem mul(Elem const& a, Elem const& b) const;   // a after b
///   Elem inv(Elem const& a) const;
///   std::uint32_t image(Elem const& a, std::uint32_t pt) const;
///   std::uint32_t degree() const;
///   bool is_identity(Elem const& a) const;
///
/// Points are acted on from the left: (ab)(x) = a(b(x)). Base points are
/// chosen as the first point (in index order) moved by the element that
/// forces a new level.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace psl3::grp {

template <class Elem, class Action>
class StabilizerChain {
 public:
  StabilizerChain(std::vector<Elem> const& generators, Action action) : act_(std::move(action)) {
    for (auto const& g : generators) {
      if (act_.is_identity(g)) continue;
      if (fixes_base(g, base_.size())) add_level(first_moved(g));
      strong_.push_back(g);
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild(i);
    run();
  }

  Action const& action() const { return act_; }
  std::vector<std::uint32_t> const& base() const { return base_; }
  std::size_t strong_generator_count() const { return strong_.size(); }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> r;
    for (auto const& l : levels_) r.push_back(l.orbit.size());
    return r;
  }

  /// Product of the basic orbit lengths. Throws std::overflow_error past 2^64.
  std::uint64_t order() const {
    unsigned __int128 o = 1;
    for (auto const& l : levels_) {
      o *= l.orbit.size();
      if (o >> 64) throw std::overflow_error("group order exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(o);
  }

  bool contains(Elem const& g) const {
    auto [residue, level] = strip(g, 0);
    return level == levels_.size() && act_.is_identity(residue);
  }

 private:
  struct Level {
    std::uint32_t point;
    std::vector<std::uint32_t> orbit;
    // Indexed by point; set iff the point is in the orbit. u(point_of_base) = pt.
    std::vector<std::optional<Elem>> transversal;
    std::vector<std::optional<Elem>> transversal_inv;
    std::vector<std::size_t> gens;  // indices into strong_
  };

  bool fixes_base(Elem const& g, std::size_t upto) const {
    for (std::size_t i = 0; i < upto; ++i)
      if (act_.image(g, base_[i]) != base_[i]) return false;
    return true;
  }

  std::uint32_t first_moved(Elem const& g) const {
    for (std::uint32_t x = 0; x < act_.degree(); ++x)
      if (act_.image(g, x) != x) return x;
    throw std::logic_error("identity element has no moved point");
  }

  void add_level(std::uint32_t pt) {
    base_.push_back(pt);
    levels_.push_back(Level{pt, {}, {}, {}, {}});
  }

  void rebuild(std::size_t i) {
    Level& l = levels_[i];
    l.gens.clear();
    for (std::size_t s = 0; s < strong_.size(); ++s)
      if (fixes_base(strong_[s], i)) l.gens.push_back(s);
    l.orbit.assign(1, l.point);
    l.transversal.assign(act_.degree(), std::nullopt);
    l.transversal_inv.assign(act_.degree(), std::nullopt);
    l.transversal[l.point] = act_.identity();
    l.transversal_inv[l.point] = act_.identity();
    for (std::size_t head = 0; head < l.orbit.size(); ++head) {
      std::uint32_t x = l.orbit[head];
      for (auto s : l.gens) {
        std::uint32_t z = act_.image(strong_[s], x);
        if (l.transversal[z]) continue;
        Elem u = act_.mul(strong_[s], *l.transversal[x]);
        l.transversal_inv[z] = act_.inv(u);
        l.transversal[z] = std::move(u);
        l.orbit.push_back(z);
      }
    }
  }

  // Sift g from level `from`; returns the residue and the level where sifting
  // stopped (levels_.size() when it passed every level).
  std::pair<Elem, std::size_t> strip(Elem g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      std::uint32_t y = act_.image(g, levels_[i].point);
      auto const& uinv = levels_[i].transversal_inv[y];
      if (!uinv) return {std::move(g), i};
      g = act_.mul(*uinv, g);
    }
    return {std::move(g), levels_.size()};
  }

  void run() {
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      Level const& l = levels_[i];
      for (std::size_t oi = 0; !restarted && oi < l.orbit.size(); ++oi) {
        std::uint32_t y = l.orbit[oi];
        for (std::size_t gi = 0; !restarted && gi < l.gens.size(); ++gi) {
          Elem const& s = strong_[l.gens[gi]];
          std::uint32_t z = act_.image(s, y);
          Elem h = act_.mul(*l.transversal_inv[z], act_.mul(s, *l.transversal[y]));
          auto [residue, j] = strip(std::move(h), i + 1);
          bool dropped = j < levels_.size();
          if (!dropped && act_.is_identity(residue)) continue;
          if (!dropped) add_level(first_moved(residue));
          strong_.push_back(std::move(residue));
          for (std::size_t lvl = i + 1; lvl <= j; ++lvl) rebuild(lvl);
          i = j + 1;  // loop decrement resumes at level j
          restarted = true;
        }
      }
    }
  }

  Action act_;
  std::vector<std::uint32_t> base_;
  std::vector<Elem> strong_;
  std::vector<Level> levels_;
};

}  // namespace psl3::grp
