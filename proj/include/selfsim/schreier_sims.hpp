#pragma once

// Deterministic Schreier-Sims: base and strong generating set with exact
// order and membership testing.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "selfsim/numeric.hpp"
#include "selfsim/perm.hpp"

namespace selfsim {

class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;                   // 0-based
    std::vector<Permutation> generators;    // strong generators fixing all earlier base points
    std::vector<Point> orbit;               // orbit of base_point, discovery order
    std::vector<std::int32_t> slot;         // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;   // base_point^transversal[k] == orbit[k]
    std::vector<Permutation> transversal_inv;
  };

  /// Builds the chain of <gens>. The base grows by the smallest point moved
  /// by the generator that forces a new level, so equal generator lists
  /// give identical chains.
  explicit StabilizerChain(std::span<const Permutation> gens) {
    if (gens.empty()) return;
    degree_ = gens.front().degree();
    for (const auto& g : gens)
      if (g.degree() != degree_) throw std::invalid_argument("generators of different degree");
    build(gens);
  }

  StabilizerChain(std::initializer_list<Permutation> gens)
      : StabilizerChain(std::span<const Permutation>(gens.begin(), gens.size())) {}

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  /// Base points, 1-based.
  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base_point + 1);
    return b;
  }

  BigNat order() const {
    BigNat r = 1;
    for (const auto& l : levels_) r *= l.orbit.size();
    return r;
  }

  /// Residue after sifting and the level at which sifting stopped
  /// (levels().size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& p) const {
    Permutation h = p;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      const auto& lv = levels_[l];
      const Point beta = h.image0(lv.base_point);
      const auto k = lv.slot[beta];
      if (k < 0) return {std::move(h), l};
      h = h * lv.transversal_inv[static_cast<std::size_t>(k)];
    }
    return {std::move(h), levels_.size()};
  }

  bool contains(const Permutation& p) const {
    if (levels_.empty()) return p.is_identity();
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in contains");
    auto [h, l] = sift(p);
    return l == levels_.size() && h.is_identity();
  }

  /// All distinct strong generators.
  std::vector<Permutation> strong_generators() const {
    return levels_.empty() ? std::vector<Permutation>{} : levels_.front().generators;
  }

 private:
  void build(std::span<const Permutation> gens) {
    std::vector<Permutation> initial;
    for (const auto& g : gens)
      if (!g.is_identity()) initial.push_back(g);
    if (initial.empty()) return;

    for (const auto& g : initial) {
      bool fixes_base = true;
      for (const auto& lv : levels_)
        if (g.image0(lv.base_point) != lv.base_point) fixes_base = false;
      if (fixes_base) push_level(*g.first_moved() - 1);
    }
    for (const auto& g : initial) {
      for (std::size_t l = 0; l < levels_.size(); ++l) {
        levels_[l].generators.push_back(g);
        if (g.image0(levels_[l].base_point) != levels_[l].base_point) break;
      }
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) recompute_orbit(l);

    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restart = false;
      // Every Schreier generator at level i must sift through levels i+1...
      for (std::size_t k = 0; k < levels_[i].orbit.size() && !restart; ++k) {
        for (std::size_t gi = 0; gi < levels_[i].generators.size(); ++gi) {
          const auto& lv = levels_[i];
          const Permutation& g = lv.generators[gi];
          const Point beta = lv.orbit[k];
          const Point image = g.image0(beta);
          const Permutation& u = lv.transversal[k];
          const Permutation& v_inv = lv.transversal_inv[static_cast<std::size_t>(lv.slot[image])];
          std::vector<Point> img(degree_);
          bool trivial = true;
          for (Point x = 0; x < degree_; ++x) {
            img[x] = v_inv.image0(g.image0(u.image0(x)));
            trivial = trivial && img[x] == x;
          }
          if (trivial) continue;
          auto [h, j] = sift(Permutation::from_zero_based(std::move(img)));
          if (j == levels_.size()) {
            if (h.is_identity()) continue;
            push_level(*h.first_moved() - 1);
          }
          for (std::size_t l = i + 1; l <= j; ++l) {
            levels_[l].generators.push_back(h);
            recompute_orbit(l);
          }
          i = j + 1;  // loop decrement resumes at level j
          restart = true;
          break;
        }
      }
    }
  }

  void push_level(Point base_point) {
    Level lv;
    lv.base_point = base_point;
    levels_.push_back(std::move(lv));
  }

  void recompute_orbit(std::size_t l) {
    auto& lv = levels_[l];
    lv.orbit.assign(1, lv.base_point);
    lv.slot.assign(degree_, -1);
    lv.slot[lv.base_point] = 0;
    lv.transversal.assign(1, Permutation::identity(degree_));
    lv.transversal_inv.assign(1, Permutation::identity(degree_));
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const auto& g : lv.generators) {
        const Point next = g.image0(lv.orbit[k]);
        if (lv.slot[next] >= 0) continue;
        lv.slot[next] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(next);
        Permutation t = lv.transversal[k] * g;
        lv.transversal_inv.push_back(t.inverse());
        lv.transversal.push_back(std::move(t));
      }
    }
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

inline StabilizerChain build_chain(std::span<const Permutation> gens) { return StabilizerChain(gens); }

class NotInGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order of <subgens> after confirming each lies in the chain's group.
inline BigNat subgroup_order(const StabilizerChain& parent, std::span<const Permutation> subgens) {
  for (const auto& g : subgens)
    if (!parent.contains(g)) throw NotInGroup("subgroup generator outside the parent group");
  return StabilizerChain(subgens).order();
}

}  // namespace selfsim
