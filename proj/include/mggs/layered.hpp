#pragma once

// Subgroups of the sigma-labelled portraits of depth n, which form a finite
// p-group. Elements are sifted level by level: the labels of an element of
// Stab(k) on level k form a vector in F_p^{p^k}, and products add these
// vectors. An echelon basis per level, closed under p-th powers and
// commutators, gives membership and the order without a permutation action.

#include <vector>

#include "mggs/group.hpp"
#include "mggs/tree.hpp"
#include "mggs/words.hpp"

namespace mggs {

class LayeredGroup {
 public:
  /// DomainError if a generator has a label outside the rooted cyclic group.
  LayeredGroup(Residue p, unsigned depth, const std::vector<Portrait>& generators);

  Residue p() const { return p_; }
  unsigned depth() const { return depth_; }
  /// log_p of the order.
  std::size_t order_exponent() const { return basis_.size(); }
  /// Number of basis elements on each level.
  std::vector<std::size_t> level_ranks() const;

  /// Membership of the truncation of g; false for labels outside sigma.
  bool contains(const Portrait& g) const;

 private:
  struct Element {
    unsigned level;
    std::size_t pivot;
    std::vector<Portrait> inverse_powers;  // h^{-c} for c = 0..p-1
  };

  /// Reduces g by the basis; returns the residue and the level it stopped on.
  std::pair<Portrait, unsigned> sift(Portrait g) const;
  void insert(const Portrait& residue, unsigned level);

  Residue p_;
  unsigned depth_;
  std::vector<Element> basis_;  // sorted by (level, pivot)
};

/// The image of <gens> in the sigma-labelled portraits of the given depth.
LayeredGroup layered_group(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth);

bool member_at_depth(const Portrait& g, const LayeredGroup& q);

}  // namespace mggs
