#pragma once

// Finite congruence quotients G / Stab_G(n): breadth-first enumeration of the
// depth-n portraits reachable from the identity, and a Schreier-Sims image on
// the leaves X^n for depths where enumeration is out of reach.

#include <optional>
#include <vector>

#include "mggs/group.hpp"
#include "mggs/perm.hpp"
#include "mggs/tree.hpp"
#include "mggs/words.hpp"

namespace mggs {

struct QuotientBudget {
  /// Cap on the number of labels of a depth-n portrait, (p^n - 1)/(p - 1).
  std::size_t max_labels = 1u << 16;
  /// Cap on the number of enumerated elements.
  std::size_t max_elements = 4'000'000;
};

class QuotientGroup {
 public:
  Residue p() const { return p_; }
  unsigned depth() const { return depth_; }
  std::size_t size() const { return elements_.size(); }
  /// Sorted by the breadth-first label sequence; element 0 is the identity.
  const std::vector<Portrait>& elements() const { return elements_; }
  const std::vector<Word>& generators() const { return gens_; }

  /// Index of the truncation of g, if present. DepthError if g is too shallow.
  std::optional<std::size_t> find(const Portrait& g) const;
  bool contains(const Portrait& g) const { return find(g).has_value(); }
  /// A word over the generators evaluating to element i at this depth.
  Word word_for(std::size_t i) const;

  bool operator==(const QuotientGroup& o) const;

 private:
  friend class QuotientBuilder;

  Residue p_ = 0;
  unsigned depth_ = 0;
  std::vector<Word> gens_;
  std::vector<Portrait> elements_;
  std::vector<std::size_t> parent_;  // BFS tree, parent_[0] == 0
  std::vector<std::size_t> via_;     // generator index used to reach the element
};

/// Single-threaded reference enumeration.
QuotientGroup enumerate_quotient_serial(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth,
                                        const QuotientBudget& budget = {});

/// OpenMP frontier expansion; products are formed in parallel and merged in
/// frontier order, so the result is identical to the serial enumeration.
QuotientGroup enumerate_quotient(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth,
                                 const QuotientBudget& budget = {});

/// The standard generators a, b^{s_1}, ..., b^{s_r}.
std::vector<Word> standard_generators(const MggsGroup& g);

/// True iff the truncation of g lies in q. This certifies membership in
/// G * Stab(depth), a necessary condition for membership in G.
bool member_at_depth(const Portrait& g, const QuotientGroup& q);

/// The image of <gens> on the leaves X^depth.
PermGroup leaf_group(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth);

/// Membership of the truncation of g in a leaf group built at the given depth.
bool member_at_depth(const Portrait& g, const PermGroup& q, unsigned depth);

}  // namespace mggs
