#pragma once

// Permutation groups on {0, ..., n-1} with a base and strong generating set
// built by the deterministic Schreier-Sims algorithm. Used for membership and
// order in depth-n quotients, which act faithfully on the leaves X^n.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mggs {

/// Right action: x^g = g[x]; (g*h)[x] = h[g[x]].
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
Perm perm_mul(const Perm& g, const Perm& h);
Perm perm_inverse(const Perm& g);
bool perm_is_identity(const Perm& g);

class PermGroup {
 public:
  PermGroup(std::size_t degree, const std::vector<Perm>& generators);

  std::size_t degree() const { return n_; }
  bool contains(const Perm& g) const;
  /// Group order; ResourceError if it does not fit in 128 bits.
  unsigned __int128 order() const;
  std::string order_string() const;
  /// Orbit lengths of the stabiliser chain; their product is the order.
  std::vector<std::size_t> basic_orbit_lengths() const;
  const std::vector<std::uint32_t>& base() const { return base_; }
  std::size_t strong_generator_count() const { return gens_.size(); }

 private:
  struct Level {
    std::vector<Perm> gens;
    std::vector<std::int32_t> slot;  // point -> index into transversal, -1 if outside the orbit
    std::vector<Perm> transversal;   // transversal[slot[x]] maps the base point to x
    std::vector<std::uint32_t> orbit;
  };

  void rebuild(std::size_t level);
  void add_base_point_for(const Perm& g);
  /// Sifts g through levels from..end; returns the residue and the level where
  /// sifting stopped (== levels if it went all the way).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;

  std::size_t n_;
  std::vector<std::uint32_t> base_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

std::string to_string_u128(unsigned __int128 x);

}  // namespace mggs
