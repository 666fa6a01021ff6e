#pragma once

// Depth-truncated automorphisms of the p-regular rooted tree.
//
// Automorphisms act on the right: apply(g*h, v) = apply(h, apply(g, v)), and
// the label of a product at v is (g*h)|^v = g|^v followed by h|^{v^g}.
// Labels are affine maps x -> u*x + t of X = F_p.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mggs/fp.hpp"

namespace mggs {

/// The permutation x -> u*x + t of X = {0, ..., p-1}.
struct AffineLabel {
  std::uint16_t u = 1;
  std::uint16_t t = 0;

  static AffineLabel identity() { return {}; }
  /// sigma^k, i.e. x -> x + k.
  static AffineLabel shift(std::int64_t k, Residue p) { return {1, static_cast<std::uint16_t>(reduce(k, p))}; }
  static AffineLabel scale(Unit u) { return {static_cast<std::uint16_t>(u.value()), 0}; }

  bool is_identity() const { return u == 1 && t == 0; }
  Residue apply(Residue x, Residue p) const { return add_mod(mul_mod(u, x, p), t, p); }
  /// The map "this, then next".
  AffineLabel then(AffineLabel next, Residue p) const;
  AffineLabel inverse(Residue p) const;

  bool operator==(const AffineLabel&) const = default;
  auto operator<=>(const AffineLabel&) const = default;
};

using Vertex = std::vector<Residue>;

/// Number of vertices of length < depth in the p-regular tree.
std::size_t portrait_size(Residue p, unsigned depth);

class Portrait {
 public:
  /// Identity automorphism truncated at the given depth.
  Portrait(Residue p, unsigned depth);
  /// Labels in breadth-first order; there must be portrait_size(p, depth).
  Portrait(Residue p, unsigned depth, std::vector<AffineLabel> labels);

  static Portrait identity(Residue p, unsigned depth) { return Portrait(p, depth); }
  /// Label at the root, identity everywhere else.
  static Portrait rooted(AffineLabel label, Residue p, unsigned depth);
  /// psi_1^{-1}: root label plus p sections of equal depth.
  static Portrait from_sections(AffineLabel root, std::span<const Portrait> sections);

  Residue p() const { return p_; }
  unsigned depth() const { return depth_; }
  const std::vector<AffineLabel>& labels() const { return labels_; }

  /// Breadth-first index of a vertex; |v| < depth.
  std::size_t index_of(const Vertex& v) const;
  AffineLabel label(const Vertex& v) const;
  AffineLabel label_at(unsigned level, std::size_t index_in_level) const;
  void set_label(unsigned level, std::size_t index_in_level, AffineLabel l);

  /// Image of v; requires |v| <= depth.
  Vertex apply(const Vertex& v) const;
  /// Image of the level-l vertex with the given index, as an index in level l.
  std::size_t apply_index(unsigned level, std::size_t index_in_level) const;

  /// Product g*h (g first), truncated to the smaller depth.
  Portrait operator*(const Portrait& h) const;
  Portrait inverse() const;
  Portrait pow(std::int64_t k) const;
  /// g^h = h^{-1} g h.
  Portrait conjugate(const Portrait& h) const;

  /// The section g|_v as a portrait of depth depth - |v|.
  Portrait section(const Vertex& v) const;
  /// Restriction to vertices of length < n.
  Portrait truncate(unsigned n) const;

  bool is_identity() const;
  bool in_first_level_stabilizer() const { return depth_ == 0 || labels_[0].is_identity(); }
  /// True iff every label has u = 1 (labels in the cyclic group generated by sigma).
  bool has_sigma_labels() const;
  /// True iff every label has t = 0 (labels fixing 0).
  bool has_delta_labels() const;

  /// The induced permutation of the leaves X^depth, leaves indexed in base p
  /// with the first letter most significant.
  std::vector<std::uint32_t> leaf_permutation() const;

  bool operator==(const Portrait&) const = default;
  /// Lexicographic comparison of the breadth-first label sequence.
  auto operator<=>(const Portrait& o) const = default;

 private:
  std::size_t level_offset(unsigned level) const;

  Residue p_;
  unsigned depth_;
  std::vector<AffineLabel> labels_;
};

Portrait compose(const Portrait& g, const Portrait& h);
Portrait section(const Portrait& g, const Vertex& v);
Vertex apply(const Portrait& g, const Vertex& v);
Portrait rooted(AffineLabel label, Residue p, unsigned depth);
/// kappa_m(g): identity above level m, a copy of g below every level-m vertex.
/// The result has depth depth(g) + m; DepthError if that exceeds max_depth.
Portrait kappa(unsigned m, const Portrait& g, unsigned max_depth = 64);
/// Equality of all labels at vertices of length < n; DepthError if either
/// portrait is shallower than n.
bool equal_at_depth(const Portrait& g, const Portrait& h, unsigned n);
/// [g, h] = g^{-1} h^{-1} g h.
Portrait commutator(const Portrait& g, const Portrait& h);

/// The 0-bar directed automorphism whose sections at 0^k i (i != 0) are
/// sigma^{x_i}; x has length p-1.
Portrait directed(const FpVec& x, unsigned depth);

struct PortraitHash {
  std::size_t operator()(const Portrait& g) const noexcept;
};

}  // namespace mggs
