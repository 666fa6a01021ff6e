#pragma once

// Brute-force verification at truncated depth. Every check returns a
// CheckResult; failures carry a witness that can be replayed through the
// public API.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mggs/group.hpp"
#include "mggs/tree.hpp"
#include "mggs/words.hpp"

namespace mggs {

struct CheckResult {
  std::string name;
  Residue p = 0;
  std::vector<std::vector<Residue>> rows;
  unsigned depth = 0;
  bool passed = false;
  std::string witness;  // empty iff passed
  std::string detail;
  double elapsed_ms = 0;
  std::optional<std::uint64_t> seed;

  bool operator==(const CheckResult&) const = default;
};

/// s_k = sum_i n_i . e_{k-i+1}: the forced A-coordinates with an off-by-one
/// index, used to show that the global-equations check can fail.
std::vector<Residue> forced_a_coords_shifted(const std::vector<FpVec>& n, const MggsGroup& g);

/// Random word with the given number of syllables over a, b^n (and c when
/// with_c is set), freely reduced.
Word random_word(std::mt19937_64& rng, const MggsGroup& g, int syllables, bool with_c = false);

/// Random freely reduced word over a and b with total a-exponent 0.
Word random_stabilizer_word(std::mt19937_64& rng, const MggsGroup& g, int syllables);

/// Depth at which leaf-group membership is used: depth + 1 while the number of
/// leaves stays within the cap, else depth.
unsigned membership_depth(Residue p, unsigned depth, std::size_t max_leaves = 729);

/// Both directions of the global equations on the enumerated first-level
/// stabiliser of Q(G_reg, depth): coordinates of every element match its
/// sections, and every choice of B-coordinates with the forced A-coordinates
/// gives an element of G_reg. With mutate set, the shifted formula is used.
CheckResult check_global_equations(const MggsGroup& g, unsigned depth, bool mutate = false);

/// Conjugators for sampled order-p elements a^x = a [a, x], verified by
/// conjugation at depth and by membership in G_reg. For symmetric groups also
/// runs check_symmetric_counterexample.
CheckResult check_order_p_prop(const MggsGroup& g, unsigned trials, unsigned depth, std::uint64_t seed);

/// For symmetric G: a^c = a d with d = [a, c], and no element of Stab_G(1)
/// conjugates a to a d modulo Stab(3). The search runs over kappa_1(y) c for
/// every sigma-labelled y of depth 2, which is every candidate.
CheckResult check_symmetric_counterexample(const MggsGroup& g);

/// kappa_1(a^s b^{s_j}) in G_reg, the glay commutator identity, the
/// non-normality of kappa_1(a) for symmetric groups, and for symmetric G the
/// identity [kappa_1(b), kappa_2(a)] = kappa_1(c).
CheckResult check_kappa_closure(const MggsGroup& g, unsigned depth);

/// kappa_1(b^{s_j}) without the a^s correction must leave G_reg when s != 0.
CheckResult check_kappa_uncorrected(const MggsGroup& g, unsigned depth);

/// Exhaustive scan over affine-labelled portraits for p = 3 (full affine
/// labels up to depth 2; affine root and sigma labels below at depth 3):
/// g centralises a iff its first-level sections agree and its root label is a
/// shift; g normalises <a> iff its first-level sections agree.
CheckResult check_centralizer_normalizer_A(unsigned depth, bool parallel = true);

/// Expression-level contraction on random stabiliser words.
CheckResult check_contraction(const MggsGroup& g, unsigned trials, std::uint64_t seed);

/// The image of Q(G, depth) in G/G' spans F_p^{r+1}.
CheckResult check_abelianization_rank(const MggsGroup& g, unsigned depth);

/// Every relation read off the BFS tree of Q(G, depth) abelianises to zero.
CheckResult check_relation_abelianization(const MggsGroup& g, unsigned depth);

/// evaluate(w1 w2) = evaluate(w1) evaluate(w2) and
/// section(g h, v) = section(g, v) section(h, v^g) on random inputs.
CheckResult check_homomorphism(const MggsGroup& g, unsigned trials, unsigned depth, std::uint64_t seed);

/// Brute force over all prefixes (d_0, ..., d_{depth-1}) of units: counts the
/// diagonal scalings whose conjugates of a and b^{s_j} stay in Q(G, depth)
/// (leaf-group membership), and compares with the sequences produced by the
/// step-by-step solver. The detail reports |U| |W| alongside.
CheckResult check_normalizer_census(const MggsGroup& g, unsigned depth);

/// All (d0, w) in U x W give sequences passing the conjugation check, with
/// distinct depth-2 portraits.
CheckResult check_normalizer_parameters(const MggsGroup& g, unsigned depth);

}  // namespace mggs
