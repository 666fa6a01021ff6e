#pragma once

// The coordinate system of the first level stabiliser (B-coordinates, forced
// A-coordinates, residual L-coordinates), the regularisation G_reg, and the
// explicit conjugator taking a to an order-p element a*g.

#include <vector>

#include "mggs/group.hpp"
#include "mggs/tree.hpp"
#include "mggs/words.hpp"

namespace mggs {

struct StabCoordinates {
  std::vector<FpVec> n;    // B-coordinates n_0..n_{p-1}
  std::vector<Residue> s;  // forced A-coordinates
  std::vector<Word> L;     // residuals y_k = (a^{s_k} b^{n_k})^{-1} g|_k
};

/// Coordinates of a first-level stabiliser word over a, b and c. A b^m
/// syllable after cumulative a-exponent t lands in slot -t mod p. Contract:
/// abelianize(sections_of_word(w)[k]) == (s_k, n_k).
StabCoordinates b_coordinates(const Word& w, const MggsGroup& g);

/// {a, b^{s_1}, ..., b^{s_r}}, plus c for symmetric groups.
/// UnsupportedError for the constant group.
std::vector<Word> regularisation_gens(const MggsGroup& g);

struct OrderPConjugator {
  Residue s = 0;               // root section exponent a^s
  std::vector<Word> sections;  // h|_k = a^s g|_1 ... g|_k
  Portrait h;                  // portrait at the requested depth
};

/// For g in Stab(1) with (a g)^p trivial at depth, builds h in Stab(1) with
/// a^h = a g. PreconditionError if (a g)^p is not trivial at depth.
OrderPConjugator order_p_conjugator(const Word& g, const MggsGroup& grp, unsigned depth);

}  // namespace mggs
