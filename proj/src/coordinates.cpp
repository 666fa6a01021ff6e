#include "mggs/coordinates.hpp"

#include "mggs/errors.hpp"

namespace mggs {

StabCoordinates b_coordinates(const Word& w, const MggsGroup& g) {
  const Residue p = g.p();
  if (w.a_exponent_sum() != 0)
    throw PreconditionError("word does not stabilise the first level: " + w.to_string());
  StabCoordinates c;
  c.n.assign(p, g.zero_coordinates());
  Residue shift = 0;
  for (const auto& syl : w.syllables()) {
    if (const auto* a = std::get_if<PowA>(&syl)) {
      shift = add_mod(shift, a->k, p);
    } else if (const auto* b = std::get_if<PowB>(&syl)) {
      c.n[neg_mod(shift, p)] += b->n;
    } else if (std::holds_alternative<PowKappaA>(syl)) {
      throw DomainError("kappa syllables lie outside G_reg: " + w.to_string());
    }
    // c-syllables contribute commutators only, so no B-coordinates
  }
  c.s = forced_a_coords(c.n, g);
  const auto secs = sections_of_word(w, g);
  for (Residue k = 0; k < p; ++k)
    c.L.push_back((Word::a(p, c.s[k]) * Word::b(c.n[k])).inverse() * secs[k]);
  return c;
}

std::vector<Word> regularisation_gens(const MggsGroup& g) {
  if (g.classification() == Classification::Constant)
    throw UnsupportedError("the constant group is excluded: its regularisation is not defined");
  std::vector<Word> gens{Word::a(g.p())};
  for (std::size_t j = 0; j < g.rank(); ++j) gens.push_back(Word::b(g.standard(j)));
  if (g.classification() == Classification::Symmetric) gens.push_back(Word::c(g.p()));
  return gens;
}

OrderPConjugator order_p_conjugator(const Word& g, const MggsGroup& grp, unsigned depth) {
  const Residue p = grp.p();
  if (depth == 0) throw DepthError("conjugator needs depth >= 1");
  const Word ag = Word::a(p) * g;
  if (!evaluate(ag, grp, depth).pow(p).is_identity())
    throw PreconditionError("(a g)^p is not trivial at depth " + std::to_string(depth));

  const auto gs = sections_of_word(g, grp);
  // B-coordinates of the partial products g|_1 ... g|_k give those of h
  std::vector<FpVec> cumulative(p, grp.zero_coordinates());
  for (Residue k = 1; k < p; ++k) {
    cumulative[k] = cumulative[k - 1];
    for (const auto& syl : gs[k].syllables())
      if (const auto* b = std::get_if<PowB>(&syl)) cumulative[k] += b->n;
  }
  OrderPConjugator out{forced_a_coords(cumulative, grp)[0], {}, Portrait(p, depth)};
  Word acc = Word::a(p, out.s);
  out.sections.push_back(acc);
  for (Residue k = 1; k < p; ++k) {
    acc *= gs[k];
    out.sections.push_back(acc);
  }
  std::vector<Portrait> secs;
  for (const auto& w : out.sections) secs.push_back(evaluate(w, grp, depth - 1));
  out.h = Portrait::from_sections(AffineLabel::identity(), secs);
  return out;
}

}  // namespace mggs
