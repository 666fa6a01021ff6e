#include "mggs/autgrp.hpp"

#include <algorithm>

#include "mggs/errors.hpp"
#include "mggs/words.hpp"

namespace mggs {

namespace {

bool contains_unit(std::span<const Unit> s, Unit u) { return std::find(s.begin(), s.end(), u) != s.end(); }

std::vector<Residue> values(std::span<const Unit> s) {
  std::vector<Residue> out;
  for (const auto& u : s) out.push_back(u.value());
  return out;
}

/// The exponent vector read off the first level of a portrait fixing level 1.
std::optional<FpVec> first_level_vector(const Portrait& x) {
  const Residue p = x.p();
  if (x.depth() < 2 || !x.label({}).is_identity()) return std::nullopt;
  FpVec v(p, p - 1);
  for (Residue i = 1; i < p; ++i) {
    const AffineLabel l = x.label({i});
    if (l.u != 1) return std::nullopt;
    v.set(i - 1, l.t);
  }
  return v;
}

}  // namespace

std::vector<Unit> compute_U(const MggsGroup& g) {
  std::vector<Unit> out;
  for (const auto& u : all_units(g.p()))
    if (row_space_equal(perm_apply(g.matrix(), u), g.matrix())) out.push_back(u);
  return out;
}

VData compute_V(const MggsGroup& g, std::span<const Unit> U) {
  VData out;
  for (const auto& u : U)
    if (auto l = scalar_action(g.matrix(), u)) {
      out.V.push_back(u);
      out.scalars[u.value()] = l->value();
    }
  return out;
}

std::vector<Unit> compute_W(Residue p, const std::map<Residue, Residue>& scalars) {
  std::vector<Unit> gens;
  for (const auto& [v, l] : scalars) gens.emplace_back(l, p);
  return unit_subgroup_generated(p, gens);
}

std::string structure_string(Classification c, Residue p, std::size_t u_order, std::size_t w_order) {
  const std::string base = c == Classification::Symmetric ? "G ⋊ C_" + std::to_string(p)
                                                          : "G ⋊ ∏_ω C_" + std::to_string(p);
  const auto cyc = [](std::size_t n) { return "C_" + std::to_string(n); };
  std::string x;
  if (u_order == 1 && w_order == 1) return base;
  if (u_order == 1 || w_order == 1) {
    x = cyc(std::max(u_order, w_order));
  } else if (u_order == w_order) {
    x = is_prime(u_order) ? cyc(u_order) + "²" : "(" + cyc(u_order) + ")²";
  } else {
    x = "(" + cyc(u_order) + " × " + cyc(w_order) + ")";
  }
  return "(" + base + ") ⋊ " + x;
}

AutReport aut_structure(const MggsGroup& g) {
  if (g.classification() == Classification::Constant)
    throw UnsupportedError("the constant group is excluded from the automorphism computation");
  const Residue p = g.p();
  const auto U = compute_U(g);
  const auto v = compute_V(g, U);
  const auto W = compute_W(p, v.scalars);
  AutReport r;
  r.classification = g.classification();
  r.U = values(U);
  r.V = values(v.V);
  r.W = values(W);
  r.scalars = v.scalars;
  r.structure = structure_string(r.classification, p, U.size(), W.size());
  r.out_finite = r.classification == Classification::Symmetric;
  r.coprime_autos = U.size() > 1 || W.size() > 1;
  const Unit minus_one(p - 1, p);
  if (r.classification == Classification::Symmetric && contains_unit(U, minus_one) && !contains_unit(W, minus_one))
    r.flags.push_back(kFlagMinusOneTrivial);
  return r;
}

Unit NormalizerSequence::at(std::size_t k) const {
  if (k < d.size() && k < preperiod + period) return d[k];
  return d[preperiod + (k - preperiod) % period];
}

Portrait diagonal_scaling(Residue p, std::span<const Unit> d, unsigned depth) {
  if (d.size() < depth) throw DepthError("diagonal scaling needs one unit per level");
  Portrait x(p, depth);
  std::size_t width = 1;
  for (unsigned l = 0; l < depth; ++l) {
    for (std::size_t i = 0; i < width; ++i) x.set_label(l, i, AffineLabel::scale(d[l]));
    width *= p;
  }
  return x;
}

Portrait NormalizerSequence::portrait(unsigned depth) const {
  std::vector<Unit> prefix;
  for (unsigned k = 0; k < depth; ++k) prefix.push_back(at(k));
  return diagonal_scaling(p, prefix, depth);
}

std::optional<NormalizerSequence> solve_normalizer_sequence(const MggsGroup& g, Unit d0, Unit d1) {
  const Residue p = g.p();
  std::vector<FpVec> target;
  for (const auto& row : g.matrix().row_vectors()) target.push_back(perm_apply(row, d0.inverse()).scaled(d1.value()));

  NormalizerSequence seq;
  seq.p = p;
  seq.d = {d0, d1};
  std::map<Residue, std::size_t> seen{{d1.value(), 1}};
  while (true) {
    const Unit dk = seq.d.back();
    std::optional<Unit> next;
    for (const auto& x : all_units(p)) {
      bool ok = true;
      for (std::size_t j = 0; j < target.size() && ok; ++j)
        ok = perm_apply(g.basis_row(j), dk.inverse()).scaled(x.value()) == target[j];
      if (ok) {
        next = x;
        break;  // unique: x v = y v with v != 0 forces x = y
      }
    }
    if (!next) return std::nullopt;
    if (auto it = seen.find(next->value()); it != seen.end()) {
      seq.preperiod = it->second;
      seq.period = seq.d.size() - it->second;
      break;
    }
    seen[next->value()] = seq.d.size();
    seq.d.push_back(*next);
  }
  // fold d_0 into the cycle when it already repeats
  while (seq.preperiod > 0 && seq.d[seq.preperiod - 1] == seq.d[seq.preperiod - 1 + seq.period]) {
    --seq.preperiod;
    seq.d.pop_back();
  }
  return seq;
}

NormalizerSequence normalizer_sequence(const MggsGroup& g, Unit d0, Unit w) {
  if (d0.modulus() != g.p() || w.modulus() != g.p()) throw DomainError("units over a different field");
  const auto U = compute_U(g);
  if (!contains_unit(U, d0)) throw DomainError("d0 = " + std::to_string(d0.value()) + " is not in U");
  const auto W = compute_W(g.p(), compute_V(g, U).scalars);
  if (!contains_unit(W, w)) throw DomainError("w = " + std::to_string(w.value()) + " is not in W");
  auto seq = solve_normalizer_sequence(g, d0, d0 * w);
  if (!seq)
    throw PreconditionError("no normalising sequence for d0 = " + std::to_string(d0.value()) +
                            ", w = " + std::to_string(w.value()) + " (internal inconsistency)");
  return *seq;
}

NormalizerCheck normalizer_conjugation_check(const NormalizerSequence& seq, const MggsGroup& g, unsigned depth) {
  const Residue p = g.p();
  if (depth < 2) throw DepthError("the conjugation check needs depth >= 2");
  const Portrait x = seq.portrait(depth);
  const Unit d0 = seq.at(0), d1 = seq.at(1);

  const auto ambient = MggsGroup::full_space(p);
  for (std::size_t j = 0; j + 1 < p; ++j) {
    const FpVec ej = FpVec::unit_vector(p, p - 1, j);
    const auto v = first_level_vector(evaluate(Word::b(ej), ambient, depth).conjugate(x));
    if (!v || *v != perm_apply(ej, d0.inverse()).scaled(d1.value()))
      return {false, "ambient b^{s_" + std::to_string(j + 1) + "}: first-level image differs from d1 * s_{d0 j}"};
  }

  const Portrait ca = evaluate(Word::a(p), g, depth).conjugate(x);
  if (ca != Portrait::rooted(AffineLabel{1, ca.label({}).t}, p, depth) || ca.label({}).u != 1)
    return {false, "a: conjugate is not a power of a"};

  for (std::size_t j = 0; j < g.rank(); ++j) {
    const Portrait cb = evaluate(Word::b(g.standard(j)), g, depth).conjugate(x);
    const auto v = first_level_vector(cb);
    const std::string name = "b^{s_" + std::to_string(j + 1) + "}";
    if (!v) return {false, name + ": conjugate does not fix the first level with sigma labels"};
    const auto n = g.matrix().coordinates(*v);
    if (!n) return {false, name + ": first-level vector " + v->to_string() + " is not in E"};
    if (cb != evaluate(Word::b(*n), g, depth))
      return {false, name + ": conjugate is not b^" + n->to_string() + " at depth " + std::to_string(depth)};
  }
  return {true, ""};
}

}  // namespace mggs
