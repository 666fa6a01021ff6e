#pragma once

// The subgroups U, V, W of F_p^x that determine Aut(G), the structure report
// assembled from them, and normalising elements of G with labels fixing 0
// (infinite products of diagonal scalings).

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mggs/group.hpp"
#include "mggs/tree.hpp"

namespace mggs {

struct AutReport {
  Classification classification = Classification::Regular;
  std::vector<Residue> U, V, W;
  std::map<Residue, Residue> scalars;  // v -> lambda for v in V
  std::string structure;
  bool out_finite = false;
  bool coprime_autos = false;
  std::vector<std::string> flags;

  bool operator==(const AutReport&) const = default;
};

/// Units u with E P_u = E.
std::vector<Unit> compute_U(const MggsGroup& g);

struct VData {
  std::vector<Unit> V;
  std::map<Residue, Residue> scalars;
};

/// Units of U acting on E as a scalar, with the scalar.
VData compute_V(const MggsGroup& g, std::span<const Unit> U);

/// The subgroup generated by every attained scalar.
std::vector<Unit> compute_W(Residue p, const std::map<Residue, Residue>& scalars);

/// The symbolic structure of Aut(G) from |U| and |W|.
std::string structure_string(Classification c, Residue p, std::size_t u_order, std::size_t w_order);

/// UnsupportedError for the constant group.
AutReport aut_structure(const MggsGroup& g);

/// Raised for symmetric groups, where -1 always lies in U but acts on E with
/// scalar 1.
inline constexpr const char* kFlagMinusOneTrivial =
    "minus_one_in_U_acts_trivially: -1 is in U but its scalar on E is 1, so -1 is not in W";

/// An eventually periodic sequence d_0, d_1, ... of units:
/// d_k = d[preperiod + (k - preperiod) % period] for k >= preperiod.
struct NormalizerSequence {
  Residue p = 0;
  std::vector<Unit> d;
  std::size_t preperiod = 0;
  std::size_t period = 1;

  Unit at(std::size_t k) const;
  /// prod_{k < depth} kappa_k(x -> d_k x) truncated at depth.
  Portrait portrait(unsigned depth) const;
};

/// The portrait of prod_k kappa_k(x -> d_k x) for a finite prefix.
Portrait diagonal_scaling(Residue p, std::span<const Unit> d, unsigned depth);

/// Solves d_{k+1} P'_{d_k} = d_1 P'_{d_0} on E step by step, where
/// P'_{d} x = perm_apply(x, d^{-1}). Empty if some step has no solution.
std::optional<NormalizerSequence> solve_normalizer_sequence(const MggsGroup& g, Unit d0, Unit d1);

/// d_1 = d_0 w. DomainError if d0 is not in U or w is not in W.
NormalizerSequence normalizer_sequence(const MggsGroup& g, Unit d0, Unit w);

struct NormalizerCheck {
  bool passed = true;
  std::string witness;  // the first generator whose conjugate misbehaves
};

/// Conjugates the generators of the ambient full-space group and of g by the
/// sequence's portrait and checks the first-level image b^{s_j} ->
/// b^{d_1 s_{d_0 j}}, and that a and every basis generator of g are sent into g.
NormalizerCheck normalizer_conjugation_check(const NormalizerSequence& seq, const MggsGroup& g, unsigned depth);

}  // namespace mggs
