#pragma once

// Words over the generator alphabet {a^k, b^n, c^k, kappa_m(a)^k} with free
// reduction, abelianisation, evaluation to portraits and symbolic sections.

#include <string>
#include <variant>
#include <vector>

#include "mggs/fp.hpp"
#include "mggs/group.hpp"
#include "mggs/tree.hpp"

namespace mggs {

/// a^k
struct PowA {
  Residue k;
  bool operator==(const PowA&) const = default;
};
/// b^n, n in F_p^r
struct PowB {
  FpVec n;
  bool operator==(const PowB&) const = default;
};
/// c^k, c = psi_1^{-1}([b^{s_1}, a], id, ..., id). The exponent is an
/// integer: c has infinite order whenever [b^{s_1}, a] does.
struct PowC {
  std::int64_t k;
  bool operator==(const PowC&) const = default;
};
/// kappa_m(a)^k, m >= 1
struct PowKappaA {
  unsigned level;
  Residue k;
  bool operator==(const PowKappaA&) const = default;
};

using Gen = std::variant<PowA, PowB, PowC, PowKappaA>;

class Word {
 public:
  explicit Word(Residue p) : p_(p) {}
  Word(Residue p, std::vector<Gen> syllables);

  static Word a(Residue p, std::int64_t k = 1);
  static Word b(const FpVec& n);
  static Word c(Residue p, std::int64_t k = 1);
  static Word kappa_a(Residue p, unsigned level, std::int64_t k = 1);

  Residue p() const { return p_; }
  const std::vector<Gen>& syllables() const { return syl_; }
  std::size_t size() const { return syl_.size(); }
  bool empty() const { return syl_.empty(); }

  /// Concatenation followed by free reduction at the seam.
  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o);
  Word inverse() const;
  Word pow(std::int64_t k) const;

  /// True iff the word uses only a- and b-syllables.
  bool over_ab() const;
  /// Sum of the a-exponents mod p.
  Residue a_exponent_sum() const;

  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  friend Word reduce(const Word& w);
  Residue p_;
  std::vector<Gen> syl_;
};

/// Merges adjacent syllables of the same kind (same level for kappa) and
/// drops trivial ones. Idempotent.
Word reduce(const Word& w);

/// [x, y] = x^{-1} y^{-1} x y.
Word commutator(const Word& x, const Word& y);

/// The portrait of w at the given depth.
Portrait evaluate(const Word& w, const MggsGroup& g, unsigned depth);
Portrait evaluate(const Gen& s, const MggsGroup& g, unsigned depth);

struct Abelianization {
  Residue a;
  FpVec b;
  bool operator==(const Abelianization&) const = default;
};

/// Image in G/G' = F_p^{r+1}; DomainError for c- or kappa-syllables.
Abelianization abelianize(const Word& w, const MggsGroup& g);

std::size_t syllable_length(const Word& w);

/// The p section words g|_0, ..., g|_{p-1} of a first-level stabiliser word.
/// A b^m syllable preceded by a-exponent t contributes b^m to section -t and
/// a^{m.e_{k+t}} to every other section k.
std::vector<Word> sections_of_word(const Word& w, const MggsGroup& g);

/// Parses the CLI word syntax, e.g. "a^2 * b[1,0] * c^-1 * k3(a)".
Word parse_word(const std::string& text, const MggsGroup& g);

}  // namespace mggs
