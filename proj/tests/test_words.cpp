#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mggs/errors.hpp"
#include "mggs/words.hpp"

using namespace mggs;

namespace {

MggsGroup gs3() { return construct(3, {FpVec(3, {1, 2})}); }
MggsGroup sym5() { return construct(5, {FpVec(5, {1, 2, 2, 1})}); }
MggsGroup two_rows7() { return construct(7, {FpVec(7, {1, 0, 2, 0, 3, 1}), FpVec(7, {0, 1, 1, 4, 0, 2})}); }

Word random_word(std::mt19937_64& rng, const MggsGroup& g, int len, bool extended = false) {
  const Residue p = g.p();
  Word w(p);
  for (int i = 0; i < len; ++i) {
    const auto kind = rng() % (extended ? 4 : 2);
    if (kind == 0) {
      w *= Word::a(p, 1 + rng() % (p - 1));
    } else if (kind == 1) {
      FpVec n(p, g.rank());
      for (std::size_t j = 0; j < n.size(); ++j) n.set(j, rng() % p);
      w *= Word::b(n);
    } else if (kind == 2) {
      w *= Word::c(p, 1 + rng() % (p - 1));
    } else {
      w *= Word::kappa_a(p, 1 + rng() % 2, 1 + rng() % (p - 1));
    }
  }
  return w;
}

/// Appends an a-power so that the total a-exponent vanishes.
Word close_up(const Word& w) { return w * Word::a(w.p(), -static_cast<std::int64_t>(w.a_exponent_sum())); }

}  // namespace

TEST_CASE("reduce") {
  const auto g = gs3();
  const FpVec n(3, {1}), m(3, {2});
  CHECK((Word::a(3, 1) * Word::a(3, 2)).empty());
  CHECK(Word::b(n) * Word::b(n) == Word::b(FpVec(3, {2})));
  CHECK((Word::b(n) * Word::b(m)).empty());
  const Word mixed(3, {PowA{1}, PowB{n}, PowA{2}});
  CHECK(reduce(mixed) == mixed);
  CHECK(reduce(mixed).size() == 3);
  CHECK(reduce(Word(3, {PowKappaA{1, 1}, PowKappaA{2, 1}})).size() == 2);
  CHECK(reduce(Word(3, {PowKappaA{1, 1}, PowKappaA{1, 2}})).empty());
  CHECK(reduce(Word(3, {PowA{1}, PowB{FpVec(3, {0})}, PowA{2}})).empty());
  CHECK_THROWS_AS(Word(3, {PowB{FpVec(5, {1})}}), DomainError);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_word(rng, g, 8, true);
    CHECK(reduce(reduce(w)) == reduce(w));
  }
}

TEST_CASE("evaluate generators") {
  const auto g = gs3();
  CHECK(evaluate(Word::a(3), g, 3) == rooted(AffineLabel::shift(1, 3), 3, 3));
  const auto b = evaluate(Word::b(FpVec(3, {1})), g, 2);
  CHECK(b.label({}).is_identity());
  CHECK(b.label({0}).is_identity());
  CHECK(b.label({1}) == AffineLabel::shift(1, 3));
  CHECK(b.label({2}) == AffineLabel::shift(2, 3));

  for (unsigned d = 1; d <= 4; ++d) {
    const auto c = evaluate(Word::c(3), g, d);
    const Word comm = commutator(Word::b(FpVec(3, {1})), Word::a(3));
    CHECK(section(c, {0}) == evaluate(comm, g, d - 1));
    CHECK(section(c, {1}).is_identity());
    CHECK(c.label({}).is_identity());
  }
  const auto k2 = evaluate(Word::kappa_a(3, 2), g, 4);
  CHECK(k2 == kappa(2, rooted(AffineLabel::shift(1, 3), 3, 2)));
  CHECK(evaluate(Word::kappa_a(3, 2), g, 2).is_identity());
}

TEST_CASE("evaluate is a homomorphism") {
  std::mt19937_64 rng(2);
  for (const auto& g : {gs3(), sym5(), two_rows7()}) {
    const unsigned depth = g.p() == 7 ? 3 : 4;
    for (int trial = 0; trial < 40; ++trial) {
      const auto w1 = random_word(rng, g, 6, true), w2 = random_word(rng, g, 6, true);
      CHECK(evaluate(w1 * w2, g, depth) == evaluate(w1, g, depth) * evaluate(w2, g, depth));
      CHECK(evaluate(w1.inverse(), g, depth) == evaluate(w1, g, depth).inverse());
      CHECK(evaluate(w1.pow(3), g, depth) == evaluate(w1, g, depth).pow(3));
    }
  }
  // exhaustive over short words for p=3
  const auto g = gs3();
  std::vector<Word> letters{Word::a(3, 1), Word::a(3, 2), Word::b(FpVec(3, {1})), Word::b(FpVec(3, {2}))};
  for (const auto& x : letters)
    for (const auto& y : letters)
      for (const auto& z : letters)
        CHECK(evaluate(x * y * z, g, 3) == evaluate(x, g, 3) * evaluate(y, g, 3) * evaluate(z, g, 3));
}

TEST_CASE("abelianize") {
  const auto g = sym5();
  const FpVec n(5, {3});
  CHECK(abelianize(Word::a(5) * Word::b(n) * Word::a(5, 4) * Word::b(-n), g) ==
        Abelianization{0, FpVec(5, {0})});
  CHECK(abelianize(Word(5, {PowB{FpVec(5, {1})}, PowA{1}, PowB{FpVec(5, {1})}}), g) ==
        Abelianization{1, FpVec(5, {2})});
  CHECK_THROWS_AS(abelianize(Word::c(5), g), DomainError);
  CHECK_THROWS_AS(abelianize(Word::kappa_a(5, 1), g), DomainError);
}

TEST_CASE("syllable_length") {
  const FpVec n(5, {1}), m(5, {2});
  CHECK(syllable_length(Word(5)) == 0);
  CHECK(syllable_length(Word::a(5, 2)) == 1);
  CHECK(syllable_length(Word::a(5) * Word::b(n) * Word::a(5) * Word::b(m)) == 4);
}

TEST_CASE("sections_of_word") {
  const auto g = gs3();
  const FpVec one(3, {1});
  auto secs = sections_of_word(Word::b(one), g);
  CHECK(secs[0] == Word::b(one));
  CHECK(secs[1] == Word::a(3, 1));
  CHECK(secs[2] == Word::a(3, 2));
  for (const auto& s : sections_of_word(Word(3), g)) CHECK(s.empty());
  CHECK_THROWS_AS(sections_of_word(Word::a(3), g), PreconditionError);

  const Word w(3, {PowB{one}, PowA{1}, PowB{one}, PowA{2}});
  const auto portrait = evaluate(w, g, 3);
  secs = sections_of_word(w, g);
  for (Residue k = 0; k < 3; ++k) CHECK(evaluate(secs[k], g, 2) == section(portrait, {k}));

  std::mt19937_64 rng(3);
  for (const auto& grp : {gs3(), sym5(), two_rows7()}) {
    const unsigned depth = grp.p() == 7 ? 3 : 4;
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = close_up(random_word(rng, grp, 7, true));
      const auto px = evaluate(x, grp, depth);
      const auto sx = sections_of_word(x, grp);
      for (Residue k = 0; k < grp.p(); ++k) CHECK(evaluate(sx[k], grp, depth - 1) == section(px, {k}));
    }
  }
}

TEST_CASE("expression-level contraction") {
  std::mt19937_64 rng(4);
  for (const auto& g : {gs3(), sym5(), two_rows7()}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto w = close_up(random_word(rng, g, 1 + rng() % 12));
      std::size_t total = 0;
      for (const auto& s : sections_of_word(w, g)) total += syllable_length(s);
      CHECK(total <= syllable_length(w) + g.p() - 1);
    }
  }
}

TEST_CASE("parse_word") {
  const auto g2 = two_rows7();
  const auto w = parse_word("a^2 * b[1,0] * c^-1 * k3(a)", g2);
  CHECK(w == Word(7, {PowA{2}, PowB{FpVec(7, {1, 0})}, PowC{-1}, PowKappaA{3, 1}}));
  CHECK(parse_word(w.to_string(), g2) == w);
  CHECK(parse_word("  a ^ 2*b [ 1 , 0 ]*c^ -1 *k3( a )", g2) == w);
  CHECK(parse_word("(a*b[0,1])^-2", g2) == (Word::a(7) * Word::b(FpVec(7, {0, 1}))).pow(-2));
  CHECK(parse_word("", g2).empty());
  CHECK(parse_word("b * a", gs3()) == Word::b(FpVec(3, {1})) * Word::a(3));
  CHECK_THROWS_AS(parse_word("b", g2), ParseError);
  CHECK_THROWS_AS(parse_word("b[1]", g2), ParseError);
  CHECK_THROWS_AS(parse_word("a^", g2), ParseError);
  CHECK_THROWS_AS(parse_word("x", g2), ParseError);
  CHECK_THROWS_AS(parse_word("k0(a)", g2), ParseError);
  CHECK_THROWS_AS(parse_word("a*", g2), ParseError);
}
