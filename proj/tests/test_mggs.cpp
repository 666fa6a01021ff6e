#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mggs/coordinates.hpp"
#include "mggs/errors.hpp"
#include "mggs/quotient.hpp"

using namespace mggs;

namespace {

MggsGroup gs3() { return construct(3, {FpVec(3, {1, 2})}); }
MggsGroup sym5() { return construct(5, {FpVec(5, {1, 2, 2, 1})}); }

Word random_ab_word(std::mt19937_64& rng, const MggsGroup& g, int len) {
  Word w(g.p());
  for (int i = 0; i < len; ++i) {
    if (rng() % 2) {
      w *= Word::a(g.p(), 1 + rng() % (g.p() - 1));
    } else {
      FpVec n(g.p(), g.rank());
      for (std::size_t j = 0; j < n.size(); ++j) n.set(j, rng() % g.p());
      w *= Word::b(n);
    }
  }
  return w;
}

}  // namespace

TEST_CASE("construct and classify") {
  CHECK(sym5().classification() == Classification::Symmetric);
  CHECK(construct(5, {FpVec(5, {1, 2, 3, 4})}).classification() == Classification::Regular);
  CHECK(construct(3, {FpVec(3, {1, 1})}).classification() == Classification::Constant);
  CHECK(construct(5, {FpVec(5, {2, 2, 2, 2})}).classification() == Classification::Constant);
  CHECK(MggsGroup::full_space(5).classification() == Classification::Regular);
  CHECK(construct(5, {FpVec(5, {1, 2, 2, 1}), FpVec(5, {0, 1, 1, 0})}).classification() == Classification::Regular);
  CHECK(to_string(Classification::Symmetric) == "symmetric");
  CHECK_THROWS_AS(construct(5, {FpVec(5, {1, 2, 2, 1}), FpVec(5, {2, 4, 4, 2})}), RankError);
  CHECK_THROWS_AS(construct(5, {FpVec(5, {0, 0, 0, 0})}), RankError);
  CHECK_THROWS_AS(construct(5, {}), RankError);
  CHECK_THROWS_AS(construct(5, {FpVec(5, {1, 2, 2})}), DimensionError);
  CHECK_THROWS_AS(construct(4, {FpVec(4, {1, 2, 2})}), DomainError);
}

TEST_CASE("forced_a_coords") {
  const auto g3 = gs3();
  const std::vector<FpVec> zero(3, FpVec(3, {0}));
  CHECK(forced_a_coords(zero, g3) == std::vector<Residue>{0, 0, 0});
  const std::vector<FpVec> ones(3, FpVec(3, {1}));
  CHECK(forced_a_coords(ones, g3) == std::vector<Residue>{0, 0, 0});
  std::vector<FpVec> n(5, FpVec(5, {0}));
  n[0] = FpVec(5, {1});
  CHECK(forced_a_coords(n, sym5()) == std::vector<Residue>{0, 1, 2, 2, 1});
  CHECK_THROWS_AS(forced_a_coords(ones, sym5()), DimensionError);
}

TEST_CASE("quotient enumeration") {
  const auto g = gs3();
  for (unsigned d = 1; d <= 4; ++d) CHECK(enumerate_quotient(g, {Word::a(3)}, d).size() == 3);
  CHECK(enumerate_quotient(g, standard_generators(g), 1).size() == 3);
  // regression values, confirmed by the Schreier-Sims order on the leaves
  const auto q2 = enumerate_quotient(g, standard_generators(g), 2);
  const auto q3 = enumerate_quotient(g, standard_generators(g), 3);
  CHECK(q2.size() == 27);
  CHECK(q3.size() == 2187);
  CHECK(leaf_group(g, standard_generators(g), 3).order() == 2187);
  CHECK(leaf_group(g, standard_generators(g), 5).order_string() == "174449211009120179071170507");  // 3^55
  CHECK(enumerate_quotient(sym5(), standard_generators(sym5()), 2).size() == 15625);

  CHECK(q3.elements().front().is_identity());
  CHECK(std::is_sorted(q3.elements().begin(), q3.elements().end()));
  CHECK(q3 == enumerate_quotient_serial(g, standard_generators(g), 3));
  for (std::size_t i = 0; i < q3.size(); i += 97) CHECK(evaluate(q3.word_for(i), g, 3) == q3.elements()[i]);

  QuotientBudget tight;
  tight.max_elements = 100;
  CHECK_THROWS_AS(enumerate_quotient(g, standard_generators(g), 3, tight), ResourceError);
  tight.max_labels = 10;
  CHECK_THROWS_AS(enumerate_quotient(g, standard_generators(g), 3, tight), ResourceError);
}

TEST_CASE("member_at_depth") {
  const auto g = gs3();
  const auto q2 = enumerate_quotient(g, standard_generators(g), 2);
  const auto q3 = enumerate_quotient(g, standard_generators(g), 3);
  CHECK(member_at_depth(Portrait(3, 3), q3));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) CHECK(member_at_depth(evaluate(random_ab_word(rng, g, 9), g, 4), q3));
  const auto k1a = kappa(1, rooted(AffineLabel::shift(1, 3), 3, 2));
  CHECK(member_at_depth(k1a, q2));  // frozen: kappa_1(a) is in G * Stab(2)
  CHECK_FALSE(member_at_depth(k1a, q3));
  CHECK_THROWS_AS(member_at_depth(Portrait(3, 1), q2), DepthError);

  const auto leaves = leaf_group(g, standard_generators(g), 3);
  for (const auto& x : q3.elements()) CHECK(member_at_depth(x, leaves, 3));
  CHECK_FALSE(member_at_depth(k1a * Portrait(3, 3), leaves, 3));
}

TEST_CASE("permutation groups") {
  // S_4 from a 4-cycle and a transposition, A_4 from two 3-cycles
  CHECK(PermGroup(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}).order() == 24);
  CHECK(PermGroup(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}).order() == 12);
  CHECK_FALSE(PermGroup(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}).contains({1, 0, 2, 3}));
  CHECK(PermGroup(5, {}).order() == 1);
  CHECK(PermGroup(6, {{1, 2, 3, 4, 5, 0}}).order() == 6);
  // S_8 from a transposition and an 8-cycle
  CHECK(PermGroup(8, {{1, 0, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7, 0}}).order() == 40320);
}

TEST_CASE("regularisation") {
  CHECK(regularisation_gens(gs3()).size() == 2);
  const auto sym_gens = regularisation_gens(sym5());
  REQUIRE(sym_gens.size() == 3);
  CHECK(sym_gens.back() == Word::c(5));
  CHECK_THROWS_AS(regularisation_gens(construct(3, {FpVec(3, {1, 1})})), UnsupportedError);
  // c is trivial modulo Stab(2), so the index p only shows at depth 3
  const auto g = sym5();
  CHECK(leaf_group(g, regularisation_gens(g), 2).order() == leaf_group(g, standard_generators(g), 2).order());
  CHECK(leaf_group(g, regularisation_gens(g), 3).order() == 5 * leaf_group(g, standard_generators(g), 3).order());
}

TEST_CASE("b_coordinates") {
  const auto g = sym5();
  const FpVec n(5, {3});
  auto c = b_coordinates(Word::b(n), g);
  CHECK(c.n[0] == n);
  for (Residue k = 1; k < 5; ++k) CHECK(c.n[k].is_zero());
  for (Residue k = 0; k < 5; ++k) CHECK(c.s[k] == n.dot(g.column(k)));

  c = b_coordinates(Word(5), g);
  for (Residue k = 0; k < 5; ++k) CHECK((c.n[k].is_zero() && c.s[k] == 0));

  const auto g3 = gs3();
  const FpVec one(3, {1});
  CHECK_THROWS_AS(b_coordinates(Word::a(3), g3), PreconditionError);
  // b * b^{a^2} * b^{a}
  const Word k1b = Word::b(one) * (Word::a(3, 1) * Word::b(one) * Word::a(3, 2)) *
                   (Word::a(3, 2) * Word::b(one) * Word::a(3, 1));
  c = b_coordinates(k1b, g3);
  for (Residue k = 0; k < 3; ++k) {
    CHECK(c.n[k] == one);
    CHECK(c.s[k] == 0);
  }
  const auto q3 = enumerate_quotient(g3, standard_generators(g3), 3);
  CHECK(member_at_depth(kappa(1, evaluate(Word::b(one), g3, 2)), q3));

  std::mt19937_64 rng(2);
  for (const auto& grp : {gs3(), sym5(), construct(7, {FpVec(7, {1, 0, 2, 0, 3, 1}), FpVec(7, {0, 1, 1, 4, 0, 2})})}) {
    for (int trial = 0; trial < 100; ++trial) {
      Word x = random_ab_word(rng, grp, 10);
      x *= Word::a(grp.p(), -static_cast<std::int64_t>(x.a_exponent_sum()));
      const auto cc = b_coordinates(x, grp);
      const auto secs = sections_of_word(x, grp);
      for (Residue k = 0; k < grp.p(); ++k) {
        CHECK(abelianize(secs[k], grp) == Abelianization{cc.s[k], cc.n[k]});
        CHECK(abelianize(cc.L[k], grp) == Abelianization{0, grp.zero_coordinates()});
      }
    }
  }
}

TEST_CASE("order_p_conjugator") {
  const auto g = gs3();
  auto id = order_p_conjugator(Word(3), g, 3);
  CHECK(id.h.is_identity());

  std::mt19937_64 rng(3);
  const auto leaves = leaf_group(g, standard_generators(g), 4);
  for (int trial = 0; trial < 20; ++trial) {
    const Word x = random_ab_word(rng, g, 7);
    const Word y = commutator(Word::a(3), x);  // a * [a, x] = a^x has order 3
    const auto h = order_p_conjugator(y, g, 4);
    CHECK(equal_at_depth(evaluate(Word::a(3), g, 4).conjugate(h.h), evaluate(Word::a(3) * y, g, 4), 4));
    CHECK(member_at_depth(h.h, leaves, 4));
  }
  // (ab)^3 is not trivial at depth 3
  CHECK_THROWS_AS(order_p_conjugator(Word::b(FpVec(3, {1})), g, 3), PreconditionError);
}
