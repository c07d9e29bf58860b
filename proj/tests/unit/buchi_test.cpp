#include <gtest/gtest.h>

#include <random>

#include "polybisim/buchi.hpp"
#include "polybisim/error.hpp"

using namespace polybisim;

namespace {

Letter L(const char* atom) { return atom ? Letter::of(atom) : Letter::none(); }

LassoWord random_lasso(std::mt19937_64& rng, const std::vector<Letter>& letters) {
  std::vector<Letter> prefix(rng() % 4), cycle(1 + rng() % 3);
  for (auto& l : prefix) l = letters[rng() % letters.size()];
  for (auto& l : cycle) l = letters[rng() % letters.size()];
  return LassoWord(prefix, cycle);
}

}  // namespace

TEST(BuchiAutomaton, ValidatesShape) {
  EXPECT_THROW(BuchiAutomaton({"a"}, 1, {0}, {{0, 2, {}}}, {true}), Error);
  EXPECT_THROW(BuchiAutomaton({"a"}, 1, {0}, {{0, 0, {{3, true}}}}, {true}), Error);
  EXPECT_THROW(BuchiAutomaton({}, 2, {0}, {}, {true}), Error);
}

TEST(BuchiAutomaton, GuardsReadSingleAtomLetters) {
  const BuchiAutomaton b({"a", "b"}, 1, {0}, {}, {true});
  EXPECT_EQ(b.letter_index(L("b")), 1u);
  EXPECT_EQ(b.letter_index(L("zzz")), 2u);
  EXPECT_EQ(b.letter_index(L(nullptr)), 2u);
  const BuchiEdge e{0, 0, {{0, true}, {1, false}}};
  EXPECT_TRUE(BuchiAutomaton::guard_holds(e, 0));
  EXPECT_FALSE(BuchiAutomaton::guard_holds(e, 1));
  EXPECT_FALSE(BuchiAutomaton::guard_holds(e, 2));
}

TEST(LassoAccepts, HandBuiltAutomata) {
  const BuchiAutomaton all({}, 1, {0}, {{0, 0, {}}}, {true});
  const BuchiAutomaton none({}, 1, {0}, {{0, 0, {}}}, {false});
  std::mt19937_64 rng(1);
  const std::vector<Letter> letters{L(nullptr), L("a"), L("b")};
  for (int k = 0; k < 50; ++k) {
    const LassoWord w = random_lasso(rng, letters);
    EXPECT_TRUE(lasso_accepts(all, w));
    EXPECT_FALSE(lasso_accepts(none, w));
  }
}

TEST(ToBuchi, Examples) {
  const BuchiAutomaton fp = to_buchi(parse_ltl("F p"));
  EXPECT_TRUE(lasso_accepts(fp, LassoWord({}, {L("p")})));
  EXPECT_FALSE(lasso_accepts(fp, LassoWord({}, {L(nullptr)})));
  EXPECT_TRUE(lasso_accepts(fp, LassoWord({L("p")}, {L(nullptr)})));
  EXPECT_EQ(fp.initial(), std::vector<std::size_t>{0});

  const BuchiAutomaton t = to_buchi(Formula::truth());
  const BuchiAutomaton contradiction = to_buchi(parse_ltl("p & !p"));
  std::mt19937_64 rng(2);
  const std::vector<Letter> letters{L(nullptr), L("p"), L("q")};
  for (int k = 0; k < 50; ++k) {
    const LassoWord w = random_lasso(rng, letters);
    EXPECT_TRUE(lasso_accepts(t, w));
    EXPECT_FALSE(lasso_accepts(contradiction, w));
  }
}

TEST(ToBuchi, GuardsOnlyMentionFormulaAtoms) {
  const BuchiAutomaton b = to_buchi(parse_ltl("G !r2 & F r1 & (r3 -> X !r1)"));
  EXPECT_EQ(b.atoms(), (std::vector<std::string>{"r1", "r2", "r3"}));
  for (const auto& e : b.edges()) {
    for (const auto& lit : e.guard) EXPECT_LT(lit.atom, b.atoms().size());
  }
}

TEST(ToBuchi, MultipleUntilsNeedDegeneralization) {
  const BuchiAutomaton b = to_buchi(parse_ltl("G F a & G F b"));
  EXPECT_TRUE(lasso_accepts(b, LassoWord({}, {L("a"), L("b")})));
  EXPECT_FALSE(lasso_accepts(b, LassoWord({L("b")}, {L("a")})));
  EXPECT_FALSE(lasso_accepts(b, LassoWord({}, {L("a"), L(nullptr)})));
}

TEST(ToBuchiProperty, AgreesWithOracleAndNegation) {
  std::mt19937_64 rng(3);
  const std::vector<Letter> letters{L(nullptr), L("a"), L("b"), L("pid")};
  const char* samples[] = {"a U b", "G (a -> X b)", "F G a | G F b", "!(a U (b & X a))", "X a -> F b",
                           "G !a & F b & (b -> X !b)", "(a U b) U a", "F (a & X (b & X pid))"};
  for (const char* text : samples) {
    const Formula f = parse_ltl(text);
    const BuchiAutomaton pos = to_buchi(f);
    const BuchiAutomaton neg = to_buchi(Formula::negation(f));
    for (int k = 0; k < 200; ++k) {
      const LassoWord w = random_lasso(rng, letters);
      const bool truth = eval_ltl_lasso(f, w);
      ASSERT_EQ(lasso_accepts(pos, w), truth) << text;
      ASSERT_EQ(lasso_accepts(neg, w), !truth) << text;
    }
  }
}
