#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "polybisim/error.hpp"
#include "polybisim/ltl.hpp"

using namespace polybisim;
using Op = Formula::Op;

namespace {

Letter L(const char* atom) { return atom ? Letter::of(atom) : Letter::none(); }

Formula random_formula(std::mt19937_64& rng, int depth) {
  static const char* atoms[] = {"a", "b"};
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 0 : 10);
  switch (pick(rng)) {
    case 0: {
      const int r = static_cast<int>(rng() % 6);
      if (r == 4) return Formula::truth();
      if (r == 5) return Formula::falsity();
      return Formula::atom(atoms[r % 2]);
    }
    case 1: return Formula::negation(random_formula(rng, depth - 1));
    case 2: return Formula::conjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3: return Formula::disjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return Formula::next(random_formula(rng, depth - 1));
    case 6:
    case 7: return Formula::until(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 8: return Formula::eventually(random_formula(rng, depth - 1));
    default: return Formula::always(random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST(ParseLtl, TargetExampleStructure) {
  const Formula f = parse_ltl("G !r2 & F r1 & (r3 -> X !r1)");
  ASSERT_EQ(f.op(), Op::kAnd);
  EXPECT_EQ(f.rhs().op(), Op::kImplies);
  EXPECT_EQ(f.rhs().rhs(), Formula::next(Formula::negation(Formula::atom("r1"))));
  ASSERT_EQ(f.lhs().op(), Op::kAnd);
  EXPECT_EQ(f.lhs().lhs(), Formula::always(Formula::negation(Formula::atom("r2"))));
  EXPECT_EQ(f.lhs().rhs(), Formula::eventually(Formula::atom("r1")));
}

TEST(ParseLtl, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse_ltl("r1"), Formula::atom("r1"));
  const auto a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  EXPECT_EQ(parse_ltl("a -> b -> c"), Formula::implies(a, Formula::implies(b, c)));
  EXPECT_EQ(parse_ltl("a | b & c"), Formula::disjunction(a, Formula::conjunction(b, c)));
  EXPECT_EQ(parse_ltl("a & b U c"), Formula::conjunction(a, Formula::until(b, c)));
  EXPECT_EQ(parse_ltl("a U b U c"), Formula::until(Formula::until(a, b), c));
  EXPECT_EQ(parse_ltl("!a U b"), Formula::until(Formula::negation(a), b));
  EXPECT_EQ(parse_ltl("X F G a"), Formula::next(Formula::eventually(Formula::always(a))));
  EXPECT_EQ(parse_ltl("(a | b) & c"), Formula::conjunction(Formula::disjunction(a, b), c));
  EXPECT_EQ(parse_ltl("true & !false"), Formula::conjunction(Formula::truth(), Formula::negation(Formula::falsity())));
}

TEST(ParseLtl, OperatorLettersInsideIdentifiers) {
  EXPECT_EQ(parse_ltl("Xa"), Formula::atom("Xa"));
  EXPECT_EQ(parse_ltl("GF"), Formula::atom("GF"));
  EXPECT_EQ(parse_ltl("X a_1"), Formula::next(Formula::atom("a_1")));
  EXPECT_EQ(parse_ltl("trueish"), Formula::atom("trueish"));
}

TEST(ParseLtl, ErrorsCarryOffsets) {
  for (const char* bad : {"", "a &", "(a", "a b", "-> a", "a - b", "U a", "1a", "a @ b"}) {
    try {
      parse_ltl(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
      EXPECT_NE(std::string(e.what()).find("offset"), std::string::npos);
    }
  }
}

TEST(ParseLtl, UnknownAtoms) {
  const std::vector<std::string> alphabet{"r1", "pid"};
  EXPECT_NO_THROW(parse_ltl("F pid & r1", alphabet));
  try {
    parse_ltl("F r2", alphabet);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownAtom);
  }
}

TEST(ParseLtl, PrintedFormReparsesIdentically) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 500; ++k) {
    const Formula f = random_formula(rng, 4);
    EXPECT_EQ(parse_ltl(to_string(f)), f) << to_string(f);
  }
}

TEST(Nnf, PushesNegationToAtoms) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    const Formula n = to_nnf(Formula::negation(random_formula(rng, 4)));
    std::function<void(const Formula&)> check = [&](const Formula& g) {
      EXPECT_NE(g.op(), Op::kImplies);
      EXPECT_NE(g.op(), Op::kEventually);
      EXPECT_NE(g.op(), Op::kAlways);
      if (g.op() == Op::kNot) {
        EXPECT_EQ(g.lhs().op(), Op::kAtom);
        return;
      }
      if (g.is_unary() || g.is_binary()) check(g.lhs());
      if (g.is_binary()) check(g.rhs());
    };
    check(n);
  }
}

TEST(Nnf, PreservesSemantics) {
  std::mt19937_64 rng(23);
  const std::vector<Letter> letters{L(nullptr), L("a"), L("b")};
  for (int k = 0; k < 100; ++k) {
    const Formula f = random_formula(rng, 3);
    const Formula n = to_nnf(f);
    for (int w = 0; w < 30; ++w) {
      std::vector<Letter> prefix(rng() % 3), cycle(1 + rng() % 3);
      for (auto& l : prefix) l = letters[rng() % 3];
      for (auto& l : cycle) l = letters[rng() % 3];
      const LassoWord word(prefix, cycle);
      ASSERT_EQ(eval_ltl_lasso(f, word), eval_ltl_lasso(n, word)) << to_string(f);
    }
  }
}

TEST(Formula, AtomsAndDepth) {
  const Formula f = parse_ltl("G !r2 & F r1 & (r3 -> X !r1)");
  EXPECT_EQ(atoms_of(f), (std::set<std::string>{"r1", "r2", "r3"}));
  EXPECT_EQ(depth(Formula::atom("a")), 0u);
  EXPECT_EQ(depth(parse_ltl("X !a")), 2u);
  EXPECT_THROW(Formula::atom("a").lhs(), Error);
}

TEST(LassoWord, RequiresCycle) {
  EXPECT_THROW(LassoWord({L("a")}, {}), Error);
  const LassoWord w({L("a"), L("b")}, {L(nullptr), L("a")});
  EXPECT_EQ(w.positions(), 4u);
  EXPECT_EQ(w.successor(3), 2u);
  EXPECT_EQ(w.successor(1), 2u);
  EXPECT_TRUE(w.at(3).holds("a"));
}

TEST(EvalLasso, Examples) {
  EXPECT_TRUE(eval_ltl_lasso(parse_ltl("G pid"), LassoWord({}, {L("pid")})));
  EXPECT_TRUE(eval_ltl_lasso(parse_ltl("F r1"), LassoWord({L(nullptr), L("r1")}, {L("pid")})));
  EXPECT_FALSE(eval_ltl_lasso(parse_ltl("G !r2 & F r1 & (r3 -> X !r1)"), LassoWord({L("r2")}, {L("pid")})));
  EXPECT_TRUE(eval_ltl_lasso(parse_ltl("a U b"), LassoWord({L("a"), L("a")}, {L("b")})));
  EXPECT_FALSE(eval_ltl_lasso(parse_ltl("a U b"), LassoWord({}, {L("a")})));
  EXPECT_TRUE(eval_ltl_lasso(parse_ltl("G F a"), LassoWord({}, {L("b"), L("a")})));
  EXPECT_FALSE(eval_ltl_lasso(parse_ltl("F G a"), LassoWord({L("a")}, {L("b"), L("a")})));
  EXPECT_TRUE(eval_ltl_lasso(parse_ltl("X X a"), LassoWord({L(nullptr)}, {L("b"), L("a")})));
  EXPECT_FALSE(eval_ltl_lasso(parse_ltl("X X X a"), LassoWord({L(nullptr)}, {L("b"), L("a")})));
  // Release through the NNF of a negated until.
  EXPECT_TRUE(eval_ltl_lasso(to_nnf(parse_ltl("!(a U b)")), LassoWord({}, {L("a")})));
}
