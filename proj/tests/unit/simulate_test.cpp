#include <gtest/gtest.h>

#include <sstream>

#include "polybisim/error.hpp"
#include "polybisim/simulate.hpp"
#include "support.hpp"

using namespace polybisim;
using namespace polybisim::testing;

TEST(Simulate, StartInsideTarget) {
  const Workspace& ws = planar_workspace();
  const Trajectory t = simulate(ws, Point{Rational(1), Rational(-1)});
  EXPECT_TRUE(t.word.empty());
  ASSERT_EQ(t.points.size(), 1u);
  const LassoWord w = to_lasso(t, ws.regions());
  EXPECT_TRUE(w.prefix.empty());
  EXPECT_EQ(w.cycle, std::vector<Letter>{Letter::of("pid")});
}

TEST(Simulate, OneDimensionalHalving) {
  const Workspace ws = toy_spec().workspace();
  const Trajectory t = simulate(ws, Point{Rational(2)});
  ASSERT_EQ(t.points.size(), 2u);
  EXPECT_EQ(t.points[1], Point{Rational(1)});
  EXPECT_EQ(t.word, std::vector<Observation>{Observation::none()});
}

TEST(Simulate, RejectsPointsOutsideX) {
  const Workspace ws = toy_spec().workspace();
  try {
    simulate(ws, Point{Rational(3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutsideDomain);
  }
  EXPECT_THROW(simulate(ws, Point{Rational(0), Rational(0)}), Error);
}

TEST(Simulate, PrefixBoundedBySliceIndex) {
  const Workspace& ws = planar_workspace();
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    const Point x = sample_in_working_set(ws, rng);
    const Trajectory t = simulate(ws, x);
    const Rational v = lf_value(ws.lf(), x);
    std::size_t slice = 0;
    while (slice < ws.levels().count() && v > ws.levels()[slice]) ++slice;
    EXPECT_LE(t.word.size(), slice);
    EXPECT_LE(t.word.size(), ws.levels().count());
    for (std::size_t i = 0; i + 1 < t.points.size(); ++i) EXPECT_EQ(t.points[i + 1], ws.system().step(t.points[i]));
  }
}

TEST(Sampling, StaysInsideCells) {
  const Abstraction& abs = planar_abstraction();
  std::mt19937_64 rng(5);
  for (const Block& b : abs.partition.blocks()) {
    for (int k = 0; k < 3; ++k) ASSERT_TRUE(contains_point(b.cell, sample_in_cell(b.cell, rng)));
  }
}

TEST(CrossValidate, PlanarFixtureHasNoMismatches) {
  const Workspace& ws = planar_workspace();
  const Abstraction& abs = planar_abstraction();
  for (const char* text : {"G !r2 & F r1 & (r3 -> X !r1)", "F pid"}) {
    const Formula f = parse_ltl(text);
    const SatisfyingSet sat = satisfying_states(f, abs, ws.regions());
    const CrossValidation cv = cross_validate(ws, abs, f, sat, 500, 9);
    EXPECT_EQ(cv.samples.size(), 500u);
    EXPECT_TRUE(cv.ok()) << text << ": " << cv.word_mismatches << " / " << cv.verdict_mismatches;
  }
}

TEST(CrossValidate, ReportLines) {
  const Workspace ws = toy_spec().workspace();
  const Abstraction abs = build_quotient(ws);
  const Formula f = parse_ltl("F pid");
  const CrossValidation cv = cross_validate(ws, abs, f, satisfying_states(f, abs, {}), 8, 1);
  std::ostringstream out;
  write_report(out, cv);
  const std::string text = out.str();
  EXPECT_NE(text.find("0 word mismatches, 0 verdict mismatches"), std::string::npos);
  EXPECT_NE(text.find("sample 7 x=("), std::string::npos);
  EXPECT_NE(text.find("word_ok=true verdict_ok=true"), std::string::npos);

  const CrossValidation again = cross_validate(ws, abs, f, satisfying_states(f, abs, {}), 8, 1);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(cv.samples[k].x, again.samples[k].x);
}
