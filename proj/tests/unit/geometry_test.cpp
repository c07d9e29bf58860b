#include <gtest/gtest.h>

#include <random>

#include "polybisim/error.hpp"
#include "polybisim/geometry.hpp"

using namespace polybisim;

namespace {

Vector v(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Constraint le(Vector a, Rational b) { return {std::move(a), std::move(b), false}; }
Constraint lt(Vector a, Rational b) { return {std::move(a), std::move(b), true}; }

Cell interval(long lo, long hi, bool open_lo = false, bool open_hi = false) {
  return Cell(1, {Constraint{v({1}), Rational(hi), open_hi}, Constraint{v({-1}), Rational(-lo), open_lo}});
}

// Independent emptiness test for bounded cells in the plane: enumerate the
// vertices of the closure from pairwise line intersections; the cell is
// non-empty iff the vertex centroid (a relative-interior point of the
// closure) satisfies every strict row.
bool brute_force_empty(const Cell& c) {
  const auto& rows = c.constraints();
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i].normal;
      const auto& b = rows[j].normal;
      const Rational det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      Point x{(rows[i].offset * b[1] - a[1] * rows[j].offset) / det,
              (a[0] * rows[j].offset - rows[i].offset * b[0]) / det};
      bool inside = true;
      for (const auto& r : rows) inside = inside && dot(r.normal, x) <= r.offset;
      if (inside) vertices.push_back(x);
    }
  }
  if (vertices.empty()) return true;
  Point centroid(2);
  for (const auto& p : vertices) {
    centroid[0] += p[0];
    centroid[1] += p[1];
  }
  centroid[0] /= static_cast<long>(vertices.size());
  centroid[1] /= static_cast<long>(vertices.size());
  for (const auto& r : rows) {
    if (r.strict && dot(r.normal, centroid) >= r.offset) return true;
  }
  return false;
}

// Random bounded cell inside [-5, 5]^2 with a few extra rows.
Cell random_cell(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), off(-4, 4), flag(0, 2), count(0, 3);
  std::vector<Constraint> rows{le(v({1, 0}), 5), le(v({-1, 0}), 5), le(v({0, 1}), 5), le(v({0, -1}), 5)};
  const int extra = count(rng);
  for (int k = 0; k < extra; ++k) {
    Constraint c{v({coef(rng), coef(rng)}), Rational(off(rng)), flag(rng) == 0};
    if (!is_zero(c.normal)) rows.push_back(std::move(c));
  }
  return Cell(2, std::move(rows));
}

// Half-integer grid over [-6, 6]^2; it hits many boundaries exactly.
std::vector<Point> grid() {
  std::vector<Point> pts;
  for (int i = -12; i <= 12; ++i) {
    for (int j = -12; j <= 12; ++j) pts.push_back({Rational(i, 2), Rational(j, 2)});
  }
  return pts;
}

}  // namespace

TEST(Cell, ZeroNormalRowsResolve) {
  const Cell trivially_true(2, {le(v({0, 0}), 1)});
  EXPECT_EQ(trivially_true.size(), 0u);
  EXPECT_FALSE(is_empty(trivially_true));
  EXPECT_TRUE(is_empty(Cell(2, {lt(v({0, 0}), 0)})));
  EXPECT_TRUE(is_empty(Cell::empty(3)));
}

TEST(Cell, NormalsArePrimitive) {
  const Cell c(2, {le(v({2, 4}), 6)});
  EXPECT_EQ(c.constraints()[0].normal, v({1, 2}));
  EXPECT_EQ(c.constraints()[0].offset, 3);
}

TEST(IsEmpty, OpenAndClosedIntervals) {
  EXPECT_FALSE(is_empty(interval(0, 0)));
  EXPECT_TRUE(is_empty(interval(0, 0, true, false)));
  EXPECT_TRUE(is_empty(interval(1, 0)));
  EXPECT_FALSE(is_empty(interval(0, 1, true, true)));
}

TEST(IsEmpty, TriangleAndItsOpenComplementEdge) {
  const Cell tri(2, {le(v({-1, 0}), 0), le(v({0, -1}), 0), le(v({1, 1}), 1)});
  EXPECT_FALSE(is_empty(tri));
  EXPECT_TRUE(is_empty(intersect(tri, Cell(2, {lt(v({-1, -1}), -1)}))));
  // The hypotenuse alone is a non-empty lower-dimensional piece.
  EXPECT_FALSE(is_empty(intersect(tri, Cell(2, {le(v({-1, -1}), -1)}))));
}

TEST(Complement, UnitBox) {
  const Vector lo = v({0, 0}), hi = v({1, 1});
  const Cell box = Cell::box(lo, hi);
  const Region out = complement(box);
  EXPECT_EQ(out.size(), 4u);
  EXPECT_TRUE(is_pairwise_disjoint(out));
  EXPECT_TRUE(contains_point(out, v({2, 0})));
  EXPECT_FALSE(contains_point(out, v({1, 1})));
  EXPECT_EQ(complement(Cell::full_space(2)).size(), 0u);
}

TEST(Difference, IntervalExample) {
  const Region r = difference(Region(interval(0, 2)), Region(interval(0, 1)));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(contains_point(r, v({2})));
  EXPECT_FALSE(contains_point(r, v({1})));
  EXPECT_TRUE(contains_point(r, Point{Rational(3, 2)}));
  EXPECT_TRUE(difference(Region(interval(0, 1)), Region(interval(-1, 2))).empty());
}

TEST(PreimageLinear, SubstitutesTheMap) {
  const Matrix A{{2, 0}, {0, 3}};
  const Cell c(2, {le(v({1, 1}), 6)});
  const Cell pre = preimage_linear(c, A);
  ASSERT_EQ(pre.size(), 1u);
  EXPECT_EQ(pre.constraints()[0].normal, v({2, 3}));
  EXPECT_EQ(pre.constraints()[0].offset, 6);
}

TEST(SamplePoint, InsideOrThrows) {
  const Cell open_box(2, {lt(v({1, 0}), 1), lt(v({-1, 0}), 0), lt(v({0, 1}), 1), lt(v({0, -1}), 0)});
  EXPECT_TRUE(contains_point(open_box, sample_point(open_box)));
  EXPECT_THROW(sample_point(Cell::empty(2)), Error);
}

TEST(RemoveRedundancy, DropsImpliedRows) {
  const Cell c(2, {le(v({1, 0}), 1), le(v({1, 0}), 2), le(v({-1, 0}), 0), le(v({0, 1}), 1),
                   le(v({0, -1}), 0), le(v({1, 1}), 5)});
  EXPECT_EQ(remove_redundancy(c).size(), 4u);
}

TEST(BoundingBox, ClosureBoundsAndUnbounded) {
  const Cell tri(2, {lt(v({-1, 0}), 0), le(v({0, -1}), 0), le(v({1, 1}), 1)});
  const auto box = bounding_box(tri);
  ASSERT_TRUE(box);
  EXPECT_EQ(box->lo, v({0, 0}));
  EXPECT_EQ(box->hi, v({1, 1}));
  EXPECT_FALSE(bounding_box(Cell(2, {le(v({1, 0}), 0)})));
}

TEST(Subset, CellsAndRegions) {
  EXPECT_TRUE(is_subset(interval(0, 1), interval(0, 2)));
  EXPECT_FALSE(is_subset(interval(0, 2), interval(0, 1, false, true)));
  Region halves(1, {interval(0, 1), interval(1, 2, true, false)});
  EXPECT_TRUE(is_subset(Region(interval(0, 2)), halves));
  EXPECT_TRUE(is_subset(Cell::empty(1), interval(5, 6)));
}

TEST(Dimension, MismatchThrows) {
  EXPECT_THROW(intersect(interval(0, 1), Cell::full_space(2)), Error);
}

TEST(GeometryProperty, EmptinessMatchesVertexOracle) {
  std::mt19937_64 rng(1);
  int empties = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Cell c = random_cell(rng);
    const bool oracle = brute_force_empty(c);
    ASSERT_EQ(is_empty(c), oracle) << "trial " << trial;
    if (!oracle) {
      EXPECT_TRUE(contains_point(c, sample_point(c)));
    }
    empties += oracle ? 1 : 0;
  }
  EXPECT_GT(empties, 20);  // the generator must exercise both outcomes
}

TEST(GeometryProperty, IntersectionEmptinessMatchesOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Cell a = random_cell(rng), b = random_cell(rng);
    const Cell ab = intersect(a, b);
    EXPECT_EQ(is_empty(ab), brute_force_empty(ab));
    EXPECT_EQ(intersects(a, b), !brute_force_empty(ab));
  }
}

TEST(GeometryProperty, ComplementPartitionsTheGrid) {
  std::mt19937_64 rng(3);
  const auto pts = grid();
  for (int trial = 0; trial < 100; ++trial) {
    const Cell c = random_cell(rng);
    const Region out = complement(c);
    ASSERT_TRUE(is_pairwise_disjoint(out));
    for (const Cell& piece : out.cells()) EXPECT_FALSE(intersects(piece, c));
    for (const auto& p : pts) {
      int hits = contains_point(c, p) ? 1 : 0;
      for (const Cell& piece : out.cells()) hits += contains_point(piece, p) ? 1 : 0;
      ASSERT_EQ(hits, 1);
    }
  }
}

TEST(GeometryProperty, DifferenceIsSetDifference) {
  std::mt19937_64 rng(4);
  const auto pts = grid();
  for (int trial = 0; trial < 100; ++trial) {
    const Cell a = random_cell(rng), b = random_cell(rng);
    const Region d = difference(Region(a), Region(b));
    ASSERT_TRUE(is_pairwise_disjoint(d));
    for (const Cell& piece : d.cells()) {
      EXPECT_FALSE(is_empty(piece));
      EXPECT_TRUE(is_subset(piece, a));
      EXPECT_FALSE(intersects(piece, b));
    }
    for (const auto& p : pts) {
      ASSERT_EQ(contains_point(d, p), contains_point(a, p) && !contains_point(b, p));
    }
  }
}

TEST(GeometryProperty, RedundancyRemovalKeepsTheSet) {
  std::mt19937_64 rng(5);
  const auto pts = grid();
  for (int trial = 0; trial < 100; ++trial) {
    const Cell c = intersect(random_cell(rng), random_cell(rng));
    const Cell r = remove_redundancy(c);
    EXPECT_LE(r.size(), std::max<std::size_t>(c.size(), 2));
    for (const auto& p : pts) ASSERT_EQ(contains_point(c, p), contains_point(r, p));
    if (!is_empty(c)) {
      EXPECT_TRUE(is_subset(c, r));
      EXPECT_TRUE(is_subset(r, c));
    }
  }
}

TEST(GeometryProperty, PreimageMatchesPointwiseImage) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> entry(-2, 2);
  const auto pts = grid();
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix A{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    const Cell c = random_cell(rng);
    const Cell pre = preimage_linear(c, A);
    for (const auto& p : pts) ASSERT_EQ(contains_point(pre, p), contains_point(c, A * p));
  }
}

TEST(GeometryProperty, SubsetAgreesWithDifference) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const Cell a = intersect(random_cell(rng), random_cell(rng));
    const Cell b = random_cell(rng);
    EXPECT_EQ(is_subset(a, b), difference(Region(a), Region(b)).empty());
  }
}
