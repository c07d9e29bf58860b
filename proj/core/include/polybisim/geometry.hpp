#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polybisim/linalg.hpp"

namespace polybisim {

/// normal . x <= offset, or normal . x < offset when strict.
/// Normals are kept as primitive integer vectors so parallel constraints
/// compare equal.
struct Constraint {
  Vector normal;
  Rational offset;
  bool strict = false;

  bool holds_at(std::span<const Rational> x) const;
  bool operator==(const Constraint&) const = default;
};

/// A partially open convex polyhedron: the conjunction of its constraints.
/// Constraints with a zero normal are resolved at construction (dropped when
/// trivially true, turned into a canonical empty cell otherwise).
class Cell {
 public:
  explicit Cell(std::size_t dimension) : dimension_(dimension) {}
  Cell(std::size_t dimension, std::vector<Constraint> constraints);

  static Cell full_space(std::size_t dimension) { return Cell(dimension); }
  static Cell empty(std::size_t dimension);
  /// Closed box lo <= x <= hi.
  static Cell box(std::span<const Rational> lo, std::span<const Rational> hi);
  /// Closed polytope {x : H x <= h}.
  static Cell from_halfspaces(const Matrix& H, std::span<const Rational> h);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }

  bool operator==(const Cell&) const = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<Constraint> constraints_;
};

/// Finite union of pairwise-disjoint non-empty cells.
class Region {
 public:
  explicit Region(std::size_t dimension) : dimension_(dimension) {}
  /// Drops empty cells. Disjointness is the caller's contract; see
  /// is_pairwise_disjoint() for an exact audit.
  Region(std::size_t dimension, std::vector<Cell> cells);
  explicit Region(Cell cell);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }

  /// Appends a cell already known to be non-empty and disjoint from the rest.
  void add_unchecked(Cell cell);

 private:
  std::size_t dimension_ = 0;
  std::vector<Cell> cells_;
};

/// Axis-aligned bounds of a cell's closure.
struct Box {
  Vector lo;
  Vector hi;
};

bool is_empty(const Cell& c);
Cell intersect(const Cell& a, const Cell& b);
Region complement(const Cell& c);
Region difference(const Region& a, const Region& b);
/// {x : A x in c}.
Cell preimage_linear(const Cell& c, const Matrix& A);
bool contains_point(const Cell& c, std::span<const Rational> p);
bool contains_point(const Region& r, std::span<const Rational> p);
/// A point of c maximizing the common slack of its strict rows.
Point sample_point(const Cell& c);
Cell remove_redundancy(const Cell& c);

/// True iff a is a subset of b, decided exactly.
bool is_subset(const Cell& a, const Cell& b);
bool is_subset(const Region& a, const Region& b);
bool intersects(const Cell& a, const Cell& b);
/// Exact bounding box of the closure; nullopt if empty or unbounded.
std::optional<Box> bounding_box(const Cell& c);
/// Closed boxes that do not overlap imply disjoint cells.
bool boxes_disjoint(const Box& a, const Box& b);
bool is_pairwise_disjoint(const Region& r);

}  // namespace polybisim
