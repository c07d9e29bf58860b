#include "polybisim/geometry.hpp"

#include <algorithm>
#include <utility>

#include "polybisim/error.hpp"
#include "polybisim/lp.hpp"

namespace polybisim {
namespace {

void require_dimension(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::kDimension, std::string(what) + ": expected dimension " +
                                           std::to_string(expected) + ", got " +
                                           std::to_string(got));
  }
}

// Scales (normal, offset) by a positive factor so that the normal becomes a
// primitive integer vector.
void normalize(Constraint& c) {
  Integer lcm = 1;
  for (const auto& a : c.normal) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  Integer gcd = 0;
  for (const auto& a : c.normal) {
    const Integer num = a.get_num() * (lcm / a.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd == 0) return;
  const Rational factor(lcm, gcd);
  for (auto& a : c.normal) a *= factor;
  c.offset *= factor;
}

Constraint negate(const Constraint& c) {
  Constraint out;
  out.normal.reserve(c.normal.size());
  for (const auto& a : c.normal) out.normal.push_back(-a);
  out.offset = -c.offset;
  out.strict = !c.strict;
  return out;
}

// Slack LP over (x, t): strict rows get a . x + t <= b, 0 <= t <= 1.
lp::Result slack_lp(const Cell& c) {
  const std::size_t n = c.dimension();
  std::vector<Vector> rows;
  Vector rhs;
  rows.reserve(c.size() + 2);
  rhs.reserve(c.size() + 2);
  for (const auto& con : c.constraints()) {
    Vector row(n + 1);
    std::copy(con.normal.begin(), con.normal.end(), row.begin());
    if (con.strict) row[n] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(con.offset);
  }
  Vector upper(n + 1), lower(n + 1);
  upper[n] = 1;
  lower[n] = -1;
  rows.push_back(std::move(upper));
  rhs.push_back(1);
  rows.push_back(std::move(lower));
  rhs.push_back(0);
  Vector objective(n + 1);
  objective[n] = 1;
  return lp::maximize(rows, rhs, objective);
}

// Maximizes objective over the closure of the cell.
lp::Result maximize_over_closure(const std::vector<Constraint>& constraints,
                                 std::span<const Rational> objective) {
  std::vector<Vector> rows;
  Vector rhs;
  rows.reserve(constraints.size());
  rhs.reserve(constraints.size());
  for (const auto& con : constraints) {
    rows.push_back(con.normal);
    rhs.push_back(con.offset);
  }
  return lp::maximize(rows, rhs, objective);
}

}  // namespace

bool Constraint::holds_at(std::span<const Rational> x) const {
  const Rational lhs = dot(normal, x);
  return strict ? lhs < offset : lhs <= offset;
}

Cell::Cell(std::size_t dimension, std::vector<Constraint> constraints) : dimension_(dimension) {
  if (dimension == 0) throw Error(ErrorCode::kDimension, "cells need dimension >= 1");
  constraints_.reserve(constraints.size());
  for (auto& c : constraints) {
    require_dimension(dimension, c.normal.size(), "constraint");
    if (is_zero(c.normal)) {
      const bool trivially_true = c.strict ? sgn(c.offset) > 0 : sgn(c.offset) >= 0;
      if (trivially_true) continue;
      *this = empty(dimension);
      return;
    }
    normalize(c);
    constraints_.push_back(std::move(c));
  }
}

Cell Cell::empty(std::size_t dimension) {
  Cell cell(dimension);
  Vector e(dimension);
  e[0] = 1;
  cell.constraints_.push_back({e, 0, true});
  e[0] = -1;
  cell.constraints_.push_back({std::move(e), 0, true});
  return cell;
}

Cell Cell::box(std::span<const Rational> lo, std::span<const Rational> hi) {
  require_dimension(lo.size(), hi.size(), "box bounds");
  const std::size_t n = lo.size();
  std::vector<Constraint> rows;
  for (std::size_t k = 0; k < n; ++k) {
    Vector e(n);
    e[k] = 1;
    rows.push_back({e, hi[k], false});
    e[k] = -1;
    rows.push_back({std::move(e), -lo[k], false});
  }
  return Cell(n, std::move(rows));
}

Cell Cell::from_halfspaces(const Matrix& H, std::span<const Rational> h) {
  require_dimension(H.rows(), h.size(), "halfspace offsets");
  std::vector<Constraint> rows;
  for (std::size_t r = 0; r < H.rows(); ++r) {
    rows.push_back({Vector(H.row(r).begin(), H.row(r).end()), h[r], false});
  }
  return Cell(H.cols(), std::move(rows));
}

Region::Region(std::size_t dimension, std::vector<Cell> cells) : dimension_(dimension) {
  for (auto& c : cells) {
    require_dimension(dimension, c.dimension(), "region cell");
    if (!is_empty(c)) cells_.push_back(std::move(c));
  }
}

Region::Region(Cell cell) : dimension_(cell.dimension()) {
  if (!is_empty(cell)) cells_.push_back(std::move(cell));
}

void Region::add_unchecked(Cell cell) {
  require_dimension(dimension_, cell.dimension(), "region cell");
  cells_.push_back(std::move(cell));
}

bool is_empty(const Cell& c) {
  if (c.constraints().empty()) return false;
  const lp::Result r = slack_lp(c);
  return r.status != lp::Status::kOptimal || sgn(r.value) <= 0;
}

Cell intersect(const Cell& a, const Cell& b) {
  require_dimension(a.dimension(), b.dimension(), "intersect");
  std::vector<Constraint> rows = a.constraints();
  rows.insert(rows.end(), b.constraints().begin(), b.constraints().end());
  return Cell(a.dimension(), std::move(rows));
}

Region complement(const Cell& c) {
  std::vector<Cell> pieces;
  std::vector<Constraint> prefix;
  for (const auto& row : c.constraints()) {
    std::vector<Constraint> piece = prefix;
    piece.push_back(negate(row));
    pieces.emplace_back(c.dimension(), std::move(piece));
    prefix.push_back(row);
  }
  return Region(c.dimension(), std::move(pieces));
}

Region difference(const Region& a, const Region& b) {
  require_dimension(a.dimension(), b.dimension(), "difference");
  std::vector<Cell> current = a.cells();
  for (const Cell& cut : b.cells()) {
    std::vector<Cell> next;
    for (Cell& c : current) {
      if (!intersects(c, cut)) {
        next.push_back(std::move(c));
        continue;
      }
      // c \ cut as the first-violated-row decomposition of cut, inside c.
      std::vector<Constraint> prefix = c.constraints();
      for (const auto& row : cut.constraints()) {
        std::vector<Constraint> rows = prefix;
        rows.push_back(negate(row));
        Cell piece(c.dimension(), std::move(rows));
        if (!is_empty(piece)) next.push_back(remove_redundancy(piece));
        prefix.push_back(row);
      }
    }
    current = std::move(next);
  }
  Region out(a.dimension());
  for (auto& c : current) out.add_unchecked(std::move(c));
  return out;
}

Cell preimage_linear(const Cell& c, const Matrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::kDimension, "preimage needs a square matrix");
  require_dimension(A.rows(), c.dimension(), "preimage");
  std::vector<Constraint> rows;
  rows.reserve(c.size());
  for (const auto& con : c.constraints()) {
    rows.push_back({A.transpose_times(con.normal), con.offset, con.strict});
  }
  return Cell(c.dimension(), std::move(rows));
}

bool contains_point(const Cell& c, std::span<const Rational> p) {
  require_dimension(c.dimension(), p.size(), "contains_point");
  return std::all_of(c.constraints().begin(), c.constraints().end(),
                     [&](const Constraint& con) { return con.holds_at(p); });
}

bool contains_point(const Region& r, std::span<const Rational> p) {
  return std::any_of(r.cells().begin(), r.cells().end(),
                     [&](const Cell& c) { return contains_point(c, p); });
}

Point sample_point(const Cell& c) {
  if (c.constraints().empty()) return Point(c.dimension());
  lp::Result r = slack_lp(c);
  if (r.status != lp::Status::kOptimal || sgn(r.value) <= 0) {
    throw Error(ErrorCode::kPrecondition, "sample_point on an empty cell");
  }
  r.point.resize(c.dimension());
  return r.point;
}

Cell remove_redundancy(const Cell& c) {
  if (is_empty(c)) return Cell::empty(c.dimension());

  // Parallel rows: keep the tightest; on equal offsets the strict one.
  std::vector<Constraint> rows;
  for (const auto& con : c.constraints()) {
    auto same = std::find_if(rows.begin(), rows.end(),
                             [&](const Constraint& r) { return r.normal == con.normal; });
    if (same == rows.end()) {
      rows.push_back(con);
    } else if (con.offset < same->offset || (con.offset == same->offset && con.strict)) {
      *same = con;
    }
  }

  // Row k is redundant iff the others leave no point violating it.
  for (std::size_t k = 0; k < rows.size();) {
    std::vector<Constraint> probe;
    probe.reserve(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != k) probe.push_back(rows[j]);
    }
    probe.push_back(negate(rows[k]));
    if (is_empty(Cell(c.dimension(), std::move(probe)))) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return Cell(c.dimension(), std::move(rows));
}

bool is_subset(const Cell& a, const Cell& b) {
  require_dimension(a.dimension(), b.dimension(), "is_subset");
  if (is_empty(a)) return true;
  for (const auto& row : b.constraints()) {
    std::vector<Constraint> probe = a.constraints();
    probe.push_back(negate(row));
    if (!is_empty(Cell(a.dimension(), std::move(probe)))) return false;
  }
  return true;
}

bool is_subset(const Region& a, const Region& b) { return difference(a, b).empty(); }

bool intersects(const Cell& a, const Cell& b) { return !is_empty(intersect(a, b)); }

std::optional<Box> bounding_box(const Cell& c) {
  const std::size_t n = c.dimension();
  Box box{Vector(n), Vector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    Vector e(n);
    e[k] = 1;
    lp::Result hi = maximize_over_closure(c.constraints(), e);
    if (hi.status != lp::Status::kOptimal) return std::nullopt;
    e[k] = -1;
    lp::Result lo = maximize_over_closure(c.constraints(), e);
    if (lo.status != lp::Status::kOptimal) return std::nullopt;
    box.hi[k] = hi.value;
    box.lo[k] = -lo.value;
  }
  return box;
}

bool boxes_disjoint(const Box& a, const Box& b) {
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return true;
  }
  return false;
}

bool is_pairwise_disjoint(const Region& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (intersects(r.cells()[i], r.cells()[j])) return false;
    }
  }
  return true;
}

}  // namespace polybisim
