#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "polybisim/abstraction.hpp"
#include "polybisim/ltl.hpp"
#include "polybisim/verify.hpp"

namespace polybisim {

/// Exact run of the embedding system. points ends with the first point in D;
/// word holds the observations of the points before it, and PI_D repeats
/// forever afterwards.
struct Trajectory {
  std::vector<Point> points;
  std::vector<Observation> word;
};

/// Throws kOutsideDomain when x0 is not in X, and kInvariant when D is not
/// reached within N steps.
Trajectory simulate(const Workspace& ws, const Point& x0);

LassoWord to_lasso(const Trajectory& t, const std::vector<ObservedRegion>& regions);

/// A point of the cell drawn at random: a segment from an interior sample
/// toward a random vertex of the closure. Always lies in the cell.
Point sample_in_cell(const Cell& c, std::mt19937_64& rng);

/// Rejection sample over the bounding box of X on a 1/1024 grid.
Point sample_in_working_set(const Workspace& ws, std::mt19937_64& rng);

struct SampleCheck {
  std::size_t index = 0;
  Point x;
  BlockId block = 0;
  bool word_ok = false;
  bool verdict_ok = false;
};

struct CrossValidation {
  std::vector<SampleCheck> samples;
  std::size_t word_mismatches = 0;
  std::size_t verdict_mismatches = 0;

  bool ok() const { return word_mismatches == 0 && verdict_mismatches == 0; }
};

/// Checks concrete words against quotient words, and the formula evaluated on
/// the concrete word against membership in the satisfying set. Three samples
/// in four are block-directed (cycling over blocks in shuffled order); the
/// rest are uniform over X.
CrossValidation cross_validate(const Workspace& ws, const Abstraction& abs, const Formula& f,
                               const SatisfyingSet& sat, std::size_t sample_count,
                               std::uint64_t seed);

/// Summary line followed by one `sample <k> x=<...> word_ok=<bool> verdict_ok=<bool>` line per sample.
void write_report(std::ostream& out, const CrossValidation& cv);

}  // namespace polybisim
