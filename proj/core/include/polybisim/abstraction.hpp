#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polybisim/geometry.hpp"
#include "polybisim/lyapunov.hpp"

namespace polybisim {

/// A labeled closed polytope inside X \ D.
struct ObservedRegion {
  std::string label;
  Cell cell = Cell(1);
};

/// Single-valued observation of the embedding transition system.
class Observation {
 public:
  enum class Kind { kRegion, kEmpty, kTarget };

  static Observation region(std::size_t index) { return Observation(Kind::kRegion, index); }
  static Observation none() { return Observation(Kind::kEmpty, 0); }
  static Observation target() { return Observation(Kind::kTarget, 0); }

  Kind kind() const { return kind_; }
  /// Index into the region list; only meaningful for kRegion.
  std::size_t region_index() const { return index_; }

  bool operator==(const Observation&) const = default;

 private:
  Observation(Kind kind, std::size_t index) : kind_(kind), index_(index) {}
  Kind kind_;
  std::size_t index_;
};

/// Label used in exports and as an LTL atom: the region label, "EMPTY" or
/// "PI_D".
std::string observation_name(const Observation& o, const std::vector<ObservedRegion>& regions);

using BlockId = std::size_t;

struct Block {
  BlockId id = 0;
  Cell cell = Cell(1);
  Observation observation = Observation::none();
  std::size_t slice_index = 0;
  std::optional<BlockId> successor;
  std::optional<Box> box;  // bounding box of the closure, used as a filter
};

/// Everything derived from the problem before refinement starts: X, D, the
/// level sequence and its slices.
class Workspace {
 public:
  Workspace(LinearSystem system, PolyhedralLF lf, Rational gamma_d, Rational gamma_x,
            std::vector<ObservedRegion> regions);

  std::size_t dimension() const { return system_.dimension(); }
  const LinearSystem& system() const { return system_; }
  const PolyhedralLF& lf() const { return lf_; }
  const Rational& gamma_d() const { return gamma_d_; }
  const Rational& gamma_x() const { return gamma_x_; }
  const std::vector<ObservedRegion>& regions() const { return regions_; }

  const Cell& working_set() const { return working_; }
  const Cell& target_set() const { return target_; }
  const Region& outside_target() const { return outside_target_; }
  const LevelSequence& levels() const { return levels_; }
  const std::vector<Region>& slices() const { return slices_; }

  bool in_working_set(std::span<const Rational> x) const { return contains_point(working_, x); }
  bool in_target(std::span<const Rational> x) const { return contains_point(target_, x); }

 private:
  LinearSystem system_;
  PolyhedralLF lf_;
  Rational gamma_d_;
  Rational gamma_x_;
  std::vector<ObservedRegion> regions_;
  Cell working_;
  Cell target_;
  Region outside_target_;
  LevelSequence levels_;
  std::vector<Region> slices_;
};

/// Throws kRegionDomain / kRegionOverlap when the regions are not pairwise
/// disjoint subsets of X \ D.
void validate_regions(const std::vector<ObservedRegion>& regions, const Cell& working,
                      const Cell& target);

/// Observation of x: PI_D in D, the containing region's label, else EMPTY.
/// Throws kOutsideDomain for x outside X.
Observation observation_of(std::span<const Rational> x, const std::vector<ObservedRegion>& regions,
                           const Cell& working, const Cell& target);

class Partition {
 public:
  Partition(std::size_t dimension, std::vector<Region> slices);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Region>& slices() const { return slices_; }
  std::size_t size() const { return blocks_.size(); }

  const Block& block(BlockId id) const;
  Block& block(BlockId id);
  bool contains(BlockId id) const { return index_.contains(id); }

  /// Adds a block with a fresh id; the cell must be non-empty and disjoint
  /// from every existing block.
  BlockId add_block(Cell cell, Observation observation, std::size_t slice_index);

  /// Splits every block meeting r into its pieces inside and outside
  /// r. Pieces inherit observation and slice index, but not the successor.
  /// Returns the ids of the blocks whose union is exactly r.
  std::vector<BlockId> refine(const Region& r);

  /// Exact audits; each throws kInvariant with a description on failure.
  void audit_disjoint() const;
  void audit_slices() const;
  void audit_coverage(const Cell& working) const;
  void audit_observations(const std::vector<ObservedRegion>& regions, const Cell& target) const;

 private:
  void reindex();

  std::size_t dimension_;
  std::vector<Region> slices_;
  std::vector<Block> blocks_;
  std::unordered_map<BlockId, std::size_t> index_;
  BlockId next_id_ = 0;
};

Partition refine(Partition p, const Region& r);

/// Observation partition of X refined by every slice, built one slice cell
/// at a time. S_0 = D stays one block.
Partition initial_partition(const Workspace& ws);

/// {x in X \ D : A x in target}.
Region find_pre(const Region& target, const Workspace& ws);

/// Finite deterministic transition system over the partition blocks.
class QuotientTS {
 public:
  struct State {
    BlockId id;
    std::size_t slice_index;
    Observation observation;
    BlockId successor;
  };

  /// States are stored sorted by (slice_index, id).
  explicit QuotientTS(std::vector<State> states);

  const std::vector<State>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const State& state(BlockId id) const { return states_[index_of(id)]; }
  std::size_t index_of(BlockId id) const;
  BlockId target_state() const { return target_; }

 private:
  std::vector<State> states_;
  std::unordered_map<BlockId, std::size_t> index_;
  BlockId target_ = 0;
};

struct Abstraction {
  QuotientTS quotient;
  Partition partition;
};

/// Backward refinement from D, one slice at a time. Certifies the Lyapunov
/// function first: verify_contraction must give rho* <= rho, or else
/// slice_descent_check must pass; otherwise throws kContraction.
Abstraction build_quotient(const Workspace& ws);

/// Block containing x. Throws kOutsideDomain when x is not in X.
BlockId cell_of(const Partition& p, std::span<const Rational> x);

/// Observations along the unique quotient run from start, up to (excluding)
/// the first visit of the D-state; PI_D repeats forever afterwards when
/// reached_target is set.
struct QuotientWord {
  std::vector<Observation> prefix;
  bool reached_target = false;
};
QuotientWord quotient_word(const QuotientTS& q, BlockId start, std::size_t max_len);

/// A B is inside successor(B), decided exactly from the H-representations.
bool image_contained(const Block& block, const Block& successor, const Matrix& A);

}  // namespace polybisim
