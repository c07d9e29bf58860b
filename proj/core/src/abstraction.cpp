#include "polybisim/abstraction.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "polybisim/error.hpp"

namespace polybisim {
namespace {

[[noreturn]] void invariant(const std::string& what) { throw Error(ErrorCode::kInvariant, what); }

Region single(Cell cell) {
  Region r(cell.dimension());
  r.add_unchecked(std::move(cell));
  return r;
}

}  // namespace

std::string observation_name(const Observation& o, const std::vector<ObservedRegion>& regions) {
  switch (o.kind()) {
    case Observation::Kind::kRegion: return regions.at(o.region_index()).label;
    case Observation::Kind::kEmpty: return "EMPTY";
    case Observation::Kind::kTarget: return "PI_D";
  }
  return "?";
}

namespace {

// Labels double as formula atoms, so they must lex as one and not collide
// with keywords or the target atom.
bool usable_label(const std::string& label) {
  static const std::set<std::string> reserved{"pid", "true", "false", "X", "F", "G", "U"};
  if (label.empty() || !std::isalpha(static_cast<unsigned char>(label.front()))) return false;
  const bool word = std::all_of(label.begin(), label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
  return word && !reserved.contains(label);
}

}  // namespace

void validate_regions(const std::vector<ObservedRegion>& regions, const Cell& working,
                      const Cell& target) {
  std::set<std::string> labels;
  for (const auto& r : regions) {
    if (r.cell.dimension() != working.dimension()) {
      throw Error(ErrorCode::kDimension, "region '" + r.label + "' has the wrong dimension");
    }
    if (!usable_label(r.label)) {
      throw Error(ErrorCode::kMalformed, "region label '" + r.label +
                                             "' is not an identifier or is reserved");
    }
    if (!labels.insert(r.label).second) {
      throw Error(ErrorCode::kMalformed, "duplicate region label '" + r.label + "'");
    }
    if (is_empty(r.cell)) {
      throw Error(ErrorCode::kRegionDomain, "region '" + r.label + "' is empty");
    }
    if (!is_subset(r.cell, working) || intersects(r.cell, target)) {
      throw Error(ErrorCode::kRegionDomain, "region '" + r.label + "' is not inside X \\ D");
    }
  }
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      if (intersects(regions[i].cell, regions[j].cell)) {
        throw Error(ErrorCode::kRegionOverlap,
                    "regions '" + regions[i].label + "' and '" + regions[j].label + "' overlap");
      }
    }
  }
}

Workspace::Workspace(LinearSystem system, PolyhedralLF lf, Rational gamma_d, Rational gamma_x,
                     std::vector<ObservedRegion> regions)
    : system_(std::move(system)),
      lf_(std::move(lf)),
      gamma_d_(std::move(gamma_d)),
      gamma_x_(std::move(gamma_x)),
      regions_(std::move(regions)),
      working_(lf_.dimension()),
      target_(lf_.dimension()),
      outside_target_(lf_.dimension()) {
  if (system_.dimension() != lf_.dimension()) {
    throw Error(ErrorCode::kDimension, "A and L disagree on the state dimension");
  }
  levels_ = level_sequence(gamma_d_, gamma_x_, lf_.rho());
  working_ = sublevel_cell(lf_, gamma_x_);
  target_ = sublevel_cell(lf_, gamma_d_);
  outside_target_ = difference(Region(working_), Region(target_));
  slices_ = polybisim::slices(lf_, levels_);
  validate_regions(regions_, working_, target_);
}

Observation observation_of(std::span<const Rational> x, const std::vector<ObservedRegion>& regions,
                           const Cell& working, const Cell& target) {
  if (!contains_point(working, x)) throw Error(ErrorCode::kOutsideDomain, "point outside X");
  if (contains_point(target, x)) return Observation::target();
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (contains_point(regions[i].cell, x)) return Observation::region(i);
  }
  return Observation::none();
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::size_t dimension, std::vector<Region> slices)
    : dimension_(dimension), slices_(std::move(slices)) {}

const Block& Partition::block(BlockId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::kPrecondition, "unknown block id");
  return blocks_[it->second];
}

Block& Partition::block(BlockId id) {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::kPrecondition, "unknown block id");
  return blocks_[it->second];
}

BlockId Partition::add_block(Cell cell, Observation observation, std::size_t slice_index) {
  Block b;
  b.id = next_id_++;
  b.box = bounding_box(cell);
  b.cell = std::move(cell);
  b.observation = observation;
  b.slice_index = slice_index;
  index_.emplace(b.id, blocks_.size());
  blocks_.push_back(std::move(b));
  return blocks_.back().id;
}

void Partition::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < blocks_.size(); ++i) index_.emplace(blocks_[i].id, i);
}

std::vector<BlockId> Partition::refine(const Region& r) {
  if (r.dimension() != dimension_) throw Error(ErrorCode::kDimension, "refine: dimension");
  std::vector<BlockId> inside;
  if (r.empty()) return inside;

  std::vector<std::optional<Box>> r_boxes;
  r_boxes.reserve(r.size());
  for (const auto& c : r.cells()) r_boxes.push_back(bounding_box(c));

  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (Block& b : blocks_) {
    Region hits(dimension_);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (b.box && r_boxes[j] && boxes_disjoint(*b.box, *r_boxes[j])) continue;
      if (intersects(b.cell, r.cells()[j])) hits.add_unchecked(r.cells()[j]);
    }
    if (hits.empty()) {
      out.push_back(std::move(b));
      continue;
    }

    const Region rest = difference(single(b.cell), hits);
    if (rest.empty() && hits.size() == 1) {
      inside.push_back(b.id);
      out.push_back(std::move(b));
      continue;
    }

    auto emit = [&](Cell cell) {
      Block piece;
      piece.id = next_id_++;
      piece.box = bounding_box(cell);
      piece.cell = std::move(cell);
      piece.observation = b.observation;
      piece.slice_index = b.slice_index;
      out.push_back(std::move(piece));
      return out.back().id;
    };
    for (const Cell& h : hits.cells()) inside.push_back(emit(remove_redundancy(intersect(b.cell, h))));
    for (const Cell& c : rest.cells()) emit(c);
  }
  blocks_ = std::move(out);
  reindex();
  return inside;
}

void Partition::audit_disjoint() const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      const Block& a = blocks_[i];
      const Block& b = blocks_[j];
      if (a.box && b.box && boxes_disjoint(*a.box, *b.box)) continue;
      if (intersects(a.cell, b.cell)) {
        invariant("blocks " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                  " overlap");
      }
    }
  }
}

void Partition::audit_slices() const {
  for (const Block& b : blocks_) {
    if (b.slice_index >= slices_.size()) invariant("block slice index out of range");
    if (!is_subset(single(b.cell), slices_[b.slice_index])) {
      invariant("block " + std::to_string(b.id) + " leaves slice " +
                std::to_string(b.slice_index));
    }
  }
}

void Partition::audit_coverage(const Cell& working) const {
  Region all_slices(dimension_);
  for (const Region& s : slices_) {
    for (const Cell& c : s.cells()) all_slices.add_unchecked(c);
  }
  if (!is_subset(Region(working), all_slices) || !is_subset(all_slices, Region(working))) {
    invariant("slices do not cover the working set exactly");
  }
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    Region blocks(dimension_);
    for (const Block& b : blocks_) {
      if (b.slice_index == i) blocks.add_unchecked(b.cell);
    }
    if (!is_subset(slices_[i], blocks)) {
      invariant("blocks of slice " + std::to_string(i) + " do not cover it");
    }
  }
}

void Partition::audit_observations(const std::vector<ObservedRegion>& regions,
                                   const Cell& target) const {
  for (const Block& b : blocks_) {
    bool ok = true;
    switch (b.observation.kind()) {
      case Observation::Kind::kTarget:
        ok = is_subset(b.cell, target);
        break;
      case Observation::Kind::kRegion:
        ok = is_subset(b.cell, regions.at(b.observation.region_index()).cell);
        break;
      case Observation::Kind::kEmpty:
        ok = !intersects(b.cell, target);
        for (const auto& r : regions) ok = ok && !intersects(b.cell, r.cell);
        break;
    }
    if (!ok) invariant("block " + std::to_string(b.id) + " is not observation-pure");
  }
}

Partition refine(Partition p, const Region& r) {
  p.refine(r);
  return p;
}

Partition initial_partition(const Workspace& ws) {
  const std::size_t n = ws.dimension();
  Partition p(n, ws.slices());
  p.add_block(ws.slices().at(0).cells().at(0), Observation::target(), 0);

  Region all_regions(n);
  for (const auto& r : ws.regions()) all_regions.add_unchecked(r.cell);

  for (std::size_t i = 1; i < ws.slices().size(); ++i) {
    for (const Cell& c : ws.slices()[i].cells()) {
      for (std::size_t j = 0; j < ws.regions().size(); ++j) {
        Cell piece = intersect(c, ws.regions()[j].cell);
        if (!is_empty(piece)) p.add_block(remove_redundancy(piece), Observation::region(j), i);
      }
      const Region rest = difference(single(c), all_regions);
      for (const Cell& piece : rest.cells()) p.add_block(piece, Observation::none(), i);
    }
  }
  return p;
}

Region find_pre(const Region& target, const Workspace& ws) {
  Region out(ws.dimension());
  const Region d = single(ws.target_set());
  for (const Cell& c : target.cells()) {
    Cell within = intersect(preimage_linear(c, ws.system().A()), ws.working_set());
    if (is_empty(within)) continue;
    const Region outside = difference(single(remove_redundancy(within)), d);
    for (const Cell& piece : outside.cells()) out.add_unchecked(piece);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotient

QuotientTS::QuotientTS(std::vector<State> states) : states_(std::move(states)) {
  std::sort(states_.begin(), states_.end(), [](const State& a, const State& b) {
    return a.slice_index != b.slice_index ? a.slice_index < b.slice_index : a.id < b.id;
  });
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i].id, i);

  std::size_t targets = 0;
  for (const State& s : states_) {
    if (!index_.contains(s.successor)) invariant("transition to an unknown state");
    if (s.successor == s.id) {
      ++targets;
      target_ = s.id;
      if (s.observation.kind() != Observation::Kind::kTarget) invariant("self-loop outside D");
    }
  }
  if (targets != 1) invariant("expected exactly one self-looping D-state");
}

std::size_t QuotientTS::index_of(BlockId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::kPrecondition, "unknown quotient state");
  return it->second;
}

Abstraction build_quotient(const Workspace& ws) {
  const Rational rho_star = verify_contraction(ws.lf(), ws.system());
  if (rho_star > ws.lf().rho() && !slice_descent_check(ws.lf(), ws.system(), ws.levels())) {
    throw Error(ErrorCode::kContraction, "rho* = " + to_string(rho_star) +
                                             " exceeds rho and slices do not descend");
  }

  Partition p = initial_partition(ws);
  const BlockId d_block = p.blocks().front().id;
  p.block(d_block).successor = d_block;

  for (std::size_t i = 0; i < ws.levels().count(); ++i) {
    std::vector<std::pair<BlockId, Cell>> targets;
    for (const Block& b : p.blocks()) {
      if (b.slice_index == i) targets.emplace_back(b.id, b.cell);
    }
    for (const auto& [target_id, cell] : targets) {
      const Region pre = find_pre(single(cell), ws);
      for (BlockId id : p.refine(pre)) {
        Block& b = p.block(id);
        if (b.successor && *b.successor != target_id) {
          invariant("block " + std::to_string(id) + " reaches two targets");
        }
        b.successor = target_id;
      }
    }
  }

  std::vector<QuotientTS::State> states;
  states.reserve(p.size());
  for (const Block& b : p.blocks()) {
    if (!b.successor) invariant("block " + std::to_string(b.id) + " has no successor");
    states.push_back({b.id, b.slice_index, b.observation, *b.successor});
  }
  return {QuotientTS(std::move(states)), std::move(p)};
}

BlockId cell_of(const Partition& p, std::span<const Rational> x) {
  if (x.size() != p.dimension()) throw Error(ErrorCode::kDimension, "cell_of: bad point size");
  for (const Block& b : p.blocks()) {
    if (b.box) {
      bool outside = false;
      for (std::size_t k = 0; k < x.size() && !outside; ++k) {
        outside = x[k] < b.box->lo[k] || x[k] > b.box->hi[k];
      }
      if (outside) continue;
    }
    if (contains_point(b.cell, x)) return b.id;
  }
  throw Error(ErrorCode::kOutsideDomain, "point is not in any block");
}

QuotientWord quotient_word(const QuotientTS& q, BlockId start, std::size_t max_len) {
  QuotientWord w;
  BlockId current = start;
  while (current != q.target_state() && w.prefix.size() < max_len) {
    const auto& s = q.state(current);
    w.prefix.push_back(s.observation);
    current = s.successor;
  }
  w.reached_target = current == q.target_state();
  return w;
}

bool image_contained(const Block& block, const Block& successor, const Matrix& A) {
  const Region outside = complement(successor.cell);
  for (const Cell& piece : outside.cells()) {
    if (intersects(block.cell, preimage_linear(piece, A))) return false;
  }
  return true;
}

}  // namespace polybisim
