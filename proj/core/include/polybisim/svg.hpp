#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "polybisim/abstraction.hpp"

namespace polybisim {

/// Vertices of the closure of a bounded 2-D cell in counter-clockwise order
/// (one or two points for degenerate cells).
std::vector<Point> closure_vertices(const Cell& c);

/// Partition blocks, sublevel-set outlines and the highlight region drawn
/// over X. Output depends only on the inputs. Returns false and writes
/// nothing unless the state space is 2-D.
bool write_svg(std::ostream& out, const Workspace& ws, const Partition& p, const Region& highlight);

}  // namespace polybisim
