#pragma once

#include <cstddef>
#include <vector>

namespace polybisim {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Tarjan's algorithm, iterative. Returns the component id of every node;
/// ids are in reverse topological order of the condensation.
std::vector<std::size_t> strongly_connected_components(const Adjacency& succ);

/// Nodes lying on a cycle of length >= 1 (nontrivial SCC or self-loop).
std::vector<bool> on_cycle(const Adjacency& succ);

/// Nodes reachable from the seeds by paths of length >= 0.
std::vector<bool> reachable(const Adjacency& succ, const std::vector<bool>& seeds);

Adjacency reverse(const Adjacency& succ);

}  // namespace polybisim
