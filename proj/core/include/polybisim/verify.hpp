#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polybisim/abstraction.hpp"
#include "polybisim/buchi.hpp"
#include "polybisim/graph.hpp"
#include "polybisim/ltl.hpp"

namespace polybisim {

/// Atom that holds exactly on the target set D.
inline constexpr const char* kTargetAtom = "pid";

/// Letter emitted by a state with this observation.
Letter letter_of(const Observation& o, const std::vector<ObservedRegion>& regions);

/// Quotient word from a state as a lasso ending in pid forever.
LassoWord word_of(const QuotientTS& q, BlockId start, const std::vector<ObservedRegion>& regions);

struct Digraph {
  Adjacency successors;
  std::vector<bool> accepting;

  std::size_t size() const { return successors.size(); }
};

/// Quotient x Buchi product without a fixed initial quotient state. Node
/// (i, s) pairs the i-th quotient state (in QuotientTS order) with automaton
/// state s and has index i * automaton_size + s.
struct ProductAutomaton {
  Digraph graph;
  std::size_t quotient_size = 0;
  std::size_t automaton_size = 0;
  std::vector<std::size_t> automaton_initial;

  std::size_t node(std::size_t quotient_index, std::size_t automaton_state) const {
    return quotient_index * automaton_size + automaton_state;
  }
};

/// Throws kUnknownAtom when the automaton mentions an atom that is neither a
/// region label nor pid.
ProductAutomaton product(const QuotientTS& q, const BuchiAutomaton& b,
                         const std::vector<ObservedRegion>& regions);

/// Largest set of accepting nodes each reaching another member in one or
/// more steps, by iterated pruning.
std::vector<bool> f_star_fixpoint(const Digraph& g);

/// Same set, as the accepting nodes that reach an accepting node on a cycle.
std::vector<bool> f_star_scc(const Digraph& g);

struct SatisfyingSet {
  std::vector<BlockId> states;  // in QuotientTS order
  Region region;
};

/// Quotient states q such that some (q, s0) reaches F* (zero steps allowed).
SatisfyingSet satisfying_states(const ProductAutomaton& p, const std::vector<bool>& fstar,
                                const QuotientTS& q, const Partition& partition);

/// Convenience: formula text to satisfying set over an abstraction.
SatisfyingSet satisfying_states(const Formula& f, const Abstraction& abs,
                                const std::vector<ObservedRegion>& regions);

}  // namespace polybisim
