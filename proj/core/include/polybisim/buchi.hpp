#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polybisim/ltl.hpp"

namespace polybisim {

struct Literal {
  std::size_t atom;
  bool positive;
};

/// s --guard--> t, where guard is a conjunction of literals (empty = true).
struct BuchiEdge {
  std::size_t from;
  std::size_t to;
  std::vector<Literal> guard;
};

class BuchiAutomaton {
 public:
  BuchiAutomaton(std::vector<std::string> atoms, std::size_t state_count,
                 std::vector<std::size_t> initial, std::vector<BuchiEdge> edges,
                 std::vector<bool> accepting);

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return state_count_; }
  const std::vector<std::size_t>& initial() const { return initial_; }
  const std::vector<BuchiEdge>& edges() const { return edges_; }
  /// Indices into edges() leaving state s.
  const std::vector<std::size_t>& out_edges(std::size_t s) const { return out_[s]; }
  bool accepting(std::size_t s) const { return accepting_[s]; }

  /// Index of the letter's atom in atoms(), or atoms().size() when the letter
  /// is empty or its atom is not mentioned by the automaton.
  std::size_t letter_index(const Letter& letter) const;
  /// Guard evaluated against a letter given by letter_index().
  static bool guard_holds(const BuchiEdge& edge, std::size_t letter_index);

 private:
  std::vector<std::string> atoms_;
  std::size_t state_count_;
  std::vector<std::size_t> initial_;
  std::vector<BuchiEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<bool> accepting_;
};

/// NNF, tableau expansion to a node-labeled generalized Buchi automaton, then
/// counter-based degeneralization. State 0 is the sole initial state.
BuchiAutomaton to_buchi(const Formula& f);

/// True iff some run over prefix . cycle^omega visits accepting states
/// infinitely often.
bool lasso_accepts(const BuchiAutomaton& b, const LassoWord& w);

}  // namespace polybisim
