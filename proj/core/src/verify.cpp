#include "polybisim/verify.hpp"

#include <algorithm>

#include "polybisim/error.hpp"

namespace polybisim {

Letter letter_of(const Observation& o, const std::vector<ObservedRegion>& regions) {
  switch (o.kind()) {
    case Observation::Kind::kRegion: return Letter::of(regions.at(o.region_index()).label);
    case Observation::Kind::kTarget: return Letter::of(kTargetAtom);
    case Observation::Kind::kEmpty: break;
  }
  return Letter::none();
}

LassoWord word_of(const QuotientTS& q, BlockId start, const std::vector<ObservedRegion>& regions) {
  const QuotientWord w = quotient_word(q, start, q.size());
  if (!w.reached_target) {
    throw Error(ErrorCode::kInvariant, "quotient run from state " + std::to_string(start) +
                                           " never reaches the target state");
  }
  std::vector<Letter> prefix;
  prefix.reserve(w.prefix.size());
  for (const auto& o : w.prefix) prefix.push_back(letter_of(o, regions));
  return LassoWord(std::move(prefix), {Letter::of(kTargetAtom)});
}

ProductAutomaton product(const QuotientTS& q, const BuchiAutomaton& b,
                         const std::vector<ObservedRegion>& regions) {
  for (const auto& atom : b.atoms()) {
    const bool known = atom == kTargetAtom ||
                       std::any_of(regions.begin(), regions.end(),
                                   [&](const ObservedRegion& r) { return r.label == atom; });
    if (!known) throw Error(ErrorCode::kUnknownAtom, "formula atom '" + atom + "' is not declared");
  }

  ProductAutomaton p;
  p.quotient_size = q.size();
  p.automaton_size = b.size();
  p.automaton_initial = b.initial();
  const std::size_t n = p.quotient_size * p.automaton_size;
  p.graph.successors.assign(n, {});
  p.graph.accepting.assign(n, false);

  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& state = q.states()[i];
    const std::size_t next = q.index_of(state.successor);
    const std::size_t letter = b.letter_index(letter_of(state.observation, regions));
    for (std::size_t s = 0; s < b.size(); ++s) {
      const std::size_t from = p.node(i, s);
      p.graph.accepting[from] = b.accepting(s);
      for (std::size_t e : b.out_edges(s)) {
        const BuchiEdge& edge = b.edges()[e];
        if (BuchiAutomaton::guard_holds(edge, letter)) {
          p.graph.successors[from].push_back(p.node(next, edge.to));
        }
      }
      auto& out = p.graph.successors[from];
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  }
  return p;
}

std::vector<bool> f_star_fixpoint(const Digraph& g) {
  const Adjacency back = reverse(g.successors);
  std::vector<bool> member = g.accepting;
  for (bool changed = true; changed;) {
    changed = false;
    // Nodes with a path of length >= 0 into the current set.
    const std::vector<bool> reaches = reachable(back, member);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!member[v]) continue;
      const auto& out = g.successors[v];
      const bool keep = std::any_of(out.begin(), out.end(), [&](std::size_t u) { return reaches[u]; });
      if (!keep) {
        member[v] = false;
        changed = true;
      }
    }
  }
  return member;
}

std::vector<bool> f_star_scc(const Digraph& g) {
  const std::vector<bool> cyclic = on_cycle(g.successors);
  std::vector<bool> seeds(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) seeds[v] = g.accepting[v] && cyclic[v];
  const std::vector<bool> reaches = reachable(reverse(g.successors), seeds);
  std::vector<bool> out(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = g.accepting[v] && reaches[v];
  return out;
}

SatisfyingSet satisfying_states(const ProductAutomaton& p, const std::vector<bool>& fstar,
                                const QuotientTS& q, const Partition& partition) {
  const std::vector<bool> reaches = reachable(reverse(p.graph.successors), fstar);
  SatisfyingSet out{{}, Region(partition.dimension())};
  for (std::size_t i = 0; i < q.size(); ++i) {
    const bool ok = std::any_of(p.automaton_initial.begin(), p.automaton_initial.end(),
                                [&](std::size_t s0) { return reaches[p.node(i, s0)]; });
    if (!ok) continue;
    const BlockId id = q.states()[i].id;
    out.states.push_back(id);
    out.region.add_unchecked(partition.block(id).cell);
  }
  return out;
}

SatisfyingSet satisfying_states(const Formula& f, const Abstraction& abs,
                                const std::vector<ObservedRegion>& regions) {
  const ProductAutomaton p = product(abs.quotient, to_buchi(f), regions);
  return satisfying_states(p, f_star_scc(p.graph), abs.quotient, abs.partition);
}

}  // namespace polybisim
