#include "polybisim/buchi.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polybisim/error.hpp"
#include "polybisim/graph.hpp"

namespace polybisim {

BuchiAutomaton::BuchiAutomaton(std::vector<std::string> atoms, std::size_t state_count,
                               std::vector<std::size_t> initial, std::vector<BuchiEdge> edges,
                               std::vector<bool> accepting)
    : atoms_(std::move(atoms)),
      state_count_(state_count),
      initial_(std::move(initial)),
      edges_(std::move(edges)),
      out_(state_count),
      accepting_(std::move(accepting)) {
  if (accepting_.size() != state_count_) {
    throw Error(ErrorCode::kPrecondition, "accepting mask size differs from state count");
  }
  for (std::size_t s : initial_) {
    if (s >= state_count_) throw Error(ErrorCode::kPrecondition, "initial state out of range");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const BuchiEdge& edge = edges_[e];
    if (edge.from >= state_count_ || edge.to >= state_count_) {
      throw Error(ErrorCode::kPrecondition, "edge endpoint out of range");
    }
    for (const Literal& lit : edge.guard) {
      if (lit.atom >= atoms_.size()) throw Error(ErrorCode::kPrecondition, "guard atom out of range");
    }
    out_[edge.from].push_back(e);
  }
}

std::size_t BuchiAutomaton::letter_index(const Letter& letter) const {
  if (!letter.atom) return atoms_.size();
  const auto it = std::find(atoms_.begin(), atoms_.end(), *letter.atom);
  return static_cast<std::size_t>(it - atoms_.begin());
}

bool BuchiAutomaton::guard_holds(const BuchiEdge& edge, std::size_t letter_index) {
  return std::all_of(edge.guard.begin(), edge.guard.end(), [&](const Literal& lit) {
    return (lit.atom == letter_index) == lit.positive;
  });
}

namespace {

using Op = Formula::Op;
using IdSet = std::set<std::size_t>;

// Subformulas of the NNF input, interned so node sets compare cheaply.
class Interner {
 public:
  std::size_t id(const Formula& f) {
    const std::string key = to_string(f);
    auto [it, inserted] = index_.emplace(key, formulas_.size());
    if (inserted) formulas_.push_back(f);
    return it->second;
  }
  const Formula& at(std::size_t i) const { return formulas_[i]; }
  std::size_t size() const { return formulas_.size(); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<Formula> formulas_;
};

struct TableauNode {
  IdSet incoming;
  IdSet fresh;
  IdSet old;
  IdSet next;
};

constexpr std::size_t kInit = 0;

class Tableau {
 public:
  explicit Tableau(const Formula& nnf) {
    TableauNode start;
    start.incoming.insert(kInit);
    start.fresh.insert(interner_.id(nnf));
    expand(std::move(start));
  }

  Interner& interner() { return interner_; }
  // Node i of the automaton is nodes_[i - 1]; state 0 is the initial pseudo-node.
  const std::vector<TableauNode>& nodes() const { return nodes_; }

 private:
  bool is_literal(const Formula& f) const {
    return f.op() == Op::kTrue || f.op() == Op::kFalse || f.op() == Op::kAtom ||
           (f.op() == Op::kNot && f.lhs().op() == Op::kAtom);
  }

  void expand(TableauNode start) {
    std::vector<TableauNode> work;
    work.push_back(std::move(start));
    while (!work.empty()) {
      TableauNode node = std::move(work.back());
      work.pop_back();

      if (node.fresh.empty()) {
        auto same = std::find_if(nodes_.begin(), nodes_.end(), [&](const TableauNode& nd) {
          return nd.old == node.old && nd.next == node.next;
        });
        if (same != nodes_.end()) {
          same->incoming.insert(node.incoming.begin(), node.incoming.end());
          continue;
        }
        nodes_.push_back(node);
        TableauNode succ;
        succ.incoming.insert(nodes_.size());  // automaton id of the node just stored
        succ.fresh = node.next;
        work.push_back(std::move(succ));
        continue;
      }

      const std::size_t eta = *node.fresh.begin();
      node.fresh.erase(node.fresh.begin());
      const Formula f = interner_.at(eta);

      if (is_literal(f)) {
        if (f.op() == Op::kFalse) continue;
        if (f.op() != Op::kTrue) {
          const Formula neg = f.op() == Op::kNot ? f.lhs() : Formula::negation(f);
          if (node.old.count(interner_.id(neg))) continue;
        }
        node.old.insert(eta);
        work.push_back(std::move(node));
        continue;
      }

      auto add_fresh = [&](TableauNode& n, const Formula& g) {
        const std::size_t id = interner_.id(g);
        if (!n.old.count(id)) n.fresh.insert(id);
      };

      switch (f.op()) {
        case Op::kAnd: {
          add_fresh(node, f.lhs());
          add_fresh(node, f.rhs());
          node.old.insert(eta);
          work.push_back(std::move(node));
          break;
        }
        case Op::kNext: {
          node.old.insert(eta);
          node.next.insert(interner_.id(f.lhs()));
          work.push_back(std::move(node));
          break;
        }
        case Op::kOr:
        case Op::kUntil:
        case Op::kRelease: {
          TableauNode first = node;
          TableauNode second = std::move(node);
          first.old.insert(eta);
          second.old.insert(eta);
          if (f.op() == Op::kOr) {
            add_fresh(first, f.lhs());
            add_fresh(second, f.rhs());
          } else if (f.op() == Op::kUntil) {
            add_fresh(first, f.lhs());
            first.next.insert(eta);
            add_fresh(second, f.rhs());
          } else {
            add_fresh(first, f.rhs());
            first.next.insert(eta);
            add_fresh(second, f.lhs());
            add_fresh(second, f.rhs());
          }
          work.push_back(std::move(second));
          work.push_back(std::move(first));
          break;
        }
        default:
          throw Error(ErrorCode::kInvariant, "tableau expects a formula in negation normal form");
      }
    }
  }

  Interner interner_;
  std::vector<TableauNode> nodes_;
};

}  // namespace

BuchiAutomaton to_buchi(const Formula& f) {
  const Formula nnf = to_nnf(f);
  Tableau tableau(nnf);
  Interner& interner = tableau.interner();
  const auto& nodes = tableau.nodes();

  const std::set<std::string> atom_set = atoms_of(f);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  auto atom_index = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(atoms.begin(), atoms.end(), name) - atoms.begin());
  };

  // Generalized automaton over states 0 (initial) and 1..nodes.size().
  const std::size_t g_states = nodes.size() + 1;
  std::vector<std::vector<Literal>> label(g_states);
  Adjacency g_succ(g_states);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t id : nodes[i].old) {
      const Formula& lit = interner.at(id);
      if (lit.op() == Op::kAtom) label[i + 1].push_back({atom_index(lit.atom_name()), true});
      if (lit.op() == Op::kNot) label[i + 1].push_back({atom_index(lit.lhs().atom_name()), false});
    }
    for (std::size_t from : nodes[i].incoming) g_succ[from].push_back(i + 1);
  }

  // One acceptance set per until subformula: states that do not promise it
  // or already fulfil it.
  std::vector<std::vector<bool>> sets;
  for (std::size_t id = 0; id < interner.size(); ++id) {
    const Formula& u = interner.at(id);
    if (u.op() != Op::kUntil) continue;
    const std::size_t rhs = interner.id(u.rhs());
    std::vector<bool> in(g_states, true);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      in[i + 1] = !nodes[i].old.count(id) || nodes[i].old.count(rhs);
    }
    sets.push_back(std::move(in));
  }
  const std::size_t k = sets.size();

  if (k <= 1) {
    std::vector<BuchiEdge> edges;
    for (std::size_t s = 0; s < g_states; ++s) {
      for (std::size_t t : g_succ[s]) edges.push_back({s, t, label[t]});
    }
    std::vector<bool> accepting = k == 0 ? std::vector<bool>(g_states, true) : sets[0];
    return BuchiAutomaton(std::move(atoms), g_states, {0}, std::move(edges), std::move(accepting));
  }

  // Counter degeneralization, exploring only reachable (state, counter) pairs.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  auto lookup = [&](std::size_t s, std::size_t c) {
    auto [it, inserted] = ids.emplace(std::make_pair(s, c), order.size());
    if (inserted) order.emplace_back(s, c);
    return it->second;
  };
  lookup(0, 0);
  std::vector<BuchiEdge> edges;
  for (std::size_t cur = 0; cur < order.size(); ++cur) {
    const auto [s, c] = order[cur];
    const std::size_t next_c = sets[c][s] ? (c + 1) % k : c;
    for (std::size_t t : g_succ[s]) edges.push_back({cur, lookup(t, next_c), label[t]});
  }
  std::vector<bool> accepting(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    accepting[i] = order[i].second == 0 && sets[0][order[i].first];
  }
  return BuchiAutomaton(std::move(atoms), order.size(), {0}, std::move(edges), std::move(accepting));
}

bool lasso_accepts(const BuchiAutomaton& b, const LassoWord& w) {
  const std::size_t positions = w.positions();
  const std::size_t n = b.size() * positions;
  auto node = [&](std::size_t q, std::size_t pos) { return q * positions + pos; };

  std::vector<std::size_t> letter(positions);
  for (std::size_t p = 0; p < positions; ++p) letter[p] = b.letter_index(w.at(p));

  Adjacency succ(n);
  for (std::size_t q = 0; q < b.size(); ++q) {
    for (std::size_t p = 0; p < positions; ++p) {
      for (std::size_t e : b.out_edges(q)) {
        const BuchiEdge& edge = b.edges()[e];
        if (BuchiAutomaton::guard_holds(edge, letter[p])) {
          succ[node(q, p)].push_back(node(edge.to, w.successor(p)));
        }
      }
    }
  }

  std::vector<bool> seeds(n, false);
  for (std::size_t q : b.initial()) seeds[node(q, 0)] = true;
  const std::vector<bool> live = reachable(succ, seeds);
  const std::vector<bool> cyclic = on_cycle(succ);
  for (std::size_t q = 0; q < b.size(); ++q) {
    if (!b.accepting(q)) continue;
    for (std::size_t p = 0; p < positions; ++p) {
      if (live[node(q, p)] && cyclic[node(q, p)]) return true;
    }
  }
  return false;
}

}  // namespace polybisim
