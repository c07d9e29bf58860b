#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polybisim {

struct FormulaNode;

/// Immutable LTL syntax tree with value semantics (children are shared).
class Formula {
 public:
  enum class Op {
    kTrue,
    kFalse,
    kAtom,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kNext,
    kUntil,
    kRelease,  // only produced by to_nnf()
    kEventually,
    kAlways,
  };

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula next(Formula f);
  static Formula until(Formula a, Formula b);
  static Formula release(Formula a, Formula b);
  static Formula eventually(Formula f);
  static Formula always(Formula f);

  Op op() const;
  const std::string& atom_name() const;
  /// Operand of unary operators, left operand of binary ones.
  Formula lhs() const;
  Formula rhs() const;
  bool is_binary() const;
  bool is_unary() const;

  /// Identity of the shared node; stable for the lifetime of the tree.
  const void* identity() const { return node_.get(); }

  bool operator==(const Formula& other) const;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

/// Grammar (loosest to tightest): '->' (right assoc), '|', '&', 'U' (left
/// assoc), prefix '!' 'X' 'F' 'G', atoms / 'true' / 'false' / parentheses.
/// Throws Error{kParse} with the byte offset of the problem.
Formula parse_ltl(std::string_view text);

/// As above, and throws Error{kUnknownAtom} for atoms outside the alphabet.
Formula parse_ltl(std::string_view text, std::span<const std::string> alphabet);

/// Fully parenthesized rendering that parse_ltl() reads back to the same tree.
std::string to_string(const Formula& f);

/// Negation normal form over true/false/literals, &, |, X, U, R.
Formula to_nnf(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::size_t depth(const Formula& f);

/// One step of an observation word: at most one atom holds.
struct Letter {
  std::optional<std::string> atom;

  static Letter none() { return {}; }
  static Letter of(std::string name) { return {std::move(name)}; }
  bool holds(const std::string& name) const { return atom && *atom == name; }
  bool operator==(const Letter&) const = default;
};

/// prefix . cycle^omega
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> cycle;

  LassoWord(std::vector<Letter> prefix, std::vector<Letter> cycle);

  std::size_t positions() const { return prefix.size() + cycle.size(); }
  std::size_t successor(std::size_t i) const {
    return i + 1 < positions() ? i + 1 : prefix.size();
  }
  const Letter& at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : cycle[i - prefix.size()];
  }
};

/// Direct semantic evaluation at position 0: boolean fixpoints over the
/// finite lasso graph (least for U/F, greatest for R/G).
bool eval_ltl_lasso(const Formula& f, const LassoWord& w);

}  // namespace polybisim
