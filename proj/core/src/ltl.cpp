#include "polybisim/ltl.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "polybisim/error.hpp"

namespace polybisim {

struct FormulaNode {
  Formula::Op op;
  std::string atom;
  std::shared_ptr<const FormulaNode> left;
  std::shared_ptr<const FormulaNode> right;
};

namespace {

using Op = Formula::Op;

bool unary(Op op) {
  return op == Op::kNot || op == Op::kNext || op == Op::kEventually || op == Op::kAlways;
}

bool binary(Op op) {
  return op == Op::kAnd || op == Op::kOr || op == Op::kImplies || op == Op::kUntil ||
         op == Op::kRelease;
}

bool same(const FormulaNode* a, const FormulaNode* b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op || a->atom != b->atom) return false;
  return same(a->left.get(), b->left.get()) && same(a->right.get(), b->right.get());
}

// Recursive-descent parser over the raw text.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // Peeks an identifier-like word without consuming it.
  std::string_view peek_word() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  bool accept_keyword(std::string_view word) {
    if (peek_word() != word) return false;
    pos_ += word.size();
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implies(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = until();
    while (accept("&")) f = Formula::conjunction(std::move(f), until());
    return f;
  }

  Formula until() {
    Formula f = prefix();
    while (accept_keyword("U")) f = Formula::until(std::move(f), prefix());
    return f;
  }

  Formula prefix() {
    if (accept("!")) return Formula::negation(prefix());
    if (accept_keyword("X")) return Formula::next(prefix());
    if (accept_keyword("F")) return Formula::eventually(prefix());
    if (accept_keyword("G")) return Formula::always(prefix());
    return primary();
  }

  Formula primary() {
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    const std::string_view word = peek_word();
    if (word.empty()) fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(word.front()))) fail("atoms must start with a letter");
    if (word == "U") fail("'U' needs a left operand");
    pos_ += word.size();
    if (word == "true") return Formula::truth();
    if (word == "false") return Formula::falsity();
    return Formula::atom(std::string(word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula Formula::truth() {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kTrue, {}, nullptr, nullptr}));
}
Formula Formula::falsity() {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kFalse, {}, nullptr, nullptr}));
}
Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kAtom, std::move(name), nullptr, nullptr}));
}
Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kNot, {}, f.node_, nullptr}));
}
Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kAnd, {}, a.node_, b.node_}));
}
Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kOr, {}, a.node_, b.node_}));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kImplies, {}, a.node_, b.node_}));
}
Formula Formula::next(Formula f) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kNext, {}, f.node_, nullptr}));
}
Formula Formula::until(Formula a, Formula b) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kUntil, {}, a.node_, b.node_}));
}
Formula Formula::release(Formula a, Formula b) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kRelease, {}, a.node_, b.node_}));
}
Formula Formula::eventually(Formula f) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kEventually, {}, f.node_, nullptr}));
}
Formula Formula::always(Formula f) {
  return Formula(std::make_shared<FormulaNode>(FormulaNode{Op::kAlways, {}, f.node_, nullptr}));
}

Formula::Op Formula::op() const { return node_->op; }
const std::string& Formula::atom_name() const { return node_->atom; }
Formula Formula::lhs() const {
  if (!node_->left) throw Error(ErrorCode::kPrecondition, "formula has no operand");
  return Formula(node_->left);
}
Formula Formula::rhs() const {
  if (!node_->right) throw Error(ErrorCode::kPrecondition, "formula has no right operand");
  return Formula(node_->right);
}
bool Formula::is_binary() const { return binary(node_->op); }
bool Formula::is_unary() const { return unary(node_->op); }
bool Formula::operator==(const Formula& other) const { return same(node_.get(), other.node_.get()); }

Formula parse_ltl(std::string_view text) { return Parser(text).parse(); }

Formula parse_ltl(std::string_view text, std::span<const std::string> alphabet) {
  Formula f = parse_ltl(text);
  for (const auto& a : atoms_of(f)) {
    if (std::find(alphabet.begin(), alphabet.end(), a) == alphabet.end()) {
      throw Error(ErrorCode::kUnknownAtom, "unknown atom '" + a + "'");
    }
  }
  return f;
}

std::string to_string(const Formula& f) {
  switch (f.op()) {
    case Op::kTrue: return "true";
    case Op::kFalse: return "false";
    case Op::kAtom: return f.atom_name();
    case Op::kNot: return "!" + to_string(f.lhs());
    case Op::kNext: return "X " + to_string(f.lhs());
    case Op::kEventually: return "F " + to_string(f.lhs());
    case Op::kAlways: return "G " + to_string(f.lhs());
    case Op::kAnd: return "(" + to_string(f.lhs()) + " & " + to_string(f.rhs()) + ")";
    case Op::kOr: return "(" + to_string(f.lhs()) + " | " + to_string(f.rhs()) + ")";
    case Op::kImplies: return "(" + to_string(f.lhs()) + " -> " + to_string(f.rhs()) + ")";
    case Op::kUntil: return "(" + to_string(f.lhs()) + " U " + to_string(f.rhs()) + ")";
    case Op::kRelease:
      // No concrete syntax for R; print its U-dual.
      return "!(!" + to_string(f.lhs()) + " U !" + to_string(f.rhs()) + ")";
  }
  return "?";
}

namespace {

Formula nnf(const Formula& f, bool negated) {
  switch (f.op()) {
    case Op::kTrue: return negated ? Formula::falsity() : Formula::truth();
    case Op::kFalse: return negated ? Formula::truth() : Formula::falsity();
    case Op::kAtom: return negated ? Formula::negation(f) : f;
    case Op::kNot: return nnf(f.lhs(), !negated);
    case Op::kAnd:
      return negated ? Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::kOr:
      return negated ? Formula::conjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::kImplies:
      return negated ? Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), true))
                     : Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), false));
    case Op::kNext: return Formula::next(nnf(f.lhs(), negated));
    case Op::kUntil:
      return negated ? Formula::release(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::until(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::kRelease:
      return negated ? Formula::until(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::release(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::kEventually:
      // F a = true U a;  !F a = false R !a
      return negated ? Formula::release(Formula::falsity(), nnf(f.lhs(), true))
                     : Formula::until(Formula::truth(), nnf(f.lhs(), false));
    case Op::kAlways:
      // G a = false R a;  !G a = true U !a
      return negated ? Formula::until(Formula::truth(), nnf(f.lhs(), true))
                     : Formula::release(Formula::falsity(), nnf(f.lhs(), false));
  }
  throw Error(ErrorCode::kInvariant, "unhandled LTL operator");
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::kAtom) out.insert(f.atom_name());
  if (f.is_unary() || f.is_binary()) collect_atoms(f.lhs(), out);
  if (f.is_binary()) collect_atoms(f.rhs(), out);
}

class LassoEvaluator {
 public:
  explicit LassoEvaluator(const LassoWord& w) : w_(w), n_(w.positions()) {}

  const std::vector<bool>& eval(const Formula& f) {
    if (auto it = memo_.find(f.identity()); it != memo_.end()) return it->second;
    std::vector<bool> v(n_, false);
    switch (f.op()) {
      case Op::kTrue: v.assign(n_, true); break;
      case Op::kFalse: break;
      case Op::kAtom:
        for (std::size_t i = 0; i < n_; ++i) v[i] = w_.at(i).holds(f.atom_name());
        break;
      case Op::kNot: {
        const auto& a = eval(f.lhs());
        for (std::size_t i = 0; i < n_; ++i) v[i] = !a[i];
        break;
      }
      case Op::kAnd:
      case Op::kOr:
      case Op::kImplies: {
        const std::vector<bool> a = eval(f.lhs());
        const auto& b = eval(f.rhs());
        for (std::size_t i = 0; i < n_; ++i) {
          v[i] = f.op() == Op::kAnd ? (a[i] && b[i])
                 : f.op() == Op::kOr ? (a[i] || b[i])
                                     : (!a[i] || b[i]);
        }
        break;
      }
      case Op::kNext: {
        const auto& a = eval(f.lhs());
        for (std::size_t i = 0; i < n_; ++i) v[i] = a[w_.successor(i)];
        break;
      }
      case Op::kUntil: {
        const std::vector<bool> a = eval(f.lhs());
        v = least(a, eval(f.rhs()));
        break;
      }
      case Op::kEventually: v = least(std::vector<bool>(n_, true), eval(f.lhs())); break;
      case Op::kRelease: {
        const std::vector<bool> a = eval(f.lhs());
        v = greatest(a, eval(f.rhs()));
        break;
      }
      case Op::kAlways: v = greatest(std::vector<bool>(n_, false), eval(f.lhs())); break;
    }
    return memo_.emplace(f.identity(), std::move(v)).first->second;
  }

 private:
  // a U b: least solution of v = b | (a & X v).
  std::vector<bool> least(const std::vector<bool>& a, const std::vector<bool>& b) const {
    std::vector<bool> v(n_, false);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = n_; i-- > 0;) {
        const bool next = b[i] || (a[i] && v[w_.successor(i)]);
        if (next != v[i]) {
          v[i] = next;
          changed = true;
        }
      }
    }
    return v;
  }

  // a R b: greatest solution of v = b & (a | X v).
  std::vector<bool> greatest(const std::vector<bool>& a, const std::vector<bool>& b) const {
    std::vector<bool> v(n_, true);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = n_; i-- > 0;) {
        const bool next = b[i] && (a[i] || v[w_.successor(i)]);
        if (next != v[i]) {
          v[i] = next;
          changed = true;
        }
      }
    }
    return v;
  }

  const LassoWord& w_;
  std::size_t n_;
  std::unordered_map<const void*, std::vector<bool>> memo_;
};

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  if (f.is_unary() || f.is_binary()) d = std::max(d, depth(f.lhs()));
  if (f.is_binary()) d = std::max(d, depth(f.rhs()));
  return (f.is_unary() || f.is_binary()) ? d + 1 : 0;
}

LassoWord::LassoWord(std::vector<Letter> prefix_in, std::vector<Letter> cycle_in)
    : prefix(std::move(prefix_in)), cycle(std::move(cycle_in)) {
  if (cycle.empty()) throw Error(ErrorCode::kPrecondition, "lasso cycle must be non-empty");
}

bool eval_ltl_lasso(const Formula& f, const LassoWord& w) {
  LassoEvaluator evaluator(w);
  return evaluator.eval(f)[0];
}

}  // namespace polybisim
