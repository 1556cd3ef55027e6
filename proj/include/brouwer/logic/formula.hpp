#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace brouwer {

/// Propositional formula over Var, Bottom, And, Or and Implies.
///
/// Nodes are immutable and shared, so copying a Formula is cheap.  Negation
/// has no node of its own: ~a is Implies(a, Bottom).
class Formula {
 public:
  enum class Kind { Var, Bottom, And, Or, Implies };

  static Formula var(std::string name);
  static Formula bottom();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula neg(Formula f) { return implies(std::move(f), bottom()); }

  [[nodiscard]] Kind kind() const { return node_->kind; }
  [[nodiscard]] const std::string& name() const { return node_->name; }
  [[nodiscard]] const Formula& left() const { return *node_->left; }
  [[nodiscard]] const Formula& right() const { return *node_->right; }
  [[nodiscard]] bool is_binary() const { return node_->left != nullptr; }

  /// Number of And/Or/Implies nodes.
  [[nodiscard]] std::size_t connectives() const;

  /// Structural equality.
  bool operator==(const Formula& o) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Formula> left, right;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula binary(Kind k, Formula l, Formula r);

  std::shared_ptr<const Node> node_;
};

/// Parses the surface grammar
///
///     formula := imp
///     imp     := or ('->' imp)?
///     or      := and ('|' and)*
///     and     := neg ('&' neg)*
///     neg     := '~'* atom
///     atom    := identifier | 'F' | '(' formula ')'
///
/// 'F' is Bottom.  Throws SyntaxError with a byte offset.
Formula parse_formula(std::string_view text);

/// Prints with minimal parentheses; Implies(a, Bottom) prints as ~a.
/// parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Variable names, sorted.
std::set<std::string> variables(const Formula& f);

bool is_positive(const Formula& f);

/// Replaces each Bottom by ((v1 & v2) & ...) & fresh over the sorted
/// variables of f.  Formulas without Bottom come back unchanged.  Throws
/// FreshNotFresh if `fresh` already occurs in f.
Formula positify(const Formula& f, const std::string& fresh);

/// A name not occurring in f: the first unused of q, r, s, t, x1, x2, ...
std::string fresh_variable(const Formula& f);

/// Random formula with exactly `size` connectives, each drawn uniformly from
/// And/Or/Implies; leaves are Bottom with probability 0.1 and otherwise a
/// uniform choice from `vars`.  Deterministic in (seed, size, vars).
Formula sample_formula(std::uint64_t seed, std::size_t size, const std::vector<std::string>& vars);

bool is_identifier(std::string_view s);

}  // namespace brouwer
