#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brouwer/core/algebra.hpp"
#include "brouwer/core/error.hpp"
#include "brouwer/logic/formula.hpp"

namespace brouwer {

/// Anything with Brouwer operations on value_type: ⊕ join, ⊗ meet, →,
/// bottom 0 and top 1.
template <class A>
concept BrouwerOps = requires(const A& a, const typename A::value_type& x) {
  { a.join(x, x) } -> std::convertible_to<typename A::value_type>;
  { a.meet(x, x) } -> std::convertible_to<typename A::value_type>;
  { a.imp(x, x) } -> std::convertible_to<typename A::value_type>;
  { a.bottom() } -> std::convertible_to<typename A::value_type>;
  { a.top() } -> std::convertible_to<typename A::value_type>;
};

template <class V>
using Valuation = std::map<std::string, V>;

/// ∧ ↦ ⊕, ∨ ↦ ⊗, → ↦ →, ⊥ ↦ 1.  φ holds at v iff the result is bottom().
/// Throws UnboundVariable.
template <BrouwerOps A>
typename A::value_type evaluate(const A& alg, const Formula& f,
                                const Valuation<typename A::value_type>& v) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw Error(ErrorKind::UnboundVariable, f.name());
      return it->second;
    }
    case Formula::Kind::Bottom: return alg.top();
    case Formula::Kind::And: return alg.join(evaluate(alg, f.left(), v), evaluate(alg, f.right(), v));
    case Formula::Kind::Or: return alg.meet(evaluate(alg, f.left(), v), evaluate(alg, f.right(), v));
    case Formula::Kind::Implies: return alg.imp(evaluate(alg, f.left(), v), evaluate(alg, f.right(), v));
  }
  throw Error(ErrorKind::InvalidInput, "unknown formula node");
}

/// The interval [lo, hi] of a larger model: inherited ⊕ and ⊗, implication
/// (u→v) ⊕ lo.
template <BrouwerOps A>
class IntervalView {
 public:
  using value_type = typename A::value_type;

  IntervalView(const A& base, value_type lo, value_type hi) : base_(base), lo_(lo), hi_(hi) {}

  value_type join(const value_type& a, const value_type& b) const { return base_.join(a, b); }
  value_type meet(const value_type& a, const value_type& b) const { return base_.meet(a, b); }
  value_type imp(const value_type& a, const value_type& b) const { return base_.join(base_.imp(a, b), lo_); }
  value_type bottom() const { return lo_; }
  value_type top() const { return hi_; }
  const A& base() const { return base_; }

 private:
  const A& base_;
  value_type lo_, hi_;
};

/// A formula flattened to postfix code over a fixed variable order, for
/// fast sweeps over tabulated algebras.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);

  /// Sorted variable names; slot i of the value vector belongs to vars()[i].
  [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }

  FiniteBrouwerAlgebra::Element run(const FiniteBrouwerAlgebra& alg,
                                    const std::vector<FiniteBrouwerAlgebra::Element>& values) const;

 private:
  enum class Op : std::uint8_t { Push, Bottom, And, Or, Implies };
  struct Instr {
    Op op;
    std::uint32_t slot;
  };
  std::vector<Instr> code_;
  std::vector<std::string> vars_;
  mutable std::vector<FiniteBrouwerAlgebra::Element> stack_;
};

}  // namespace brouwer
