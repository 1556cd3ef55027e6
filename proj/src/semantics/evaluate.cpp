#include "brouwer/semantics/evaluate.hpp"

#include <algorithm>

namespace brouwer {

CompiledFormula::CompiledFormula(const Formula& f) {
  const auto vs = variables(f);
  vars_.assign(vs.begin(), vs.end());
  auto emit = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Formula::Kind::Var: {
        const auto slot = std::lower_bound(vars_.begin(), vars_.end(), g.name()) - vars_.begin();
        code_.push_back({Op::Push, static_cast<std::uint32_t>(slot)});
        return;
      }
      case Formula::Kind::Bottom: code_.push_back({Op::Bottom, 0}); return;
      default: break;
    }
    self(self, g.left());
    self(self, g.right());
    const Op op = g.kind() == Formula::Kind::And ? Op::And
                  : g.kind() == Formula::Kind::Or ? Op::Or
                                                   : Op::Implies;
    code_.push_back({op, 0});
  };
  emit(emit, f);
  stack_.reserve(code_.size());
}

FiniteBrouwerAlgebra::Element CompiledFormula::run(
    const FiniteBrouwerAlgebra& alg, const std::vector<FiniteBrouwerAlgebra::Element>& values) const {
  stack_.clear();
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Push: stack_.push_back(values[in.slot]); break;
      case Op::Bottom: stack_.push_back(alg.top()); break;
      default: {
        const auto b = stack_.back();
        stack_.pop_back();
        auto& a = stack_.back();
        a = in.op == Op::And ? alg.join(a, b) : in.op == Op::Or ? alg.meet(a, b) : alg.imp(a, b);
      }
    }
  }
  return stack_.back();
}

}  // namespace brouwer
