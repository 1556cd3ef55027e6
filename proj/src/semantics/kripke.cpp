#include "brouwer/semantics/kripke.hpp"

#include <vector>

#include "brouwer/core/error.hpp"

namespace brouwer {

namespace {

bool forces(const Poset& frame, std::size_t w, const Formula& f,
            const std::map<std::string, ElementSet>& valuation) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = valuation.find(f.name());
      if (it == valuation.end()) throw Error(ErrorKind::UnboundVariable, f.name());
      return it->second.test(w);
    }
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::And:
      return forces(frame, w, f.left(), valuation) && forces(frame, w, f.right(), valuation);
    case Formula::Kind::Or:
      return forces(frame, w, f.left(), valuation) || forces(frame, w, f.right(), valuation);
    case Formula::Kind::Implies:
      for (std::size_t v = 0; v < frame.size(); ++v) {
        if (frame.leq(w, v) && forces(frame, v, f.left(), valuation) &&
            !forces(frame, v, f.right(), valuation)) {
          return false;
        }
      }
      return true;
  }
  return false;
}

}  // namespace

ElementSet forcing_set(const Poset& frame, const Formula& f, const std::map<std::string, ElementSet>& valuation) {
  ElementSet out;
  for (std::size_t w = 0; w < frame.size(); ++w) {
    if (forces(frame, w, f, valuation)) out.set(w);
  }
  return out;
}

std::optional<KripkeCountermodel> kripke_ipc_oracle(const Formula& f, std::size_t max_worlds, std::size_t budget) {
  if (max_worlds == 0) throw Error(ErrorKind::InvalidInput, "max_worlds must be at least 1");
  const auto vs = variables(f);
  const std::vector<std::string> vars(vs.begin(), vs.end());
  std::size_t spent = 0;
  for (std::size_t size = 1; size <= max_worlds; ++size) {
    for (const Poset& frame : enumerate_posets(size)) {
      const auto upsets = enumerate_upsets(frame);
      std::vector<std::size_t> choice(vars.size(), 0);
      while (true) {
        if (++spent > budget) throw Error(ErrorKind::BudgetExceeded, "Kripke search exceeded its budget");
        std::map<std::string, ElementSet> valuation;
        for (std::size_t i = 0; i < vars.size(); ++i) valuation.emplace(vars[i], upsets[choice[i]]);
        const ElementSet forced = forcing_set(frame, f, valuation);
        if (forced != frame.all()) {
          return KripkeCountermodel{frame, std::move(valuation), forced, (frame.all() - forced).first()};
        }
        std::size_t i = vars.size();
        while (i > 0 && ++choice[i - 1] == upsets.size()) choice[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace brouwer
