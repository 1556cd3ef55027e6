#include "brouwer/degrees/witness.hpp"

#include <algorithm>

#include "brouwer/core/error.hpp"

namespace brouwer {

void WitnessConfig::validate() const {
  if (n < 1 || n > 16) throw Error(ErrorKind::InvalidConfig, "n must be in 1..16");
  if (k < 1) throw Error(ErrorKind::InvalidConfig, "k must be at least 1");
  if (X.size() != k) throw Error(ErrorKind::InvalidConfig, "expected " + std::to_string(k) + " subsets");
  for (std::size_t j = 0; j < k; ++j) {
    if ((X[j] & ~full_index_set(n)) != 0) {
      throw Error(ErrorKind::InvalidConfig, "X" + std::to_string(j + 1) + " is not a subset of {1.." +
                                                std::to_string(n) + "}");
    }
  }
}

std::string WitnessConfig::describe() const {
  std::string out = "n=" + std::to_string(n) + " k=" + std::to_string(k);
  for (std::size_t j = 0; j < X.size(); ++j) out += " X" + std::to_string(j + 1) + "=" + format_index_set(X[j]);
  return out;
}

ElementSet Witness::e_problem() const {
  ElementSet out;
  for (Degree g : e) out |= degrees.cone(g);
  return out;
}

namespace {

std::string col(std::size_t j) { return "a" + std::to_string(j); }
std::string anti(std::size_t i) { return "b" + std::to_string(i); }
std::string extra(std::size_t j) { return "e" + std::to_string(j); }

std::vector<std::string> d_generators(const WitnessConfig& cfg, std::size_t i) {
  std::vector<std::string> out{anti(i)};
  for (std::size_t j = 1; j <= cfg.k; ++j) {
    if ((cfg.X[j - 1] >> (i - 1)) & 1U) out.push_back(col(j));
  }
  return out;
}

}  // namespace

Presentation witness_presentation(const WitnessConfig& cfg, std::size_t m) {
  cfg.validate();
  Presentation p;
  for (std::size_t j = 1; j <= cfg.k + 1; ++j) p.generators.push_back(col(j));
  for (std::size_t i = 1; i <= cfg.n; ++i) p.generators.push_back(anti(i));
  for (std::size_t j = 1; j <= m; ++j) p.generators.push_back(extra(j));
  for (std::size_t i = 1; i <= cfg.n; ++i) {
    for (std::size_t j = i + 1; j <= cfg.n; ++j) p.triggers.push_back({anti(i), anti(j)});
    for (std::size_t j = 1; j <= cfg.k + 1; ++j) {
      if (j == cfg.k + 1 || !((cfg.X[j - 1] >> (i - 1)) & 1U)) p.triggers.push_back({anti(i), col(j)});
    }
    for (std::size_t j = 1; j <= m; ++j) p.triggers.push_back({anti(i), extra(j)});
  }
  for (std::size_t i = 1; i <= cfg.n; ++i) p.keep.push_back(d_generators(cfg, i));
  return p;
}

Witness assemble_witness(const WitnessConfig& cfg, std::size_t m, const Presentation& p) {
  cfg.validate();
  Witness w{cfg, m, p, DegreeStructure::from_presentation(p), {}, {}, {}, {}, {}};
  const auto& d = w.degrees;
  for (std::size_t j = 1; j <= cfg.k + 1; ++j) w.a.push_back(d.generator(col(j)));
  for (std::size_t i = 1; i <= cfg.n; ++i) w.b.push_back(d.generator(anti(i)));
  for (std::size_t j = 1; j <= m; ++j) w.e.push_back(d.generator(extra(j)));
  for (std::size_t i = 1; i <= cfg.n; ++i) w.D.push_back(d.of(d_generators(cfg, i)));
  ElementSet outside = d.cone(d.top());
  for (Degree g : w.e) outside |= d.cone(g);
  w.ambient = d.all() - outside;
  return w;
}

std::vector<std::string> witness_violations(const Witness& w) {
  std::vector<std::string> out;
  const auto& d = w.degrees;
  const auto& cfg = w.cfg;
  const Degree top = d.top();
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const std::string di = "D" + std::to_string(i + 1);
    if (!w.ambient.test(w.D[i])) out.push_back(di + " is outside the ambient set");
    for (std::size_t j = 0; j <= cfg.k; ++j) {
      const bool member = j < cfg.k && ((cfg.X[j] >> i) & 1U);
      const std::string aj = "a" + std::to_string(j + 1);
      if (member && !d.leq(w.a[j], w.D[i])) out.push_back(di + " is not above " + aj);
      if (!member && d.join(w.D[i], w.a[j]) != top) out.push_back(di + " ⊕ " + aj + " is not top");
    }
    for (std::size_t j = 0; j < cfg.n; ++j) {
      if (j != i && d.join(w.D[i], w.b[j]) != top) {
        out.push_back(di + " ⊕ b" + std::to_string(j + 1) + " is not top");
      }
    }
    for (std::size_t j = 0; j < w.e.size(); ++j) {
      if (d.join(w.D[i], w.e[j]) != top) out.push_back(di + " ⊕ e" + std::to_string(j + 1) + " is not top");
    }
  }
  if (out.empty() && !is_strong_antichain(d, w.ambient, w.D)) out.push_back("D is not a strong antichain");
  return out;
}

Witness build_relativized_witness(const WitnessConfig& cfg, std::size_t m) {
  Witness w = assemble_witness(cfg, m, witness_presentation(cfg, m));
  const auto problems = witness_violations(w);
  if (!problems.empty()) throw Error(ErrorKind::InconsistentPresentation, problems.front());
  return w;
}

Witness build_main_witness(const WitnessConfig& cfg) { return build_relativized_witness(cfg, 0); }

TaggedUnion columns_problem(const Witness& w) {
  if (w.cfg.k < 1 || w.a.empty()) throw Error(ErrorKind::EmptyColumns, "k must be at least 1");
  const ElementSet extra_part = w.e_problem();
  std::vector<ElementSet> parts;
  for (Degree g : w.a) parts.push_back(w.degrees.cone(g) | extra_part);
  return TaggedUnion(std::move(parts));
}

namespace {

EquationReport compare(const TaggedUnionSpace& space, TaggedUnion lhs, TaggedUnion rhs, ElementSet lhs_c,
                       ElementSet rhs_c) {
  EquationReport r;
  r.equal = lhs == rhs;
  r.equal_collapsed = lhs_c == rhs_c;
  const Poset& p = space.poset();
  for (const auto& part : lhs.parts()) {
    if (std::find(rhs.parts().begin(), rhs.parts().end(), part) == rhs.parts().end()) {
      r.diff.push_back("left part " + p.format(part));
    }
  }
  for (const auto& part : rhs.parts()) {
    if (std::find(lhs.parts().begin(), lhs.parts().end(), part) == lhs.parts().end()) {
      r.diff.push_back("right part " + p.format(part));
    }
  }
  (lhs_c - rhs_c).for_each([&](std::size_t i) { r.diff.push_back("left only " + p.name(i)); });
  (rhs_c - lhs_c).for_each([&](std::size_t i) { r.diff.push_back("right only " + p.name(i)); });
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.lhs_collapsed = lhs_c;
  r.rhs_collapsed = rhs_c;
  return r;
}

}  // namespace

EquationReport check_main_equation(const Witness& w) {
  const TaggedUnionSpace space(w.degrees.poset());
  const AlphaMap alpha = w.alpha();
  const IndexSet full = full_index_set(w.cfg.n);
  const TaggedUnion columns = columns_problem(w);
  TaggedUnion rhs = space.top();
  ElementSet rhs_c;
  for (std::size_t j = 0; j < w.cfg.k; ++j) {
    rhs = j == 0 ? alpha.tagged(w.cfg.X[j]) : space.meet(rhs, alpha.tagged(w.cfg.X[j]));
    rhs_c |= alpha(w.cfg.X[j]);
  }
  return compare(space, space.join(alpha.tagged(full), columns), std::move(rhs), alpha(full) & columns.collapsed(),
                 rhs_c);
}

EquationReport check_relativized_equation(const Witness& w, const ElementSet& e_problem, const ElementSet& b_problem) {
  const TaggedUnionSpace space(w.degrees.poset());
  const IndexSet full = full_index_set(w.cfg.n);
  BetaMap beta(w.alpha(), w.degrees.poset().pointwise_implication(e_problem, b_problem));
  if (w.m > 0) beta = beta_embedding(w.degrees, w.ambient, w.D, e_problem, b_problem);
  const TaggedUnion implication(beta.implication());
  const TaggedUnion columns = columns_problem(w);
  const TaggedUnion lhs =
      space.join(space.meet(beta.alpha().tagged(full), implication), space.meet(columns, implication));
  const ElementSet lhs_c = (beta.alpha()(full) | beta.implication()) & (columns.collapsed() | beta.implication());
  TaggedUnion rhs = space.top();
  ElementSet rhs_c;
  for (std::size_t j = 0; j < w.cfg.k; ++j) {
    rhs = j == 0 ? beta(w.cfg.X[j]) : space.meet(rhs, beta(w.cfg.X[j]));
    rhs_c |= beta.collapsed(w.cfg.X[j]);
  }
  return compare(space, lhs, std::move(rhs), lhs_c, rhs_c);
}

}  // namespace brouwer
