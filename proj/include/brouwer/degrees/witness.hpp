#pragma once

#include <string>
#include <vector>

#include "brouwer/degrees/degree_structure.hpp"
#include "brouwer/degrees/embedding.hpp"
#include "brouwer/degrees/tagged_union.hpp"

namespace brouwer {

/// n antichain members and k subsets X₁..X_k of {1..n}.
struct WitnessConfig {
  std::size_t n = 1;
  std::size_t k = 1;
  std::vector<IndexSet> X;

  /// Throws InvalidConfig.
  void validate() const;
  [[nodiscard]] std::string describe() const;
};

/// The finite degree structure standing in for the independent columns
/// a₁..a_{k+1}, the antichain generators b₁..bₙ and, when relativized,
/// the extra generators e₁..e_m.
struct Witness {
  WitnessConfig cfg;
  std::size_t m = 0;
  Presentation presentation;
  DegreeStructure degrees;
  ElementSet ambient;  // every degree not above top or any eⱼ
  std::vector<Degree> D, a, b, e;

  [[nodiscard]] ElementSet ambient_complement() const { return degrees.all() - ambient; }
  /// ⋃ cone(eⱼ); empty when m = 0.
  [[nodiscard]] ElementSet e_problem() const;
  /// cone(top), the default B of the relativized construction.
  [[nodiscard]] ElementSet b_problem() const { return degrees.cone(degrees.top()); }
  /// α over the Dᵢ, without the antichain precondition.
  [[nodiscard]] AlphaMap alpha() const { return alpha_map_unchecked(degrees, ambient, D); }
};

/// Triggers {bᵢ,bⱼ} for i ≠ j, {bᵢ,aⱼ} when j = k+1 or i ∉ Xⱼ, {bᵢ,eⱼ} for
/// all i, j; a keep-set {bᵢ} ∪ {aⱼ : i ∈ Xⱼ} for each Dᵢ.
Presentation witness_presentation(const WitnessConfig& cfg, std::size_t m = 0);

/// Builds the structure from a (possibly edited) witness presentation and
/// reads off D, a, b, e and the ambient set.  No postconditions are checked.
Witness assemble_witness(const WitnessConfig& cfg, std::size_t m, const Presentation& p);

/// Builds and checks Dᵢ ∈ ambient, the strong antichain property, Dᵢ ≥ aⱼ
/// for i ∈ Xⱼ, Dᵢ ⊕ aⱼ = top for i ∉ Xⱼ or j = k+1, Dᵢ ⊕ bⱼ = top for
/// j ≠ i.  Throws InvalidConfig or InconsistentPresentation.
Witness build_main_witness(const WitnessConfig& cfg);

/// As build_main_witness, with m extra generators eⱼ and Dᵢ ⊕ eⱼ = top.
Witness build_relativized_witness(const WitnessConfig& cfg, std::size_t m);

/// Postcondition failures of an assembled witness; empty when all hold.
std::vector<std::string> witness_violations(const Witness& w);

/// The columns problem: a tagged union with one part cone(aⱼ) ∪ E per
/// column j = 1..k+1 (E = ⋃ cone(eⱼ), empty for the main witness).
/// Throws EmptyColumns when k < 1.
TaggedUnion columns_problem(const Witness& w);

struct EquationReport {
  bool equal = false;            // as tagged unions
  bool equal_collapsed = false;  // as plain up-sets, tags forgotten
  TaggedUnion lhs, rhs;
  ElementSet lhs_collapsed, rhs_collapsed;
  /// Parts present on one side only, then degrees in the symmetric
  /// difference of the collapsed sides.
  std::vector<std::string> diff;
};

/// (Ā ∪ ⋃ cone(Dᵢ)) ⊕ columns = α(X₁) ⊗ … ⊗ α(X_k).
EquationReport check_main_equation(const Witness& w);

/// ((Ā ∪ ⋃ cone(Dᵢ)) ⊗ 𝒟) ⊕ (columns ⊗ 𝒟) = β(X₁) ⊗ … ⊗ β(X_k) with
/// 𝒟 = E → B.  With m ≥ 1 the β preconditions are enforced
/// (ENotInAmbientComplement, EBelowBViolation).
EquationReport check_relativized_equation(const Witness& w, const ElementSet& e_problem,
                                          const ElementSet& b_problem);

}  // namespace brouwer
