#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossbial/structures.hpp"

namespace crossbial {

struct HopfDatum {
  BiunitalPair B1;
  BiunitalPair B2;
  LinMap mu_l;  // B2⊗B1 -> B1
  LinMap nu_l;  // B1 -> B2⊗B1
  LinMap mu_r;  // B2⊗B1 -> B2
  LinMap nu_r;  // B2 -> B2⊗B1
  BraidingProvider braiding = BraidingProvider::vect_flip();
};

void validate_datum(const HopfDatum& d);

// The (co)actions mu_l = eps2⊗id, mu_r = id⊗eps1, nu_l = eta2⊗id, nu_r = id⊗eta1.
HopfDatum trivial_datum(const BiunitalPair& b1, const BiunitalPair& b2,
                        const BraidingProvider& bp = BraidingProvider::vect_flip());

CheckReport check_hopf_datum(const HopfDatum& d);

struct InducedStructures {
  LinMap phi12;    // B1⊗B2 -> B2⊗B1
  LinMap phi21;    // B2⊗B1 -> B1⊗B2
  LinMap m_B;      // (B1⊗B2)⊗(B1⊗B2) -> B1⊗B2
  LinMap delta_B;  // B1⊗B2 -> (B1⊗B2)⊗(B1⊗B2)
  LinMap eta_B;
  LinMap eps_B;
};

// Refuses (precondition error) unless check_hopf_datum passes.
InducedStructures induced_structures(const HopfDatum& d);
// Same composites without validating the datum first.
InducedStructures induced_structures_unchecked(const HopfDatum& d);

// f1 = Δ_B∘m_B and f2 = (m_B⊗m_B)∘(id⊗Ψ_{B,B}⊗id)∘(Δ_B⊗Δ_B).
LinMap fixed_point_f1(const HopfDatum& d, const InducedStructures& s);
LinMap fixed_point_f2(const HopfDatum& d, const InducedStructures& s);

// pi = eta1 eps1 ⊗ id_{B2⊗B1} ⊗ eta2 eps2 on B1⊗B2⊗B1⊗B2.
LinMap projector_pi(const HopfDatum& d);

// Phi(f) for an endomorphism f of B1⊗B2⊗B1⊗B2.
LinMap phi_apply(const HopfDatum& d, const LinMap& f);

// Phi and f -> pi f pi as explicit sparse matrices on End(B1⊗B2⊗B1⊗B2),
// vectorised row-major (index row*d + col).
class PhiSuperoperator {
 public:
  static PhiSuperoperator build(const HopfDatum& d, std::size_t max_nonzeros = 60'000'000);

  std::uint64_t d() const { return d_; }
  const LinMap& phi() const { return phi_; }
  const LinMap& projector() const { return proj_; }

  Column vectorize(const LinMap& f) const;
  LinMap unvectorize(const Column& v) const;

 private:
  std::uint64_t d_ = 0;
  SpaceList four_;
  LinMap phi_;
  LinMap proj_;
};

struct OrderResult {
  std::optional<int> order;  // least n with Phi^n∘(Id - P) = 0
  int cap = 8;
  bool stable_at_order = false;  // Phi^{n+1} = Phi^n at n = order
};

OrderResult recursion_order(const HopfDatum& d, int n_max = 8);
OrderResult recursion_order(const PhiSuperoperator& s, int n_max = 8);

struct TrivalencePattern {
  bool nu_l = false;
  bool nu_r = false;
  bool mu_l = false;
  bool mu_r = false;

  std::string str() const;  // bits in the order nu_l nu_r mu_l mu_r
  int nontrivial() const { return nu_l + nu_r + mu_l + mu_r; }
  static TrivalencePattern parse(const std::string& bits);
  friend bool operator==(const TrivalencePattern&, const TrivalencePattern&) = default;
};

TrivalencePattern mirror(const TrivalencePattern& p);
TrivalencePattern dual(const TrivalencePattern& p);

struct TrivalenceResult {
  TrivalencePattern pattern;
  bool trivalent = false;
  // Names of the unit/counit tensor maps that are algebra and coalgebra morphisms.
  std::vector<std::string> witnesses;
  // Each (co)action is trivial exactly when its matching unit/counit map is a witness.
  bool equivalence_holds = false;
};

TrivalencePattern trivalence_pattern(const HopfDatum& d);
TrivalenceResult trivalence(const HopfDatum& d);

// Fused space name used for B1⊗B2.
std::string fused_name(const HopfDatum& d);

BialgebraData build_bialgebra(const HopfDatum& d);

enum class Family { TensorProduct, Biproduct, DoubleCross, Bicross, General, NonTrivalent };
const char* to_string(Family f);

struct Classification {
  TrivalencePattern pattern;
  Family family = Family::TensorProduct;
  std::vector<Family> containing;  // every box whose pattern dominates the concrete one
};

Classification classify(const TrivalencePattern& p);
Classification classify(const HopfDatum& d);

}  // namespace crossbial
