#pragma once

#include <optional>

#include "crossbial/datum.hpp"

namespace crossbial {

enum class DotSide { Left, Right };

// The ground field k as an algebra.
Algebra ground_algebra();

// chi.f = (chi⊗f)∘Δ_C (left) or f.chi = (f⊗chi)∘Δ_C (right).
LinMap conv_dot(const LinMap& chi, const LinMap& f, const Coalgebra& c, DotSide side = DotSide::Left);

struct TwoCocycle {
  BialgebraData host;
  LinMap chi;  // B⊗B -> k
  std::optional<LinMap> chi_inv;
};

// The coalgebra B⊗B with Δ = (id⊗flip⊗id)∘(Δ⊗Δ).
Coalgebra square_coalgebra(const BiunitalPair& b);

CheckReport validate_cocycle(const TwoCocycle& c);
LinMap cocycle_inverse(const TwoCocycle& c);

// m^chi = chi.m.chi^-, and S^chi = u.S.u^- with u = chi∘(id⊗S)∘Δ when S is present.
BiunitalPair twist(const BiunitalPair& b, const TwoCocycle& c);

struct DualPairing {
  BialgebraData H;
  BialgebraData A;
  LinMap form;  // H⊗A -> k
};

CheckReport validate_pairing(const DualPairing& p, const BraidingProvider& bp = BraidingProvider::vect_flip());
LinMap pairing_inverse(const DualPairing& p, const BraidingProvider& bp = BraidingProvider::vect_flip());

struct MatchedPairResult {
  LinMap lhd;  // H⊗A -> H
  LinMap rhd;  // H⊗A -> A
  bool is_matched_pair = false;
  bool braiding_involutive = false;
  CheckReport report;
};

// The matched pair (A, H, ⊲, ⊳) is read as the datum with B1 = A, B2 = H,
// mu_l = ⊳, mu_r = ⊲ and trivial coactions.
MatchedPairResult matched_pair_from_pairing(const DualPairing& p, const BraidingProvider& bp);

// H acts on B from the right and on C from the left.
struct DoubleBiproductInput {
  HopfAlgebraData H;
  BialgebraData B;
  LinMap B_action;    // B⊗H -> B
  LinMap B_coaction;  // B -> B⊗H
  BialgebraData C;
  LinMap C_action;    // H⊗C -> C
  LinMap C_coaction;  // C -> H⊗C
  std::optional<LinMap> rho;  // B⊗C -> k
};

// Ψ_{C,B}∘Ψ_{B,C} against (μ_r⊗μ_l)∘(id⊗Ψ_{H,H}⊗id)∘(ν_r⊗ν_l), both B⊗C -> B⊗C.
CheckReport check_psi2(const DoubleBiproductInput& in);
CheckReport check_rho(const DoubleBiproductInput& in);

struct DoubleBiproductResult {
  BialgebraData Z;  // on C⊗H⊗B
  TwoCocycle rho_hat;
  BialgebraData Z_twisted;
  LinMap m_direct;  // twisted product from the explicit formula
  CheckReport report;
};

// Unfused structure maps of Z on the list C, H, B.
LinMap double_biproduct_m(const DoubleBiproductInput& in);
LinMap double_biproduct_delta(const DoubleBiproductInput& in);

DoubleBiproductResult double_biproduct(const DoubleBiproductInput& in);

}  // namespace crossbial
