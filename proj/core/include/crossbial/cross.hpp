#pragma once

#include <string>

#include "crossbial/datum.hpp"

namespace crossbial {

// Bialgebra admissible tuple.
struct BAT {
  BiunitalPair B1;
  BiunitalPair B2;
  LinMap phi12;  // B1⊗B2 -> B2⊗B1
  LinMap phi21;  // B2⊗B1 -> B1⊗B2
};

struct ProjectionSystem {
  BialgebraData A;
  LinMap i1, i2;  // B_j -> A
  LinMap p1, p2;  // A -> B_j
};

struct IdempotentSystem {
  BialgebraData A;
  LinMap Pi1, Pi2;
  std::string b1_name = "B1";
  std::string b2_name = "B2";
};

// Throws NotABat naming the failing axiom.
BialgebraData build_cross_product(const BAT& t, const std::string& name = {});

HopfDatum bat_to_hopf_datum(const BAT& t);

struct Decomposition {
  BAT bat;
  ProjectionSystem system;
  LinMap iso;  // m_A∘(i1⊗i2), from the fused B1⊗B2 onto A
};

Decomposition decompose(const ProjectionSystem& sys);
Decomposition decompose(const IdempotentSystem& sys);

// Statements: trivalent datum, one of i1, i2, p1, p2 an algebra and
// coalgebra morphism, one of Pi1, Pi2 an algebra or coalgebra morphism.
CheckReport verify_trivalent_equivalences(const ProjectionSystem& sys);

}  // namespace crossbial
