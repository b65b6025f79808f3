#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossbial/braiding.hpp"

namespace crossbial {

struct Counterexample {
  std::vector<int> output;  // basis multi-index in the codomain
  std::vector<int> input;   // basis multi-index in the domain
  Scalar lhs;
  Scalar rhs;
};

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::string detail;
};

class CheckReport {
 public:
  // Records lhs == rhs under `name`, keeping the first differing entry.
  bool add(const std::string& name, const LinMap& lhs, const LinMap& rhs);
  void add_verdict(const std::string& name, bool pass, const std::string& detail = {});
  void merge(const CheckReport& other, const std::string& prefix = {});

  bool pass() const;
  const std::vector<AxiomResult>& axioms() const { return axioms_; }
  const AxiomResult* find(std::string_view name) const;
  const AxiomResult* first_failure() const;
  std::string summary() const;

 private:
  std::vector<AxiomResult> axioms_;
};

enum class StructureKind { Algebra, Coalgebra, Bialgebra, Hopf };
enum class ActionKind { ModuleLeft, ModuleRight, ComoduleLeft, ComoduleRight };

// Algebra or coalgebra on a list of spaces (e.g. the coalgebra B⊗B).
struct Algebra {
  SpaceList spaces;
  LinMap m;
  LinMap eta;
};
struct Coalgebra {
  SpaceList spaces;
  LinMap delta;
  LinMap eps;
};

Algebra algebra_of(const BiunitalPair& b);
Coalgebra coalgebra_of(const BiunitalPair& b);
// Tensor coalgebra with delta = (id⊗Ψ⊗id)∘(Δ⊗Δ).
Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b, const BraidingProvider& bp);
Algebra tensor_algebra(const Algebra& a, const Algebra& b, const BraidingProvider& bp);

CheckReport check_algebra(const Algebra& a);
CheckReport check_coalgebra(const Coalgebra& c);

CheckReport check_axioms(const BiunitalPair& s, StructureKind kind,
                         const BraidingProvider& bp = BraidingProvider::vect_flip());

CheckReport check_action(const ActionData& a, ActionKind kind);

CheckReport check_crossed_module(const SpaceLabel& carrier, const LinMap& action, const LinMap& coaction,
                                 const HopfAlgebraData& host, Side side = Side::Right);

struct MorphismClass {
  bool is_algebra_morphism = false;
  bool is_coalgebra_morphism = false;
};

MorphismClass classify_morphism(const LinMap& f, const BiunitalPair& src, const BiunitalPair& dst);
CheckReport morphism_report(const LinMap& f, const BiunitalPair& src, const BiunitalPair& dst);

// m_A∘(f⊗g)∘Δ_C
LinMap convolve(const LinMap& f, const LinMap& g, const Coalgebra& c, const Algebra& a);
LinMap convolution_unit(const Coalgebra& c, const Algebra& a);
LinMap convolution_inverse(const LinMap& f, const Coalgebra& c, const Algebra& a);

}  // namespace crossbial
