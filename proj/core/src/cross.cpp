#include "crossbial/cross.hpp"

#include "crossbial/error.hpp"

namespace crossbial {

namespace {

SpaceList one(const SpaceLabel& s) { return SpaceList{s}; }

void expect(const LinMap& f, const SpaceList& dom, const SpaceList& cod, const char* what) {
  if (!(f.dom() == dom) || !(f.cod() == cod))
    fail(ErrorKind::Shape, std::string(what) + " must map " + describe(dom) + " -> " + describe(cod));
}

std::string bad(const CheckReport& r) {
  const AxiomResult* a = r.first_failure();
  std::string s = "'" + a->name + "'";
  if (a->counterexample) {
    s += " at output";
    for (int v : a->counterexample->output) s += " " + std::to_string(v);
    s += ", input";
    for (int v : a->counterexample->input) s += " " + std::to_string(v);
    s += " (" + a->counterexample->lhs.str() + " vs " + a->counterexample->rhs.str() + ")";
  }
  return s;
}

BiunitalPair induced_factor(const BialgebraData& A, const LinMap& i, const LinMap& p) {
  const SpaceList b = i.dom();
  const SpaceLabel s = b.front();
  return BiunitalPair{s,
                      compose(p, compose(A.m, tensor(i, i))),
                      compose(p, A.eta),
                      compose(tensor(p, p), compose(A.delta, i)),
                      compose(A.eps, i),
                      std::nullopt};
}

bool algebra_morphism(const LinMap& f, const BiunitalPair& src, const BiunitalPair& dst) {
  return classify_morphism(f, src, dst).is_algebra_morphism;
}

}  // namespace

BialgebraData build_cross_product(const BAT& t, const std::string& name) {
  validate_pair(t.B1);
  validate_pair(t.B2);
  const SpaceLabel s1 = t.B1.space, s2 = t.B2.space;
  expect(t.phi12, SpaceList{s1, s2}, SpaceList{s2, s1}, "phi12");
  expect(t.phi21, SpaceList{s2, s1}, SpaceList{s1, s2}, "phi21");
  const LinMap i1 = t.B1.id(), i2 = t.B2.id();
  const LinMap m = compose(tensor(t.B1.m, t.B2.m), tensor({i1, t.phi21, i2}));
  const LinMap delta = compose(tensor({i1, t.phi12, i2}), tensor(t.B1.delta, t.B2.delta));
  SpaceLabel f{name.empty() ? s1.name + "⊗" + s2.name : name, s1.dim * s2.dim};
  const SpaceList x{f};
  BiunitalPair b{f,
                 m.relabel(SpaceList{f, f}, x),
                 tensor(t.B1.eta, t.B2.eta).relabel({}, x),
                 delta.relabel(x, SpaceList{f, f}),
                 tensor(t.B1.eps, t.B2.eps).relabel(x, {}),
                 std::nullopt};
  CheckReport r = check_axioms(b, StructureKind::Bialgebra);
  if (!r.pass()) fail(ErrorKind::NotABat, "cross product fails " + bad(r));
  return b;
}

HopfDatum bat_to_hopf_datum(const BAT& t) {
  build_cross_product(t);
  const LinMap i1 = t.B1.id(), i2 = t.B2.id();
  HopfDatum d{t.B1,
              t.B2,
              compose(tensor(i1, t.B2.eps), t.phi21),
              compose(t.phi12, tensor(i1, t.B2.eta)),
              compose(tensor(t.B1.eps, i2), t.phi21),
              compose(t.phi12, tensor(t.B1.eta, i2)),
              BraidingProvider::vect_flip()};
  CheckReport r = check_hopf_datum(d);
  if (!r.pass()) fail(ErrorKind::InternalConsistency, "datum of a BAT fails " + bad(r));
  InducedStructures s = induced_structures_unchecked(d);
  if (!(s.phi12 == t.phi12) || !(s.phi21 == t.phi21))
    fail(ErrorKind::InternalConsistency, "datum of a BAT does not reproduce its phi maps");
  return d;
}

Decomposition decompose(const ProjectionSystem& sys) {
  const BialgebraData& A = sys.A;
  validate_pair(A);
  const SpaceList a = one(A.space);
  if (sys.i1.dom().size() != 1 || sys.i2.dom().size() != 1)
    fail(ErrorKind::Shape, "injections must start at a single space");
  const SpaceList b1 = sys.i1.dom(), b2 = sys.i2.dom();
  expect(sys.i1, b1, a, "i1");
  expect(sys.i2, b2, a, "i2");
  expect(sys.p1, a, b1, "p1");
  expect(sys.p2, a, b2, "p2");
  if (!(compose(sys.p1, sys.i1) == LinMap::identity(b1)))
    fail(ErrorKind::InvalidSystem, "p1∘i1 is not the identity");
  if (!(compose(sys.p2, sys.i2) == LinMap::identity(b2)))
    fail(ErrorKind::InvalidSystem, "p2∘i2 is not the identity");

  const BiunitalPair B1 = induced_factor(A, sys.i1, sys.p1);
  const BiunitalPair B2 = induced_factor(A, sys.i2, sys.p2);
  if (!algebra_morphism(sys.i1, B1, A)) fail(ErrorKind::InvalidSystem, "i1 is not an algebra morphism");
  if (!algebra_morphism(sys.i2, B2, A)) fail(ErrorKind::InvalidSystem, "i2 is not an algebra morphism");
  if (!classify_morphism(sys.p1, A, B1).is_coalgebra_morphism)
    fail(ErrorKind::InvalidSystem, "p1 is not a coalgebra morphism");
  if (!classify_morphism(sys.p2, A, B2).is_coalgebra_morphism)
    fail(ErrorKind::InvalidSystem, "p2 is not a coalgebra morphism");

  const LinMap theta = compose(A.m, tensor(sys.i1, sys.i2));
  const LinMap theta_inv = compose(tensor(sys.p1, sys.p2), A.delta);
  if (!(compose(theta_inv, theta) == LinMap::identity(concat(b1, b2))) ||
      !(compose(theta, theta_inv) == LinMap::identity(a)))
    fail(ErrorKind::NotSplitting, "m_A∘(i1⊗i2) and (p1⊗p2)∘Δ_A are not mutually inverse");

  BAT t{B1, B2, compose(tensor(sys.p2, sys.p1), compose(A.delta, theta)),
        compose(theta_inv, compose(A.m, tensor(sys.i2, sys.i1)))};
  BialgebraData x = build_cross_product(t);
  LinMap iso = theta.relabel(SpaceList{x.space}, a);
  CheckReport r = morphism_report(iso, x, A);
  if (!r.pass()) fail(ErrorKind::InternalConsistency, "m_A∘(i1⊗i2) is not a bialgebra map: " + bad(r));
  return Decomposition{std::move(t), sys, std::move(iso)};
}

Decomposition decompose(const IdempotentSystem& sys) {
  const BialgebraData& A = sys.A;
  validate_pair(A);
  const SpaceList a = one(A.space);
  expect(sys.Pi1, a, a, "Pi1");
  expect(sys.Pi2, a, a, "Pi2");
  for (const LinMap* p : {&sys.Pi1, &sys.Pi2}) {
    const char* nm = p == &sys.Pi1 ? "Pi1" : "Pi2";
    const LinMap& P = *p;
    if (!(compose(P, P) == P)) fail(ErrorKind::InvalidSystem, std::string(nm) + " is not idempotent");
    const LinMap pp = tensor(P, P);
    if (!(compose(A.m, pp) == compose(P, compose(A.m, pp))))
      fail(ErrorKind::InvalidSystem, std::string(nm) + ": m∘(Π⊗Π) ≠ Π∘m∘(Π⊗Π)");
    if (!(compose(P, A.eta) == A.eta)) fail(ErrorKind::InvalidSystem, std::string(nm) + ": Π∘η ≠ η");
    if (!(compose(pp, A.delta) == compose(pp, compose(A.delta, P))))
      fail(ErrorKind::InvalidSystem, std::string(nm) + ": (Π⊗Π)∘Δ ≠ (Π⊗Π)∘Δ∘Π");
    if (!(compose(A.eps, P) == A.eps)) fail(ErrorKind::InvalidSystem, std::string(nm) + ": ε∘Π ≠ ε");
  }
  const LinMap p12 = tensor(sys.Pi1, sys.Pi2);
  const LinMap in = compose(A.m, p12);
  const LinMap out = compose(p12, A.delta);
  if (!(compose(in, out) == LinMap::identity(a)) || !(compose(out, in) == p12))
    fail(ErrorKind::NotSplitting, "m∘(Π1⊗Π2) and (Π1⊗Π2)∘Δ do not split Π1⊗Π2");
  Splitting s1 = split_idempotent(sys.Pi1, SpaceLabel{sys.b1_name, static_cast<int>(rank(sys.Pi1))});
  Splitting s2 = split_idempotent(sys.Pi2, SpaceLabel{sys.b2_name, static_cast<int>(rank(sys.Pi2))});
  return decompose(ProjectionSystem{A, s1.inj, s2.inj, s1.proj, s2.proj});
}

CheckReport verify_trivalent_equivalences(const ProjectionSystem& sys) {
  Decomposition dec = decompose(sys);
  const BialgebraData& A = sys.A;
  HopfDatum d = bat_to_hopf_datum(dec.bat);
  const bool s1 = trivalence_pattern(d).nontrivial() < 4;

  auto both = [](const MorphismClass& c) { return c.is_algebra_morphism && c.is_coalgebra_morphism; };
  const BiunitalPair &B1 = dec.bat.B1, &B2 = dec.bat.B2;
  const bool s3 = both(classify_morphism(sys.i1, B1, A)) || both(classify_morphism(sys.i2, B2, A)) ||
                  both(classify_morphism(sys.p1, A, B1)) || both(classify_morphism(sys.p2, A, B2));

  auto either = [](const MorphismClass& c) { return c.is_algebra_morphism || c.is_coalgebra_morphism; };
  const bool s4 = either(classify_morphism(compose(sys.i1, sys.p1), A, A)) ||
                  either(classify_morphism(compose(sys.i2, sys.p2), A, A));

  CheckReport r;
  r.add_verdict("trivalent Hopf datum", s1);
  r.add_verdict("injection or projection is a bialgebra map", s3);
  r.add_verdict("idempotent is an algebra or coalgebra map", s4);
  r.add_verdict("verdicts agree", s1 == s3 && s3 == s4);
  return r;
}

}  // namespace crossbial
