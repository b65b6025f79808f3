#include "crossbial/datum.hpp"

#include "crossbial/diagram.hpp"
#include "crossbial/error.hpp"

namespace crossbial {

namespace {

void expect(const LinMap& f, const SpaceList& dom, const SpaceList& cod, const char* what) {
  if (!(f.dom() == dom) || !(f.cod() == cod))
    fail(ErrorKind::Shape, std::string(what) + " must map " + describe(dom) + " -> " + describe(cod) + ", got " +
                               describe(f.dom()) + " -> " + describe(f.cod()));
}

Box B(const LinMap& m) { return Box::of(m); }
Box I(int n = 1) { return Box::id(n); }
Box X() { return Box::braid(); }

}  // namespace

void validate_datum(const HopfDatum& d) {
  validate_pair(d.B1);
  validate_pair(d.B2);
  const SpaceList b1{d.B1.space}, b2{d.B2.space}, b21{d.B2.space, d.B1.space};
  if (d.B1.space.name == d.B2.space.name)
    fail(ErrorKind::Shape, "datum factors need distinct space names");
  expect(d.mu_l, b21, b1, "mu_l");
  expect(d.mu_r, b21, b2, "mu_r");
  expect(d.nu_l, b1, b21, "nu_l");
  expect(d.nu_r, b2, b21, "nu_r");
}

HopfDatum trivial_datum(const BiunitalPair& b1, const BiunitalPair& b2, const BraidingProvider& bp) {
  HopfDatum d{b1, b2, tensor(b2.eps, b1.id()), tensor(b2.eta, b1.id()), tensor(b2.id(), b1.eps),
              tensor(b2.id(), b1.eta), bp};
  validate_datum(d);
  return d;
}

CheckReport check_hopf_datum(const HopfDatum& d) {
  validate_datum(d);
  const BraidingProvider* bp = &d.braiding;
  const SpaceLabel s1 = d.B1.space, s2 = d.B2.space;
  const BiunitalPair &A = d.B1, &H = d.B2;
  const LinMap i1 = A.id(), i2 = H.id();
  CheckReport r;

  CheckReport f1 = check_algebra(algebra_of(A));
  f1.merge(check_coalgebra(coalgebra_of(A)));
  CheckReport f2 = check_algebra(algebra_of(H));
  f2.merge(check_coalgebra(coalgebra_of(H)));
  r.merge(f1, "B1");
  r.merge(f2, "B2");

  r.add("eps1 eta1", compose(A.eps, A.eta), LinMap::scalar(Scalar(1)));
  r.add("eps2 eta2", compose(H.eps, H.eta), LinMap::scalar(Scalar(1)));
  r.add("mu_r unit", compose(d.mu_r, tensor(H.eta, i1)), compose(H.eta, A.eps));
  r.add("nu_l counit", compose(tensor(i2, A.eps), d.nu_l), compose(H.eta, A.eps));
  r.add("mu_r counit", compose(H.eps, d.mu_r), tensor(H.eps, A.eps));
  r.add("mu_l counit", compose(A.eps, d.mu_l), tensor(H.eps, A.eps));
  r.add("mu_l unit", compose(d.mu_l, tensor(i2, A.eta)), compose(A.eta, H.eps));
  r.add("nu_r counit", compose(tensor(H.eps, i1), d.nu_r), compose(A.eta, H.eps));
  r.add("nu_r unit", compose(d.nu_r, H.eta), tensor(H.eta, A.eta));
  r.add("nu_l unit", compose(d.nu_l, A.eta), tensor(H.eta, A.eta));

  if (f1.pass() && f2.pass()) {
    r.merge(check_action(ActionData{s1, H, d.mu_l}, ActionKind::ModuleLeft), "mu_l");
    r.merge(check_action(ActionData{s2, A, d.mu_r}, ActionKind::ModuleRight), "mu_r");
    r.merge(check_action(ActionData{s1, H, d.nu_l}, ActionKind::ComoduleLeft), "nu_l");
    r.merge(check_action(ActionData{s2, A, d.nu_r}, ActionKind::ComoduleRight), "nu_r");
  } else {
    r.add_verdict("(co)module axioms", false, "skipped: a factor fails its algebra or coalgebra axioms");
  }

  const SpaceList aa{s1, s1}, hh{s2, s2}, ha{s2, s1}, a{s1}, h{s2};

  {
    Diagram g(aa, bp);
    g.row({B(A.delta), B(A.delta)})
        .row({I(), B(d.nu_l), I(2)})
        .row({I(2), X(), I()})
        .row({I(), B(d.mu_l), I(2)})
        .row({B(A.m), B(A.m)});
    r.add("B1 bialgebra compatibility", compose(A.delta, A.m), g.evaluate());
  }
  {
    Diagram g(hh, bp);
    g.row({B(H.delta), B(H.delta)})
        .row({I(2), B(d.nu_r), I()})
        .row({I(), X(), I(2)})
        .row({I(2), B(d.mu_r), I()})
        .row({B(H.m), B(H.m)});
    r.add("B2 bialgebra compatibility", compose(H.delta, H.m), g.evaluate());
  }
  {
    Diagram lhs(ha, bp);
    lhs.row({B(H.delta), B(A.delta)})
        .row({I(), X(), I()})
        .row({B(d.mu_l), B(d.mu_r)})
        .row({B(d.nu_l), B(d.nu_r)})
        .row({I(), X(), I()})
        .row({B(H.m), B(A.m)});
    Diagram rhs(ha, bp);
    rhs.row({B(H.delta), B(A.delta)})
        .row({B(d.nu_r), X(), B(d.nu_l)})
        .row({I(), X(), X(), I()})
        .row({B(d.mu_r), X(), B(d.mu_l)})
        .row({B(H.m), B(A.m)});
    r.add("module-comodule compatibility", lhs.evaluate(), rhs.evaluate());
  }
  {
    Diagram g(SpaceList{s2, s2, s1}, bp);
    g.row({I(), B(H.delta), B(A.delta)})
        .row({I(2), X(), I()})
        .row({I(), B(d.mu_l), B(d.mu_r)})
        .row({B(d.mu_r), I()})
        .row({B(H.m)});
    r.add("mu_r module algebra", compose(d.mu_r, tensor(H.m, i1)), g.evaluate());
  }
  {
    Diagram g(SpaceList{s2, s1, s1}, bp);
    g.row({B(H.delta), B(A.delta), I()})
        .row({I(), X(), I(2)})
        .row({B(d.mu_l), B(d.mu_r), I()})
        .row({I(), B(d.mu_l)})
        .row({B(A.m)});
    r.add("mu_l module algebra", compose(d.mu_l, tensor(i2, A.m)), g.evaluate());
  }
  {
    Diagram g(h, bp);
    g.row({B(H.delta)})
        .row({B(d.nu_r), I()})
        .row({I(), B(d.nu_l), B(d.nu_r)})
        .row({I(2), X(), I()})
        .row({I(), B(H.m), B(A.m)});
    r.add("nu_r comodule coalgebra", compose(tensor(H.delta, i1), d.nu_r), g.evaluate());
  }
  {
    Diagram g(a, bp);
    g.row({B(A.delta)})
        .row({I(), B(d.nu_l)})
        .row({B(d.nu_l), B(d.nu_r), I()})
        .row({I(), X(), I(2)})
        .row({B(H.m), B(A.m), I()});
    r.add("nu_l comodule coalgebra", compose(tensor(i2, A.delta), d.nu_l), g.evaluate());
  }
  {
    Diagram g(ha, bp);
    g.row({B(H.delta), B(A.delta)})
        .row({I(), X(), B(d.nu_l)})
        .row({B(d.mu_r), X(), I()})
        .row({B(H.m), B(d.mu_r)});
    r.add("mu_r module coalgebra", compose(H.delta, d.mu_r), g.evaluate());
  }
  {
    Diagram g(ha, bp);
    g.row({B(H.delta), B(A.delta)})
        .row({B(d.nu_r), X(), I()})
        .row({I(), X(), B(d.mu_l)})
        .row({B(d.mu_l), B(A.m)});
    r.add("mu_l module coalgebra", compose(A.delta, d.mu_l), g.evaluate());
  }
  {
    Diagram g(hh, bp);
    g.row({B(H.delta), B(d.nu_r)})
        .row({B(d.nu_r), X(), I()})
        .row({I(), X(), B(d.mu_l)})
        .row({B(H.m), B(A.m)});
    r.add("nu_r comodule algebra", compose(d.nu_r, H.m), g.evaluate());
  }
  {
    Diagram g(aa, bp);
    g.row({B(d.nu_l), B(A.delta)})
        .row({I(), X(), B(d.nu_l)})
        .row({B(d.mu_r), X(), I()})
        .row({B(H.m), B(A.m)});
    r.add("nu_l comodule algebra", compose(d.nu_l, A.m), g.evaluate());
  }
  return r;
}

InducedStructures induced_structures_unchecked(const HopfDatum& d) {
  validate_datum(d);
  const BraidingProvider* bp = &d.braiding;
  const BiunitalPair &A = d.B1, &H = d.B2;
  const SpaceLabel s1 = A.space, s2 = H.space;
  InducedStructures s;
  {
    Diagram g(SpaceList{s1, s2}, bp);
    g.row({B(d.nu_l), B(d.nu_r)}).row({I(), X(), I()}).row({B(H.m), B(A.m)});
    s.phi12 = g.evaluate();
  }
  {
    Diagram g(SpaceList{s2, s1}, bp);
    g.row({B(H.delta), B(A.delta)}).row({I(), X(), I()}).row({B(d.mu_l), B(d.mu_r)});
    s.phi21 = g.evaluate();
  }
  s.m_B = compose(tensor(A.m, H.m), tensor({A.id(), s.phi21, H.id()}));
  s.delta_B = compose(tensor({A.id(), s.phi12, H.id()}), tensor(A.delta, H.delta));
  s.eta_B = tensor(A.eta, H.eta);
  s.eps_B = tensor(A.eps, H.eps);
  return s;
}

InducedStructures induced_structures(const HopfDatum& d) {
  CheckReport r = check_hopf_datum(d);
  if (!r.pass())
    fail(ErrorKind::Precondition, "not a Hopf datum: axiom '" + r.first_failure()->name + "' fails");
  return induced_structures_unchecked(d);
}

LinMap fixed_point_f1(const HopfDatum&, const InducedStructures& s) { return compose(s.delta_B, s.m_B); }

LinMap fixed_point_f2(const HopfDatum& d, const InducedStructures& s) {
  const SpaceList b{d.B1.space, d.B2.space};
  LinMap psi = d.braiding.braiding(b, b);
  return compose(tensor(s.m_B, s.m_B),
                 compose(tensor({LinMap::identity(b), psi, LinMap::identity(b)}), tensor(s.delta_B, s.delta_B)));
}

std::string fused_name(const HopfDatum& d) { return d.B1.space.name + "⊗" + d.B2.space.name; }

BialgebraData build_bialgebra(const HopfDatum& d) {
  InducedStructures s = induced_structures(d);
  const SpaceList b{d.B1.space, d.B2.space};
  CheckReport r = check_algebra(Algebra{b, s.m_B, s.eta_B});
  r.merge(check_coalgebra(Coalgebra{b, s.delta_B, s.eps_B}));
  r.add("bialgebra compatibility", fixed_point_f1(d, s), fixed_point_f2(d, s));
  const SpaceList k{};
  r.add("coproduct of unit", compose(s.delta_B, s.eta_B), tensor(s.eta_B, s.eta_B));
  r.add("counit of product", compose(s.eps_B, s.m_B), tensor(s.eps_B, s.eps_B));
  r.add("counit of unit", compose(s.eps_B, s.eta_B), LinMap::scalar(Scalar(1)));
  if (!r.pass())
    fail(ErrorKind::InternalConsistency,
         "cross product of a valid datum fails '" + r.first_failure()->name + "'");
  SpaceLabel f{fused_name(d), d.B1.dim() * d.B2.dim()};
  SpaceList x{f};
  return BiunitalPair{f,
                      s.m_B.relabel(SpaceList{f, f}, x),
                      s.eta_B.relabel(k, x),
                      s.delta_B.relabel(x, SpaceList{f, f}),
                      s.eps_B.relabel(x, k),
                      std::nullopt};
}

// ---------------------------------------------------------------------------

std::string TrivalencePattern::str() const {
  std::string s;
  for (bool b : {nu_l, nu_r, mu_l, mu_r}) s += b ? '1' : '0';
  return s;
}

TrivalencePattern TrivalencePattern::parse(const std::string& bits) {
  if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
    fail(ErrorKind::Parse, "pattern must be four bits, got '" + bits + "'");
  return TrivalencePattern{bits[0] == '1', bits[1] == '1', bits[2] == '1', bits[3] == '1'};
}

TrivalencePattern mirror(const TrivalencePattern& p) { return {p.nu_r, p.nu_l, p.mu_r, p.mu_l}; }
TrivalencePattern dual(const TrivalencePattern& p) { return {p.mu_l, p.mu_r, p.nu_l, p.nu_r}; }

TrivalencePattern trivalence_pattern(const HopfDatum& d) {
  validate_datum(d);
  const LinMap i1 = d.B1.id(), i2 = d.B2.id();
  TrivalencePattern p;
  p.nu_l = !(d.nu_l == tensor(d.B2.eta, i1));
  p.nu_r = !(d.nu_r == tensor(i2, d.B1.eta));
  p.mu_l = !(d.mu_l == tensor(d.B2.eps, i1));
  p.mu_r = !(d.mu_r == tensor(i2, d.B1.eps));
  return p;
}

TrivalenceResult trivalence(const HopfDatum& d) {
  TrivalenceResult res;
  res.pattern = trivalence_pattern(d);
  res.trivalent = res.pattern.nontrivial() < 4;
  BialgebraData b = build_bialgebra(d);
  const SpaceList x{b.space};
  const LinMap i1 = d.B1.id(), i2 = d.B2.id();
  struct Witness {
    const char* name;
    LinMap f;
    const BiunitalPair* src;
    const BiunitalPair* dst;
    bool trivial;
  };
  std::vector<Witness> ws{
      {"id1⊗eta2", tensor(i1, d.B2.eta).relabel(SpaceList{d.B1.space}, x), &d.B1, &b, !res.pattern.nu_l},
      {"eta1⊗id2", tensor(d.B1.eta, i2).relabel(SpaceList{d.B2.space}, x), &d.B2, &b, !res.pattern.nu_r},
      {"id1⊗eps2", tensor(i1, d.B2.eps).relabel(x, SpaceList{d.B1.space}), &b, &d.B1, !res.pattern.mu_l},
      {"eps1⊗id2", tensor(d.B1.eps, i2).relabel(x, SpaceList{d.B2.space}), &b, &d.B2, !res.pattern.mu_r},
  };
  res.equivalence_holds = true;
  for (const auto& w : ws) {
    MorphismClass c = classify_morphism(w.f, *w.src, *w.dst);
    bool bimorphism = c.is_algebra_morphism && c.is_coalgebra_morphism;
    if (bimorphism) res.witnesses.push_back(w.name);
    if (bimorphism != w.trivial) res.equivalence_holds = false;
  }
  return res;
}

// ---------------------------------------------------------------------------

const char* to_string(Family f) {
  switch (f) {
    case Family::TensorProduct: return "tensor product";
    case Family::Biproduct: return "biproduct";
    case Family::DoubleCross: return "double cross product";
    case Family::Bicross: return "bicross product";
    case Family::General: return "general trivalent";
    case Family::NonTrivalent: return "non-trivalent";
  }
  return "?";
}

Classification classify(const TrivalencePattern& p) {
  static const std::vector<std::pair<Family, std::vector<std::string>>> boxes{
      {Family::TensorProduct, {"0000"}},
      {Family::Biproduct, {"1010", "0101"}},
      {Family::DoubleCross, {"0011", "1100"}},
      {Family::Bicross, {"1001", "0110"}},
      {Family::General, {"1101", "1110", "0111", "1011"}},
      {Family::NonTrivalent, {"1111"}},
  };
  Classification c;
  c.pattern = p;
  const std::string s = p.str();
  auto below = [&](const std::string& box) {
    for (int i = 0; i < 4; ++i)
      if (s[i] == '1' && box[i] == '0') return false;
    return true;
  };
  bool found = false;
  for (const auto& [family, pats] : boxes) {
    bool exact = false, contains = false;
    for (const auto& q : pats) {
      exact = exact || q == s;
      contains = contains || below(q);
    }
    if (contains && family != Family::NonTrivalent) c.containing.push_back(family);
    if (exact) {
      c.family = family;
      found = true;
    }
  }
  if (!found) c.family = c.containing.front();
  if (p.nontrivial() == 4) c.family = Family::NonTrivalent;
  return c;
}

Classification classify(const HopfDatum& d) { return classify(trivalence_pattern(d)); }

}  // namespace crossbial
