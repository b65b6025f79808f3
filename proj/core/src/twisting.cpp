#include "crossbial/twisting.hpp"

#include "crossbial/diagram.hpp"
#include "crossbial/error.hpp"

namespace crossbial {

namespace {

BiunitalPair fuse(const SpaceList& parts, const LinMap& m, const LinMap& eta, const LinMap& delta, const LinMap& eps) {
  std::string name;
  for (const auto& s : parts) name += (name.empty() ? "" : "⊗") + s.name;
  SpaceLabel f{name, static_cast<int>(total_dim(parts))};
  SpaceList x{f};
  return BiunitalPair{f, m.relabel(SpaceList{f, f}, x), eta.relabel({}, x), delta.relabel(x, SpaceList{f, f}),
                      eps.relabel(x, {}), std::nullopt};
}

std::string first_failure(const CheckReport& r) { return r.first_failure() ? r.first_failure()->name : "?"; }

}  // namespace

Algebra ground_algebra() { return Algebra{{}, LinMap::scalar(Scalar(1)), LinMap::scalar(Scalar(1))}; }

LinMap conv_dot(const LinMap& chi, const LinMap& f, const Coalgebra& c, DotSide side) {
  if (!(chi.dom() == c.spaces) || !chi.cod().empty())
    fail(ErrorKind::Shape, "dot product needs a functional on " + describe(c.spaces));
  if (!(f.dom() == c.spaces)) fail(ErrorKind::Shape, "dot product needs a map out of " + describe(c.spaces));
  return side == DotSide::Left ? compose(tensor(chi, f), c.delta) : compose(tensor(f, chi), c.delta);
}

Coalgebra square_coalgebra(const BiunitalPair& b) {
  return tensor_coalgebra(coalgebra_of(b), coalgebra_of(b), BraidingProvider::vect_flip());
}

CheckReport validate_cocycle(const TwoCocycle& c) {
  const BiunitalPair& b = c.host;
  CheckReport host = check_axioms(b, StructureKind::Bialgebra);
  if (!host.pass()) fail(ErrorKind::Precondition, "cocycle host fails '" + first_failure(host) + "'");
  const SpaceList bb{b.space, b.space};
  if (!(c.chi.dom() == bb) || !c.chi.cod().empty()) fail(ErrorKind::Shape, "cocycle must map B⊗B -> k");
  const Coalgebra sq = square_coalgebra(b);
  const LinMap chim = conv_dot(c.chi, b.m, sq);
  CheckReport r;
  r.add("cocycle condition", compose(c.chi, tensor(b.id(), chim)), compose(c.chi, tensor(chim, b.id())));
  bool left = r.add("cocycle left unit", compose(c.chi, tensor(b.eta, b.id())), b.eps);
  bool right = r.add("cocycle right unit", compose(c.chi, tensor(b.id(), b.eta)), b.eps);
  r.add_verdict("cocycle unit halves agree", left == right);
  return r;
}

LinMap cocycle_inverse(const TwoCocycle& c) {
  if (c.chi_inv) return *c.chi_inv;
  return convolution_inverse(c.chi, square_coalgebra(c.host), ground_algebra());
}

BiunitalPair twist(const BiunitalPair& b, const TwoCocycle& c) {
  if (!(b.space == c.host.space)) fail(ErrorKind::Shape, "cocycle lives on a different space");
  CheckReport r = validate_cocycle(c);
  if (!r.pass()) fail(ErrorKind::Precondition, "not a 2-cocycle: '" + first_failure(r) + "' fails");
  const Coalgebra sq = square_coalgebra(b);
  const LinMap inv = cocycle_inverse(c);
  BiunitalPair out = b;
  out.m = conv_dot(inv, conv_dot(c.chi, b.m, sq), sq, DotSide::Right);
  if (b.S) {
    const Coalgebra cb = coalgebra_of(b);
    LinMap u = compose(c.chi, compose(tensor(b.id(), *b.S), b.delta));
    LinMap u_inv = convolution_inverse(u, cb, ground_algebra());
    out.S = conv_dot(u_inv, conv_dot(u, *b.S, cb), cb, DotSide::Right);
  }
  CheckReport check = check_axioms(out, out.S ? StructureKind::Hopf : StructureKind::Bialgebra);
  if (!check.pass()) fail(ErrorKind::InternalConsistency, "twisted structure fails '" + first_failure(check) + "'");
  return out;
}

// ---------------------------------------------------------------------------

CheckReport validate_pairing(const DualPairing& p, const BraidingProvider& bp) {
  const BiunitalPair &H = p.H, &A = p.A;
  if (!(p.form.dom() == SpaceList{H.space, A.space}) || !p.form.cod().empty())
    fail(ErrorKind::Shape, "pairing must map H⊗A -> k");
  const LinMap ih = H.id(), ia = A.id();
  CheckReport r;
  r.add("pairing with product in H", compose(p.form, tensor(H.m, ia)),
        compose(p.form, compose(tensor({ih, p.form, ia}),
                                tensor({ih, ih, compose(bp.braiding(A.space, A.space), A.delta)}))));
  r.add("pairing with product in A", compose(p.form, tensor(ih, A.m)),
        compose(p.form, compose(tensor({ih, p.form, ia}), tensor({H.delta, ia, ia}))));
  r.add("pairing with unit of H", compose(p.form, tensor(H.eta, ia)), A.eps);
  r.add("pairing with unit of A", compose(p.form, tensor(ih, A.eta)), H.eps);
  return r;
}

LinMap pairing_inverse(const DualPairing& p, const BraidingProvider& bp) {
  return convolution_inverse(p.form, tensor_coalgebra(coalgebra_of(p.H), coalgebra_of(p.A), bp), ground_algebra());
}

MatchedPairResult matched_pair_from_pairing(const DualPairing& p, const BraidingProvider& bp) {
  CheckReport valid = validate_pairing(p, bp);
  if (!valid.pass()) fail(ErrorKind::Precondition, "pairing fails '" + first_failure(valid) + "'");
  const BiunitalPair &H = p.H, &A = p.A;
  const LinMap ih = H.id(), ia = A.id();
  const LinMap inv = pairing_inverse(p, bp);
  const LinMap dh2 = compose(tensor(H.delta, ih), H.delta);
  const LinMap da2 = compose(tensor(A.delta, ia), A.delta);
  MatchedPairResult res;
  res.lhd = compose(tensor({inv, ih, p.form}),
                    compose(tensor({ih, bp.braiding(SpaceList{H.space, H.space}, SpaceList{A.space}), ia}),
                            tensor(dh2, A.delta)));
  res.rhd = compose(tensor({inv, ia, p.form}),
                    compose(tensor({ih, bp.braiding(SpaceList{H.space}, SpaceList{A.space, A.space}), ia}),
                            tensor(H.delta, da2)));
  res.report.merge(valid);
  res.report.merge(check_action(ActionData{A.space, H, res.rhd}, ActionKind::ModuleLeft), "⊳");
  res.report.merge(check_action(ActionData{H.space, A, res.lhd}, ActionKind::ModuleRight), "⊲");
  HopfDatum d{A, H, res.rhd, tensor(H.eta, ia), res.lhd, tensor(ih, A.eta), bp};
  CheckReport datum = check_hopf_datum(d);
  res.is_matched_pair = datum.pass();
  res.report.merge(datum, "matched pair");
  const LinMap sq = compose(bp.braiding(H.space, A.space), bp.braiding(A.space, H.space));
  res.braiding_involutive = sq == LinMap::identity(SpaceList{A.space, H.space});
  res.report.add_verdict("braiding involutive", res.braiding_involutive);
  res.report.add_verdict("matched pair iff involutive", res.is_matched_pair == res.braiding_involutive);
  return res;
}

// ---------------------------------------------------------------------------

CheckReport check_psi2(const DoubleBiproductInput& in) {
  const SpaceLabel b = in.B.space, c = in.C.space, h = in.H.space;
  CheckReport r;
  r.add("double braiding of B and C",
        compose(flip(c, b), flip(b, c)),
        compose(tensor(in.B_action, in.C_action),
                compose(tensor({in.B.id(), flip(h, h), in.C.id()}), tensor(in.B_coaction, in.C_coaction))));
  return r;
}

CheckReport check_rho(const DoubleBiproductInput& in) {
  if (!in.rho) fail(ErrorKind::Precondition, "no pairing rho supplied");
  const LinMap& rho = *in.rho;
  const SpaceLabel b = in.B.space, c = in.C.space;
  if (!(rho.dom() == SpaceList{b, c}) || !rho.cod().empty()) fail(ErrorKind::Shape, "rho must map B⊗C -> k");
  const LinMap ib = in.B.id(), ic = in.C.id();
  const LinMap rho2 = compose(rho, tensor({ib, rho, ic}));
  const LinMap yd = compose(tensor(ib, in.B_action),
                            compose(tensor(flip(b, b), in.H.id()), tensor(ib, in.B_coaction)));
  CheckReport r;
  r.add("rho balanced over H", compose(rho, tensor(in.B_action, ic)), compose(rho, tensor(ib, in.C_action)));
  r.add("rho with product in C", compose(rho, tensor(ib, in.C.m)),
        compose(rho2, tensor({compose(flip(b, b), in.B.delta), ic, ic})));
  r.add("rho with product in B", compose(rho, tensor(in.B.m, ic)),
        compose(rho2, tensor(yd, compose(flip(c, c), in.C.delta))));
  return r;
}

LinMap double_biproduct_m(const DoubleBiproductInput& in) {
  const SpaceLabel b = in.B.space, c = in.C.space, h = in.H.space;
  Diagram g(SpaceList{c, h, b, c, h, b});
  g.row({Box::id(), Box::of(in.H.delta), Box::flip(), Box::of(in.H.delta), Box::id()})
      .row({Box::id(2), Box::flip(), Box::flip(), Box::id(2)})
      .row({Box::id(), Box::of(in.C_action), Box::of(in.H.m), Box::of(in.B_action), Box::id()})
      .row({Box::of(in.C.m), Box::id(), Box::of(in.B.m)});
  return g.evaluate();
}

LinMap double_biproduct_delta(const DoubleBiproductInput& in) {
  const SpaceLabel b = in.B.space, c = in.C.space, h = in.H.space;
  Diagram g(SpaceList{c, h, b});
  g.row({Box::of(in.C.delta), Box::id(), Box::of(in.B.delta)})
      .row({Box::id(), Box::of(in.C_coaction), Box::of(in.H.delta), Box::of(in.B_coaction), Box::id()})
      .row({Box::id(2), Box::flip(), Box::flip(), Box::id(2)})
      .row({Box::id(), Box::of(in.H.m), Box::flip(), Box::of(in.H.m), Box::id()});
  return g.evaluate();
}

DoubleBiproductResult double_biproduct(const DoubleBiproductInput& in) {
  const SpaceLabel b = in.B.space, c = in.C.space, h = in.H.space;
  const LinMap ib = in.B.id(), ic = in.C.id(), ih = in.H.id();
  DoubleBiproductResult res;
  CheckReport& r = res.report;

  CheckReport hopf = check_axioms(in.H, StructureKind::Hopf);
  if (!hopf.pass()) fail(ErrorKind::Precondition, "H fails '" + first_failure(hopf) + "'");
  CheckReport cmB = check_crossed_module(b, in.B_action, in.B_coaction, in.H, Side::Right);
  if (!cmB.pass()) fail(ErrorKind::Precondition, "B is not a right crossed module: '" + first_failure(cmB) + "'");
  CheckReport cmC = check_crossed_module(c, in.C_action, in.C_coaction, in.H, Side::Left);
  if (!cmC.pass()) fail(ErrorKind::Precondition, "C is not a left crossed module: '" + first_failure(cmC) + "'");
  r.merge(cmB, "B");
  r.merge(cmC, "C");
  CheckReport psi2 = check_psi2(in);
  if (!psi2.pass()) fail(ErrorKind::Precondition, "double braiding condition fails");
  r.merge(psi2);
  CheckReport coc = check_rho(in);
  if (!coc.pass()) fail(ErrorKind::Precondition, "rho condition '" + first_failure(coc) + "' fails");
  r.merge(coc);

  const SpaceList chb{c, h, b};
  const LinMap mz = double_biproduct_m(in);
  const LinMap dz = double_biproduct_delta(in);
  const LinMap etaz = tensor({in.C.eta, in.H.eta, in.B.eta});
  const LinMap epsz = tensor({in.C.eps, in.H.eps, in.B.eps});
  res.Z = fuse(chb, mz, etaz, dz, epsz);
  CheckReport zr = check_axioms(res.Z, StructureKind::Bialgebra);
  r.merge(zr, "Z");
  if (!zr.pass()) return res;

  // canonical sub- and quotient bialgebras
  auto sub = [&](const char* name, const LinMap& inj, const LinMap& proj) {
    const SpaceList part = inj.dom();
    BiunitalPair s = fuse(part, compose(proj, compose(mz, tensor(inj, inj))), compose(proj, etaz),
                          compose(tensor(proj, proj), compose(dz, inj)), compose(epsz, inj));
    const SpaceList x{s.space}, zx{res.Z.space};
    r.merge(check_axioms(s, StructureKind::Bialgebra), std::string(name));
    r.add_verdict(std::string(name) + " monomorphism", morphism_report(inj.relabel(x, zx), s, res.Z).pass());
    r.add_verdict(std::string(name) + " epimorphism", morphism_report(proj.relabel(zx, x), res.Z, s).pass());
  };
  sub("C⋊H", tensor({ic, ih, in.B.eta}), tensor({ic, ih, in.B.eps}));
  sub("H⋉B", tensor({in.C.eta, ih, ib}), tensor({in.C.eps, ih, ib}));
  {
    const LinMap iota = tensor({ic, in.H.eta, ib});
    const LinMap proj = tensor({ic, in.H.eps, ib});
    const BraidingProvider flip_bp = BraidingProvider::vect_flip();
    Algebra cb = tensor_algebra(algebra_of(in.C), algebra_of(in.B), flip_bp);
    Coalgebra cbc = tensor_coalgebra(coalgebra_of(in.C), coalgebra_of(in.B), flip_bp);
    r.add("C⊗B algebra monomorphism", compose(mz, tensor(iota, iota)), compose(iota, cb.m));
    r.add("C⊗B coalgebra epimorphism", compose(tensor(proj, proj), dz), compose(cbc.delta, proj));
  }

  // rho_hat = eps⊗rho⊗eps on Z⊗Z
  const LinMap rho_hat = tensor({in.C.eps, in.H.eps, *in.rho, in.H.eps, in.B.eps})
                             .relabel(SpaceList{res.Z.space, res.Z.space}, {});
  res.rho_hat = TwoCocycle{res.Z, rho_hat, std::nullopt};
  CheckReport cr = validate_cocycle(res.rho_hat);
  r.merge(cr, "rho_hat");
  if (!cr.pass()) return res;
  res.Z_twisted = twist(res.Z, res.rho_hat);

  // explicit twisted product
  const LinMap rho_inv = convolution_inverse(
      *in.rho, tensor_coalgebra(coalgebra_of(in.B), coalgebra_of(in.C), BraidingProvider::vect_flip()),
      ground_algebra());
  const LinMap db2 = compose(tensor(in.B.delta, ib), in.B.delta);
  const LinMap dc2 = compose(tensor(in.C.delta, ic), in.C.delta);
  LinMap step = tensor({ic, ih, db2, dc2, ih, ib});
  step = compose(tensor({ic, ih, in.B_coaction, ib, ib, ic, ic, in.C_coaction, ih, ib}), step);
  step = compose(permutation(step.cod(), {2, 6, 5, 9, 0, 1, 3, 4, 7, 8, 10, 11}), step);
  step = compose(tensor({*in.rho, rho_inv, ic, in.H.m, ib, ic, in.H.m, ib}), step);
  res.m_direct = compose(mz, step);
  r.add("twisted product formula", res.Z_twisted.m,
        res.m_direct.relabel(SpaceList{res.Z.space, res.Z.space}, SpaceList{res.Z.space}));
  return res;
}

}  // namespace crossbial
