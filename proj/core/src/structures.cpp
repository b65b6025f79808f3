#include "crossbial/structures.hpp"

#include <sstream>

#include "crossbial/error.hpp"

namespace crossbial {

namespace {

LinMap id(const SpaceList& s) { return LinMap::identity(s); }

SpaceList cat(const SpaceList& a, const SpaceList& b) {
  SpaceList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void expect_shape(const LinMap& f, const SpaceList& dom, const SpaceList& cod, const std::string& what) {
  if (!(f.dom() == dom) || !(f.cod() == cod))
    fail(ErrorKind::Shape, what + " has shape " + describe(f.dom()) + " -> " + describe(f.cod()) + ", expected " +
                               describe(dom) + " -> " + describe(cod));
}

}  // namespace

void validate_pair(const BiunitalPair& b) {
  const SpaceList x{b.space};
  const std::string n = b.space.name;
  expect_shape(b.m, cat(x, x), x, "multiplication of " + n);
  expect_shape(b.eta, {}, x, "unit of " + n);
  expect_shape(b.delta, x, cat(x, x), "comultiplication of " + n);
  expect_shape(b.eps, x, {}, "counit of " + n);
  if (b.S) expect_shape(*b.S, x, x, "antipode of " + n);
  if (!(compose(b.eps, b.eta) == LinMap::identity(SpaceList{})))
    fail(ErrorKind::Domain, "counit of " + n + " does not take the value 1 on the unit");
}

BiunitalPair make_pair(SpaceLabel space, LinMap m, LinMap eta, LinMap delta, LinMap eps, std::optional<LinMap> S) {
  BiunitalPair b{std::move(space), std::move(m), std::move(eta), std::move(delta), std::move(eps), std::move(S)};
  validate_pair(b);
  return b;
}

BiunitalPair unit_pair(const std::string& name) {
  SpaceLabel k{name, 1};
  SpaceList x{k};
  LinMap one = LinMap::identity(x);
  return make_pair(k, one.relabel(cat(x, x), x), one.relabel({}, x), one.relabel(x, cat(x, x)), one.relabel(x, {}),
                   one);
}

BiunitalPair rename(const BiunitalPair& b, const SpaceLabel& space) {
  if (space.dim != b.space.dim) fail(ErrorKind::Shape, "rename changes dimension of " + b.space.name);
  SpaceList x{space};
  BiunitalPair r{space,
                 b.m.relabel(cat(x, x), x),
                 b.eta.relabel({}, x),
                 b.delta.relabel(x, cat(x, x)),
                 b.eps.relabel(x, {}),
                 std::nullopt};
  if (b.S) r.S = b.S->relabel(x, x);
  return r;
}

BiunitalPair dual(const BiunitalPair& b, const std::string& name) {
  SpaceLabel s{name, b.space.dim};
  SpaceList x{s};
  BiunitalPair r{s,
                 b.delta.transpose().relabel(cat(x, x), x),
                 b.eps.transpose().relabel({}, x),
                 b.m.transpose().relabel(x, cat(x, x)),
                 b.eta.transpose().relabel(x, {}),
                 std::nullopt};
  if (b.S) r.S = b.S->transpose().relabel(x, x);
  return r;
}

BiunitalPair tensor_pair(const BiunitalPair& a, const BiunitalPair& b, const std::string& name) {
  SpaceList ab{a.space, b.space};
  LinMap m = compose(tensor({a.m, b.m}), tensor({a.id(), flip(b.space, a.space), b.id()}));
  LinMap delta = compose(tensor({a.id(), flip(a.space, b.space), b.id()}), tensor(a.delta, b.delta));
  SpaceLabel s{name, a.space.dim * b.space.dim};
  SpaceList x{s};
  BiunitalPair r{s,
                 m.relabel(cat(x, x), x),
                 tensor(a.eta, b.eta).relabel({}, x),
                 delta.relabel(x, cat(x, x)),
                 tensor(a.eps, b.eps).relabel(x, {}),
                 std::nullopt};
  if (a.S && b.S) r.S = tensor(*a.S, *b.S).relabel(x, x);
  return r;
}

// ---------------------------------------------------------------------------

bool CheckReport::add(const std::string& name, const LinMap& lhs, const LinMap& rhs) {
  AxiomResult r;
  r.name = name;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    fail(ErrorKind::Shape, "axiom '" + name + "' compares " + describe(lhs.dom()) + " -> " + describe(lhs.cod()) +
                               " with " + describe(rhs.dom()) + " -> " + describe(rhs.cod()));
  if (auto d = first_difference(lhs, rhs)) {
    r.pass = false;
    r.counterexample = Counterexample{unflatten(lhs.cod(), d->row), unflatten(lhs.dom(), d->col), d->lhs, d->rhs};
  }
  axioms_.push_back(std::move(r));
  return axioms_.back().pass;
}

void CheckReport::add_verdict(const std::string& name, bool pass, const std::string& detail) {
  axioms_.push_back(AxiomResult{name, pass, std::nullopt, detail});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& a : other.axioms_) {
    AxiomResult r = a;
    if (!prefix.empty()) r.name = prefix + ": " + r.name;
    axioms_.push_back(std::move(r));
  }
}

bool CheckReport::pass() const {
  for (const auto& a : axioms_)
    if (!a.pass) return false;
  return true;
}

const AxiomResult* CheckReport::find(std::string_view name) const {
  for (const auto& a : axioms_)
    if (a.name == name) return &a;
  return nullptr;
}

const AxiomResult* CheckReport::first_failure() const {
  for (const auto& a : axioms_)
    if (!a.pass) return &a;
  return nullptr;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& a : axioms_) {
    os << (a.pass ? "pass  " : "FAIL  ") << a.name;
    if (a.counterexample) {
      os << "  at out(";
      for (std::size_t i = 0; i < a.counterexample->output.size(); ++i) os << (i ? "," : "") << a.counterexample->output[i];
      os << ") in(";
      for (std::size_t i = 0; i < a.counterexample->input.size(); ++i) os << (i ? "," : "") << a.counterexample->input[i];
      os << "): " << a.counterexample->lhs.str() << " != " << a.counterexample->rhs.str();
    }
    if (!a.detail.empty()) os << "  (" << a.detail << ")";
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Algebra algebra_of(const BiunitalPair& b) { return Algebra{SpaceList{b.space}, b.m, b.eta}; }
Coalgebra coalgebra_of(const BiunitalPair& b) { return Coalgebra{SpaceList{b.space}, b.delta, b.eps}; }

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b, const BraidingProvider& bp) {
  LinMap route = tensor({id(a.spaces), bp.braiding(a.spaces, b.spaces), id(b.spaces)});
  return Coalgebra{cat(a.spaces, b.spaces), compose(route, tensor(a.delta, b.delta)), tensor(a.eps, b.eps)};
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b, const BraidingProvider& bp) {
  LinMap route = tensor({id(a.spaces), bp.braiding(b.spaces, a.spaces), id(b.spaces)});
  return Algebra{cat(a.spaces, b.spaces), compose(tensor(a.m, b.m), route), tensor(a.eta, b.eta)};
}

CheckReport check_algebra(const Algebra& a) {
  const LinMap i = id(a.spaces);
  CheckReport r;
  r.add("associativity", compose(a.m, tensor(a.m, i)), compose(a.m, tensor(i, a.m)));
  r.add("left unit", compose(a.m, tensor(a.eta, i)), i);
  r.add("right unit", compose(a.m, tensor(i, a.eta)), i);
  return r;
}

CheckReport check_coalgebra(const Coalgebra& c) {
  const LinMap i = id(c.spaces);
  CheckReport r;
  r.add("coassociativity", compose(tensor(c.delta, i), c.delta), compose(tensor(i, c.delta), c.delta));
  r.add("left counit", compose(tensor(c.eps, i), c.delta), i);
  r.add("right counit", compose(tensor(i, c.eps), c.delta), i);
  return r;
}

CheckReport check_axioms(const BiunitalPair& s, StructureKind kind, const BraidingProvider& bp) {
  validate_pair(s);
  const LinMap i = s.id();
  CheckReport r;
  if (kind == StructureKind::Algebra || kind == StructureKind::Bialgebra || kind == StructureKind::Hopf)
    r.merge(check_algebra(algebra_of(s)));
  if (kind == StructureKind::Coalgebra || kind == StructureKind::Bialgebra || kind == StructureKind::Hopf)
    r.merge(check_coalgebra(coalgebra_of(s)));
  if (kind == StructureKind::Bialgebra || kind == StructureKind::Hopf) {
    LinMap psi = bp.braiding(s.space, s.space);
    r.add("bialgebra compatibility", compose(s.delta, s.m),
          compose(tensor(s.m, s.m), compose(tensor({i, psi, i}), tensor(s.delta, s.delta))));
    r.add("coproduct of unit", compose(s.delta, s.eta), tensor(s.eta, s.eta));
    r.add("counit of product", compose(s.eps, s.m), tensor(s.eps, s.eps));
    r.add("counit of unit", compose(s.eps, s.eta), LinMap::identity(SpaceList{}));
  }
  if (kind == StructureKind::Hopf) {
    if (!s.S) fail(ErrorKind::Shape, "hopf check on " + s.space.name + " without an antipode");
    LinMap ee = compose(s.eta, s.eps);
    r.add("left antipode", compose(s.m, compose(tensor(*s.S, i), s.delta)), ee);
    r.add("right antipode", compose(s.m, compose(tensor(i, *s.S), s.delta)), ee);
  }
  return r;
}

CheckReport check_action(const ActionData& a, ActionKind kind) {
  const BiunitalPair& h = a.actor;
  validate_pair(h);
  const SpaceList m{a.carrier};
  const SpaceList hs{h.space};
  const LinMap im = id(m);
  const LinMap ih = h.id();
  const bool module = kind == ActionKind::ModuleLeft || kind == ActionKind::ModuleRight;
  CheckReport pre = module ? check_algebra(algebra_of(h)) : check_coalgebra(coalgebra_of(h));
  if (!pre.pass())
    fail(ErrorKind::Precondition, "actor " + h.space.name + " fails " + std::string(module ? "algebra" : "coalgebra") +
                                      " axiom '" + pre.first_failure()->name + "'");
  CheckReport r;
  switch (kind) {
    case ActionKind::ModuleLeft:
      expect_shape(a.map, cat(hs, m), m, "left action");
      r.add("action associativity", compose(a.map, tensor(h.m, im)), compose(a.map, tensor(ih, a.map)));
      r.add("action unit", compose(a.map, tensor(h.eta, im)), im);
      break;
    case ActionKind::ModuleRight:
      expect_shape(a.map, cat(m, hs), m, "right action");
      r.add("action associativity", compose(a.map, tensor(im, h.m)), compose(a.map, tensor(a.map, ih)));
      r.add("action unit", compose(a.map, tensor(im, h.eta)), im);
      break;
    case ActionKind::ComoduleLeft:
      expect_shape(a.map, m, cat(hs, m), "left coaction");
      r.add("coaction coassociativity", compose(tensor(h.delta, im), a.map), compose(tensor(ih, a.map), a.map));
      r.add("coaction counit", compose(tensor(h.eps, im), a.map), im);
      break;
    case ActionKind::ComoduleRight:
      expect_shape(a.map, m, cat(m, hs), "right coaction");
      r.add("coaction coassociativity", compose(tensor(im, h.delta), a.map), compose(tensor(a.map, ih), a.map));
      r.add("coaction counit", compose(tensor(im, h.eps), a.map), im);
      break;
  }
  return r;
}

CheckReport check_crossed_module(const SpaceLabel& carrier, const LinMap& action, const LinMap& coaction,
                                 const HopfAlgebraData& host, Side side) {
  const bool right = side == Side::Right;
  CheckReport mod = check_action(ActionData{carrier, host, action}, right ? ActionKind::ModuleRight : ActionKind::ModuleLeft);
  CheckReport comod =
      check_action(ActionData{carrier, host, coaction}, right ? ActionKind::ComoduleRight : ActionKind::ComoduleLeft);
  if (!mod.pass() || !comod.pass())
    fail(ErrorKind::Precondition, "crossed-module check on " + carrier.name + " requires module and comodule axioms");
  const SpaceLabel& h = host.space;
  const LinMap im = LinMap::identity(carrier);
  const LinMap ih = host.id();
  CheckReport r;
  r.merge(mod);
  r.merge(comod);
  if (right) {
    LinMap lhs = compose(tensor(action, host.m),
                         compose(tensor({im, flip(h, h), ih}), tensor(coaction, host.delta)));
    LinMap rhs = compose(
        tensor(im, host.m),
        compose(tensor(flip(h, carrier), ih),
                compose(tensor(ih, compose(coaction, action)), compose(tensor(flip(carrier, h), ih), tensor(im, host.delta)))));
    r.add("crossed module compatibility", lhs, rhs);
  } else {
    LinMap lhs = compose(tensor(host.m, action),
                         compose(tensor({ih, flip(h, h), im}), tensor(host.delta, coaction)));
    LinMap rhs = compose(
        tensor(host.m, im),
        compose(tensor(ih, flip(carrier, h)),
                compose(tensor(compose(coaction, action), ih), compose(tensor(ih, flip(h, carrier)), tensor(host.delta, im)))));
    r.add("crossed module compatibility", lhs, rhs);
  }
  return r;
}

CheckReport morphism_report(const LinMap& f, const BiunitalPair& src, const BiunitalPair& dst) {
  expect_shape(f, SpaceList{src.space}, SpaceList{dst.space}, "morphism");
  CheckReport r;
  r.add("multiplicative", compose(f, src.m), compose(dst.m, tensor(f, f)));
  r.add("unital", compose(f, src.eta), dst.eta);
  r.add("comultiplicative", compose(tensor(f, f), src.delta), compose(dst.delta, f));
  r.add("counital", compose(dst.eps, f), src.eps);
  return r;
}

MorphismClass classify_morphism(const LinMap& f, const BiunitalPair& src, const BiunitalPair& dst) {
  CheckReport r = morphism_report(f, src, dst);
  return MorphismClass{r.axioms()[0].pass && r.axioms()[1].pass, r.axioms()[2].pass && r.axioms()[3].pass};
}

// ---------------------------------------------------------------------------

LinMap convolve(const LinMap& f, const LinMap& g, const Coalgebra& c, const Algebra& a) {
  return compose(a.m, compose(tensor(f, g), c.delta));
}

LinMap convolution_unit(const Coalgebra& c, const Algebra& a) { return compose(a.eta, c.eps); }

LinMap convolution_inverse(const LinMap& f, const Coalgebra& c, const Algebra& a) {
  if (!(f.dom() == c.spaces) || !(f.cod() == a.spaces))
    fail(ErrorKind::Shape, "convolution inverse: map " + describe(f.dom()) + " -> " + describe(f.cod()) +
                               " does not go from " + describe(c.spaces) + " to " + describe(a.spaces));
  CheckReport cc = check_coalgebra(c);
  if (!cc.pass()) fail(ErrorKind::Precondition, "convolution inverse: source fails coalgebra axiom '" + cc.first_failure()->name + "'");
  CheckReport ac = check_algebra(a);
  if (!ac.pass()) fail(ErrorKind::Precondition, "convolution inverse: target fails algebra axiom '" + ac.first_failure()->name + "'");

  // Unknown g has dc*da entries, indexed (target row, source col) -> col*da + row.
  const std::uint64_t dc = total_dim(c.spaces);
  const std::uint64_t da = total_dim(a.spaces);
  const std::uint64_t n = dc * da;
  if (n > 4096) fail(ErrorKind::Unsupported, "convolution system of size " + std::to_string(n) + " is too large");
  // (f*g)(x) = sum over delta(x) = lambda x1⊗x2 of m(f(x1) ⊗ g(x2)); g(x2) = sum_r g[r,x2] e_r.
  const SpaceList aa = cat(a.spaces, a.spaces);
  std::vector<std::vector<Scalar>> sys(n, std::vector<Scalar>(n));
  const SpaceList cc2 = cat(c.spaces, c.spaces);
  for (std::uint64_t x = 0; x < dc; ++x) {
    for (const auto& d : c.delta.column(x)) {
      std::uint64_t x1 = d.row / dc, x2 = d.row % dc;
      for (const auto& fe : f.column(x1)) {
        for (std::uint64_t r = 0; r < da; ++r) {
          std::uint64_t in = fe.row * da + r;
          for (const auto& me : a.m.column(in)) {
            // equation row: (output me.row of (f*g)(x)); variable (r, x2)
            sys[x * da + me.row][x2 * da + r] += d.value * fe.value * me.value;
          }
        }
      }
    }
  }
  std::vector<Scalar> rhs(n);
  LinMap unit = convolution_unit(c, a);
  for (std::uint64_t x = 0; x < dc; ++x)
    for (const auto& e : unit.column(x)) rhs[x * da + e.row] = e.value;
  std::size_t rk = 0;
  auto sol = solve(sys, rhs, &rk);
  if (!sol || rk != n)
    fail(ErrorKind::NotConvolutionInvertible, "map " + describe(f.dom()) + " -> " + describe(f.cod()) +
                                                  " is not convolution invertible (system rank " + std::to_string(rk) +
                                                  " of " + std::to_string(n) + ")");
  LinMap g(c.spaces, a.spaces);
  for (std::uint64_t x = 0; x < dc; ++x) {
    Column col;
    for (std::uint64_t r = 0; r < da; ++r)
      if (!(*sol)[x * da + r].is_zero()) col.push_back({static_cast<std::uint32_t>(r), (*sol)[x * da + r]});
    g.set_column(x, std::move(col));
  }
  if (!(convolve(f, g, c, a) == unit) || !(convolve(g, f, c, a) == unit))
    fail(ErrorKind::NotConvolutionInvertible, "solution of the convolution system is not a two-sided inverse");
  return g;
}

}  // namespace crossbial
