#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "crossbial/groups.hpp"
#include "support.hpp"

using namespace crossbial;
using testing_support::random_map;
using testing_support::Terms;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) notes << "; ";
      notes << "failed: " << what;
      pass = false;
    }
  }
};

SpaceList four(const HopfDatum& d) { return {d.B1.space, d.B2.space, d.B1.space, d.B2.space}; }

bool hopf_or_bialgebra(const BialgebraData& b) {
  return check_axioms(b, b.S ? StructureKind::Hopf : StructureKind::Bialgebra).pass();
}

bool contains(const Classification& c, Family f) {
  return std::find(c.containing.begin(), c.containing.end(), f) != c.containing.end();
}

LinMap rho_alpha(const DoubleBiproductInput& in, int alpha) {
  return LinMap::from_columns(SpaceList{in.B.space, in.C.space}, {}, [&](std::uint64_t c) {
    Terms t;
    if (c == 0) t.emplace_back(0, Scalar(1));
    if (c == 3 && alpha != 0) t.emplace_back(0, Scalar(alpha));
    return t;
  });
}

// ---------------------------------------------------------------------------

void radford_suite(Outcome& o) {
  for (RadfordParams p : {RadfordParams{2, 1, 2, 1}, RadfordParams{3, 1, 3, 1}, RadfordParams{2, 1, 4, 1}}) {
    const std::string tag = "radford" + p.str();
    ZooEntry e = radford(p);
    o.expect(check_axioms(e.H, StructureKind::Hopf).pass(), tag + " Hopf axioms");
    Decomposition dec = decompose(e.system);
    o.expect(check_hopf_datum(bat_to_hopf_datum(dec.bat)).pass(), tag + " decomposed datum");
    CheckReport v = verify_trivalent_equivalences(e.system);
    for (const AxiomResult& a : v.axioms()) o.expect(a.pass, tag + " " + a.name);
    const ProjectionSystem& s = e.system;
    const BiunitalPair &B1 = dec.bat.B1, &B2 = dec.bat.B2;
    MorphismClass i1 = classify_morphism(s.i1, B1, s.A), p1 = classify_morphism(s.p1, s.A, B1);
    MorphismClass i2 = classify_morphism(s.i2, B2, s.A), p2 = classify_morphism(s.p2, s.A, B2);
    o.expect(p1.is_coalgebra_morphism && !p1.is_algebra_morphism, tag + " p1 coalgebra-not-algebra");
    o.expect(i1.is_algebra_morphism && !i1.is_coalgebra_morphism, tag + " i1 algebra-not-coalgebra");
    o.expect(i2.is_algebra_morphism && i2.is_coalgebra_morphism, tag + " i2 bialgebra map");
    o.expect(p2.is_algebra_morphism && p2.is_coalgebra_morphism, tag + " p2 bialgebra map");
  }
  if (o.pass) o.notes << "3 parameter sets";
}

void fixed_point_suite(Outcome& o) {
  std::mt19937 rng(2024);
  int randoms = 0;
  for (const std::string& name : zoo_names()) {
    ZooEntry e = zoo_entry(name);
    const HopfDatum& d = e.datum;
    InducedStructures s = induced_structures(d);
    LinMap f1 = fixed_point_f1(d, s), f2 = fixed_point_f2(d, s);
    o.expect(phi_apply(d, f1) == f1, name + " Phi(f1) = f1");
    o.expect(phi_apply(d, f2) == f2, name + " Phi(f2) = f2");
    const SpaceList w = four(d);
    const LinMap pi = projector_pi(d);
    const int count = e.H.dim() <= 9 ? 20 : 2;
    for (int t = 0; t < count; ++t) {
      LinMap f = random_map(w, w, rng, 3, t % 2 ? 3 : 1);
      o.expect(compose(pi, compose(phi_apply(d, f), pi)) == compose(pi, compose(f, pi)),
               name + " pi Phi(f) pi = pi f pi");
      ++randoms;
    }
  }
  if (o.pass) o.notes << zoo_names().size() << " data, " << randoms << " random endomorphisms";
}

void order_suite(Outcome& o) {
  OrderResult u = recursion_order(zoo_entry("unit").datum);
  o.expect(u.order && *u.order == 0, "unit datum has order 0");
  std::ostringstream orders;
  for (const std::string& name : zoo_names()) {
    if (name == "unit") continue;
    HopfDatum d = zoo_entry(name).datum;
    if (trivalence_pattern(d).nontrivial() == 4) continue;
    OrderResult r = recursion_order(d);
    o.expect(r.order && (*r.order == 1 || *r.order == 2), name + " order in {1,2}");
    o.expect(r.stable_at_order, name + " Phi^{n+1} = Phi^n");
    if (r.order) orders << " " << name << "=" << *r.order;
  }
  if (o.pass) o.notes << "orders:" << orders.str();
}

// Brute-force factorization oracle for the bicross product on S_3.
bool s3_bicross_matches_enumeration(const Factorization& f, const HopfDatum& d) {
  std::vector<std::vector<int>> all;
  std::vector<int> p{0, 1, 2};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto comp = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  const std::uint64_t nm = f.M.size(), nn = f.N.size();
  LinMap mu_r(d.mu_r.dom(), d.mu_r.cod()), nu_l(d.nu_l.dom(), d.nu_l.cod());
  for (std::uint64_t n = 0; n < nn; ++n)
    for (std::uint64_t m = 0; m < nm; ++m) {
      const auto prod = comp(all[f.N[n]], all[f.M[m]]);
      for (std::uint64_t a = 0; a < nm; ++a)
        for (std::uint64_t b = 0; b < nn; ++b)
          if (comp(all[f.M[a]], all[f.N[b]]) == prod) {
            mu_r.add(m, a * nn + n, Scalar(1));
            nu_l.add(m * nn + b, n, Scalar(1));
          }
    }
  return mu_r == d.mu_r && nu_l == d.nu_l;
}

void cases_suite(Outcome& o) {
  auto box = [&](const std::string& label, const ZooEntry& e, Family f) {
    o.expect(hopf_or_bialgebra(e.H), label + " bialgebra axioms");
    o.expect(check_hopf_datum(e.datum).pass(), label + " datum");
    Classification c = classify(e.datum);
    o.expect(contains(c, f), label + " pattern " + c.pattern.str() + " lies in the box");
    o.notes << (o.notes.tellp() > 0 ? ", " : "") << label << "=" << c.pattern.str();
  };
  box("0000:kC2⊗kC3", entry_from_datum("t", trivial_datum(group_algebra(2), group_algebra(3))), Family::TensorProduct);
  box("1010:radford", radford({2, 1, 2, 1}), Family::Biproduct);
  box("0011:kC3 matched pair", zoo_entry("matched-pair-C3"), Family::DoubleCross);
  box("0011:S3·C4", zoo_entry("double-cross-S4"), Family::DoubleCross);
  for (bool normal_first : {true, false}) {
    Factorization f = s3_factorization(normal_first);
    ZooEntry e = bicross(f, "bicross");
    o.expect(s3_bicross_matches_enumeration(f, e.datum), "S3 bicross actions match enumeration");
    box(normal_first ? "1001:C3·C2" : "1001:C2·C3", e, Family::Bicross);
  }
  box("1001:S3·C4", zoo_entry("bicross-S4"), Family::Bicross);
  box("1101:bicross⊗ore", zoo_entry("bicross-x-ore"), Family::General);
}

void twisting_suite(Outcome& o) {
  HopfAlgebraData R = radford({3, 1, 3, 1}).H;
  TwoCocycle triv{R, tensor(R.eps, R.eps), std::nullopt};
  BiunitalPair tr = twist(R, triv);
  o.expect(validate_cocycle(triv).pass() && tr.m == R.m && *tr.S == *R.S, "trivial cocycle is the identity");
  for (int N : {2, 3, 4}) {
    HopfAlgebraData H = group_algebra(std::vector<int>{N, N});
    const Scalar z = root_of_unity(N, 1);
    const std::uint64_t D = H.dim(), n = N;
    LinMap chi = LinMap::from_columns(SpaceList{H.space, H.space}, {}, [&](std::uint64_t c) {
      return Terms{{0, z.pow(static_cast<long long>((c / D) % n * ((c % D) / n)))}};
    });
    TwoCocycle c{H, chi, std::nullopt};
    const std::string tag = "k(C" + std::to_string(N) + "×C" + std::to_string(N) + ")";
    o.expect(validate_cocycle(c).pass(), tag + " bicharacter validates");
    BiunitalPair t = twist(H, c);
    o.expect(check_axioms(t, StructureKind::Hopf).pass(), tag + " twist is Hopf");
    TwoCocycle back{t, cocycle_inverse(c), std::nullopt};
    o.expect(twist(t, back).m == H.m, tag + " double twist restores m");
  }
  DoubleBiproductInput in = sweedler_crossed_modules(4);
  in.rho = rho_alpha(in, 1);
  DoubleBiproductResult r = double_biproduct(in);
  TwoCocycle back{r.Z_twisted, cocycle_inverse(r.rho_hat), std::nullopt};
  o.expect(!(r.Z_twisted.m == r.Z.m), "double biproduct twist changes m");
  o.expect(twist(r.Z_twisted, back).m == r.Z.m, "double biproduct double twist restores m");
  if (o.pass) o.notes << "bicharacters on k(C_N×C_N) for N = 2, 3, 4 and the double biproduct cocycle";
}

void matched_pair_suite(Outcome& o) {
  for (int N : {2, 3, 4}) {
    HopfAlgebraData H = group_algebra(N), A = dual_group_algebra(N);
    MatchedPairResult r = matched_pair_from_pairing(DualPairing{H, A, standard_pairing(H, A)},
                                                    BraidingProvider::vect_flip());
    o.expect(r.is_matched_pair && r.braiding_involutive, "VectFlip C" + std::to_string(N) + " both true");
  }
  HopfAlgebraData K = group_algebra(3);
  const Scalar p = root_of_unity(3, 1);
  BraidingProvider bp = BraidingProvider::yetter_drinfeld(K, Side::Right);
  auto reg = [&](const std::string& name) {
    BiunitalPair T = taft_factor(3, p, name);
    SpaceList tk{T.space, K.space};
    bp.register_space(T.space,
                      LinMap::from_columns(tk, {T.space}, [&](std::uint64_t c) {
                        return Terms{{c / 3, p.pow(static_cast<long long>((c / 3) * (c % 3)))}};
                      }),
                      LinMap::from_columns({T.space}, tk, [](std::uint64_t m) { return Terms{{m * 3 + m, 1}}; }));
    return T;
  };
  BiunitalPair A = reg("A"), H = reg("H");
  DualPairing dp{H, A, tensor(H.eps, A.eps)};
  o.expect(validate_pairing(dp, bp).pass(), "YD pairing validates");
  MatchedPairResult r = matched_pair_from_pairing(dp, bp);
  o.expect(!r.is_matched_pair && !r.braiding_involutive, "YD over kC3 both false");
  if (o.pass) o.notes << "VectFlip C2,C3,C4 true/true; YD kC3 false/false";
}

void double_biproduct_suite(Outcome& o) {
  for (int alpha : {0, 1, -1}) {
    const std::string tag = "alpha=" + std::to_string(alpha);
    DoubleBiproductInput in = sweedler_crossed_modules(4);
    in.rho = rho_alpha(in, alpha);
    o.expect(check_psi2(in).pass(), tag + " double braiding");
    o.expect(check_rho(in).pass(), tag + " rho conditions");
    DoubleBiproductResult r = double_biproduct(in);
    o.expect(r.Z.dim() == 16, tag + " dim Z = 16");
    o.expect(check_axioms(r.Z, StructureKind::Bialgebra).pass(), tag + " Z bialgebra");
    o.expect(validate_cocycle(r.rho_hat).pass(), tag + " rho-hat cocycle");
    o.expect(r.Z_twisted.m == r.m_direct.relabel(r.Z_twisted.m.dom(), r.Z_twisted.m.cod()),
             tag + " twisted product equals direct formula");
    o.expect(r.report.pass(), tag + " full report");
  }
  if (o.pass) o.notes << "N=4, dim 16, alpha in {0,1,-1}";
}

void convolution_suite(Outcome& o) {
  for (int N : {2, 3, 4, 6}) {
    HopfAlgebraData H = group_algebra(N), A = dual_group_algebra(N);
    DualPairing p{H, A, standard_pairing(H, A)};
    LinMap inv = pairing_inverse(p);
    o.expect(inv == compose(p.form, tensor(*H.S, A.id())), "C" + std::to_string(N) + " inverse is form(S⊗id)");
    // independent solve of psi * form = eps⊗eps over the coalgebra H⊗A
    const Coalgebra ha = tensor_coalgebra(coalgebra_of(H), coalgebra_of(A), BraidingProvider::vect_flip());
    const std::uint64_t n = static_cast<std::uint64_t>(N) * N;
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    for (std::uint64_t k = 0; k < n; ++k) {
      LinMap ek = LinMap::from_columns(ha.spaces, {}, [&](std::uint64_t c) { return c == k ? Terms{{0, 1}} : Terms{}; });
      LinMap col = convolve(ek, p.form, ha, ground_algebra());
      for (std::uint64_t r = 0; r < n; ++r) a[r][k] = col.at(0, r);
    }
    const LinMap unit = convolution_unit(ha, ground_algebra());
    std::vector<Scalar> b(n);
    for (std::uint64_t r = 0; r < n; ++r) b[r] = unit.at(0, r);
    auto sol = solve(a, b);
    o.expect(sol.has_value(), "C" + std::to_string(N) + " linear solve");
    if (sol) {
      LinMap solved = LinMap::from_columns(ha.spaces, {}, [&](std::uint64_t c) { return Terms{{0, (*sol)[c]}}; });
      o.expect(solved == inv, "C" + std::to_string(N) + " matches linear solve");
    }
  }
  if (o.pass) o.notes << "C2, C3, C4, C6";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> suites{
      {"Radford suite", radford_suite},
      {"fixed points", fixed_point_suite},
      {"recursion order", order_suite},
      {"trivalent boxes", cases_suite},
      {"twisting", twisting_suite},
      {"matched pair biconditional", matched_pair_suite},
      {"double biproduct", double_biproduct_suite},
      {"convolution inverses", convolution_suite},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, fn] : suites) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << "error: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << ++k << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << "  [" << o.notes.str()
              << "; " << std::fixed << std::setprecision(1) << s << " s]" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
