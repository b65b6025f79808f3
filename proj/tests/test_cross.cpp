#include <gtest/gtest.h>

#include <algorithm>

#include "crossbial/error.hpp"
#include "crossbial/zoo.hpp"
#include "support.hpp"

using namespace crossbial;
using testing_support::Terms;

namespace {

using Vec = std::vector<Scalar>;

Vec basis_vec(int n, int i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

Vec product(const BiunitalPair& H, const Vec& a, const Vec& b) {
  const int n = H.dim();
  Vec out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i].is_zero() || b[j].is_zero()) continue;
      for (const Entry& e : H.m.column(i * n + j)) out[e.row] += a[i] * b[j] * e.value;
    }
  return out;
}

// Sweedler-type presentation: a nontrivial grouplike basis vector g and a y with
// Δy = y⊗1 + g⊗y and yg = -gy, found by exact linear solve.
struct Presentation {
  Vec g, y;
};

Presentation present(const BiunitalPair& H) {
  const int n = H.dim();
  Presentation p;
  for (int i = 1; i < n && p.g.empty(); ++i) {
    const Column& d = H.delta.column(i);
    if (d.size() == 1 && d[0].row == static_cast<std::uint32_t>(i * n + i) && d[0].value == Scalar(1) &&
        H.eta.at(i, 0).is_zero())
      p.g = basis_vec(n, i);
  }
  if (p.g.empty()) return p;
  const int gi = static_cast<int>(std::find_if(p.g.begin(), p.g.end(), [](const Scalar& s) { return !s.is_zero(); }) -
                                  p.g.begin());
  // unknowns y_0..y_{n-1}; equations: Δy - y⊗1 - g⊗y = 0 (n^2 rows), yg + gy = 0 (n rows)
  std::vector<std::vector<Scalar>> a(n * n + n, std::vector<Scalar>(n));
  for (int k = 0; k < n; ++k) {
    for (const Entry& e : H.delta.column(k)) a[e.row][k] += e.value;
    for (const Entry& e : H.eta.column(0)) a[k * n + e.row][k] -= e.value;
    a[gi * n + k][k] -= Scalar(1);
    const Vec yg = product(H, basis_vec(n, k), p.g), gy = product(H, p.g, basis_vec(n, k));
    for (int r = 0; r < n; ++r) a[n * n + r][k] += yg[r] + gy[r];
  }
  // pin one coordinate to get a nonzero solution
  for (int pin = 0; pin < n; ++pin) {
    auto rows = a;
    std::vector<Scalar> rhs(n * n + n);
    rows.push_back(std::vector<Scalar>(n));
    rows.back()[pin] = Scalar(1);
    rhs.push_back(Scalar(1));
    if (auto sol = solve(rows, rhs)) {
      p.y = *sol;
      return p;
    }
  }
  return p;
}

// The isomorphism sending g^i y^j to g'^i y'^j.
LinMap presentation_iso(const BiunitalPair& src, const Presentation& ps, const BiunitalPair& dst,
                        const Presentation& pd) {
  const int n = src.dim();
  auto monomials = [&](const BiunitalPair& H, const Presentation& p) {
    std::vector<std::vector<Scalar>> cols;
    Vec gi = basis_vec(n, 0);
    for (int i = 0; i < n / 2; ++i) {
      cols.push_back(gi);
      cols.push_back(product(H, gi, p.y));
      gi = product(H, gi, p.g);
    }
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) rows[r][c] = cols[c][r];
    return LinMap::from_dense({H.space}, {H.space}, rows);
  };
  LinMap ms = monomials(src, ps), md = monomials(dst, pd);
  return compose(md, invert(ms).relabel({src.space}, {dst.space}));
}

}  // namespace

TEST(Radford, MorphismClassesOfTheProjectionSystem) {
  for (RadfordParams p : {RadfordParams{2, 1, 2, 1}, RadfordParams{3, 1, 3, 1}, RadfordParams{2, 1, 4, 1}}) {
    ZooEntry e = radford(p);
    const ProjectionSystem& s = e.system;
    const BiunitalPair &B1 = e.datum.B1, &B2 = e.datum.B2;
    MorphismClass i1 = classify_morphism(s.i1, B1, s.A), p1 = classify_morphism(s.p1, s.A, B1);
    MorphismClass i2 = classify_morphism(s.i2, B2, s.A), p2 = classify_morphism(s.p2, s.A, B2);
    EXPECT_TRUE(i1.is_algebra_morphism && !i1.is_coalgebra_morphism) << p.str();
    EXPECT_TRUE(p1.is_coalgebra_morphism && !p1.is_algebra_morphism) << p.str();
    EXPECT_TRUE(i2.is_algebra_morphism && i2.is_coalgebra_morphism) << p.str();
    EXPECT_TRUE(p2.is_algebra_morphism && p2.is_coalgebra_morphism) << p.str();
  }
}

TEST(Radford, OreAndRadfordSweedlerAlgebrasAreIsomorphic) {
  ZooEntry rad = radford({2, 1, 2, 1});
  ZooEntry ore = zoo_entry("ore-C2");
  Presentation pr = present(rad.H), po = present(ore.H);
  ASSERT_FALSE(pr.y.empty());
  ASSERT_FALSE(po.y.empty());
  LinMap phi = presentation_iso(ore.H, po, rad.H, pr);
  EXPECT_TRUE(morphism_report(phi, ore.H, rad.H).pass());
  EXPECT_EQ(rank(phi), 4u);
}

TEST(Decompose, IdempotentSystemGivesTheSameDatum) {
  ZooEntry e = radford({3, 1, 3, 1});
  const ProjectionSystem& s = e.system;
  IdempotentSystem is{s.A, compose(s.i1, s.p1), compose(s.i2, s.p2), "X", "G"};
  Decomposition dec = decompose(is);
  HopfDatum d = bat_to_hopf_datum(dec.bat);
  EXPECT_TRUE(check_hopf_datum(d).pass());
  EXPECT_EQ(trivalence_pattern(d).str(), "1010");
  EXPECT_EQ(d.B1.dim(), 3);
  EXPECT_EQ(d.B2.dim(), 3);
  EXPECT_TRUE(morphism_report(dec.iso, build_cross_product(dec.bat), s.A).pass());
}

TEST(Decompose, BatRoundTripReproducesThePhiMaps) {
  ZooEntry e = zoo_entry("double-cross-S3");
  Decomposition dec = decompose(e.system);
  InducedStructures s = induced_structures(bat_to_hopf_datum(dec.bat));
  EXPECT_EQ(s.phi12, dec.bat.phi12);
  EXPECT_EQ(s.phi21, dec.bat.phi21);
}

TEST(Decompose, RejectsNonSplittingAndInvalidSystems) {
  HopfAlgebraData A = group_algebra(2);
  try {
    decompose(ProjectionSystem{A, A.id(), A.id(), A.id(), A.id()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSplitting);
  }
  ZooEntry r = radford({2, 1, 2, 1});
  ProjectionSystem bad = r.system;
  bad.p1 = bad.p1 * Scalar(2);
  try {
    decompose(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSystem);
  }
}

TEST(CrossProduct, NonAdmissibleTupleIsRejected) {
  HopfAlgebraData G = group_algebra(2, "G"), K = group_algebra(3, "K");
  BAT t{G, K, flip(G.space, K.space), flip(K.space, G.space) * Scalar(2)};
  try {
    build_cross_product(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotABat);
  }
  BAT ok{G, K, flip(G.space, K.space), flip(K.space, G.space)};
  EXPECT_TRUE(check_axioms(build_cross_product(ok), StructureKind::Bialgebra).pass());
}

TEST(TrivalentEquivalences, VerdictsAgreeAcrossTheZoo) {
  for (const char* name : {"tensor-C2-C3", "radford-2-1-4-1", "ore-C4", "double-cross-S3", "bicross-S3",
                           "radford-x-ore"}) {
    ZooEntry e = zoo_entry(name);
    CheckReport r = verify_trivalent_equivalences(e.system);
    EXPECT_TRUE(r.find("verdicts agree")->pass) << name;
    const bool trivalent = trivalence_pattern(e.datum).nontrivial() < 4;
    EXPECT_EQ(r.find("trivalent Hopf datum")->pass, trivalent) << name;
  }
}
