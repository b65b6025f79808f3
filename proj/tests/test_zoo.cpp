#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "crossbial/error.hpp"
#include "crossbial/groups.hpp"
#include "support.hpp"

using namespace crossbial;
using testing_support::gauss_binomial;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Domain;
}

using Perm = std::vector<int>;

// All permutations of {0..n-1} in lexicographic order, composed as (ab)(i) = a(b(i)).
std::vector<Perm> perms(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace

TEST(Zoo, EveryEntryIsAValidHopfDatumWithItsPattern) {
  const std::map<std::string, std::string> expected{
      {"unit", "0000"},          {"tensor-C2-C3", "0000"},    {"radford-2-1-2-1", "1010"},
      {"radford-3-1-3-1", "1010"}, {"radford-2-1-4-1", "1010"}, {"ore-C2", "0101"},
      {"ore-C4", "0101"},        {"matched-pair-C3", "0000"}, {"double-cross-S3", "0010"},
      {"double-cross-S4", "0011"}, {"bicross-S3", "0001"},    {"bicross-S3-swap", "1000"},
      {"bicross-S4", "1001"},    {"S3-x-ore", "0111"},        {"bicross-x-ore", "1101"},
      {"radford-x-ore", "1111"}};
  ASSERT_EQ(zoo_names().size(), expected.size());
  for (const std::string& name : zoo_names()) {
    ZooEntry e = zoo_entry(name);
    EXPECT_TRUE(check_axioms(e.H, StructureKind::Bialgebra).pass()) << name;
    EXPECT_TRUE(check_hopf_datum(e.datum).pass()) << name;
    EXPECT_EQ(trivalence_pattern(e.datum).str(), expected.at(name)) << name;
    EXPECT_EQ(e.H.dim(), e.datum.B1.dim() * e.datum.B2.dim()) << name;
  }
  EXPECT_EQ(kind_of([] { zoo_entry("nope"); }), ErrorKind::Parameter);
}

TEST(Radford, CoproductOfPowersOfXIsGaussian) {
  for (RadfordParams p : {RadfordParams{2, 1, 2, 1}, RadfordParams{3, 1, 3, 1}, RadfordParams{4, 1, 8, 1},
                          RadfordParams{6, 5, 6, 2}}) {
    ZooEntry e = radford(p);
    const int r = p.r(), N = p.N, D = r * N;
    ASSERT_EQ(e.H.dim(), D);
    // g x = q^{-1} x g and Δx = x⊗1 + g^{-nu}⊗x, so with Q = q^nu
    // Δ(x^m) = Σ_l [m,l]_Q x^l g^{-nu(m-l)} ⊗ x^{m-l}
    const Scalar Q = root_of_unity(p.n, p.q_exponent).pow(p.nu);
    for (int m = 0; m < r; ++m) {
      LinMap expected(e.H.delta.dom(), e.H.delta.cod());
      for (int l = 0; l <= m; ++l) {
        const int g = ((-p.nu * (m - l)) % N + N) % N;
        expected.add(static_cast<std::uint64_t>(l * N + g) * D + (m - l) * N, m * N, gauss_binomial(m, l, Q));
      }
      for (std::uint64_t row = 0; row < static_cast<std::uint64_t>(D) * D; ++row)
        ASSERT_EQ(e.H.delta.at(row, m * N), expected.at(row, m * N)) << p.str() << " m=" << m;
    }
    EXPECT_TRUE(check_axioms(e.H, StructureKind::Hopf).pass()) << p.str();
  }
}

TEST(Radford, ParameterValidation) {
  EXPECT_EQ(kind_of([] { validate(RadfordParams{2, 1, 3, 1}); }), ErrorKind::Parameter);
  EXPECT_EQ(kind_of([] { validate(RadfordParams{4, 2, 4, 1}); }), ErrorKind::Parameter);
  EXPECT_EQ(kind_of([] { validate(RadfordParams{2, 1, 2, 0}); }), ErrorKind::Parameter);
  EXPECT_EQ(RadfordParams({6, 1, 6, 4}).r(), 3);
}

TEST(Ore, DimensionIsTwoToTheTTimesTheGroupOrder) {
  ZooEntry e = ore_finite(OreParams{{2, 2}, 2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}});
  EXPECT_EQ(e.H.dim(), 16);
  EXPECT_TRUE(check_axioms(e.H, StructureKind::Hopf).pass());
  EXPECT_EQ(trivalence_pattern(e.datum).str(), "0101");
}

TEST(Ore, FinitenessAndParameterErrors) {
  // g_11 = 1: x generates an infinite polynomial algebra
  EXPECT_EQ(kind_of([] { ore_finite(OreParams{{2}, 1, {{1}}, {{0}}}); }), ErrorKind::Unsupported);
  EXPECT_EQ(kind_of([] { ore_finite(OreParams{{4}, 1, {{2}}, {{2}}}); }), ErrorKind::Unsupported);
  EXPECT_EQ(kind_of([] { ore_finite(OreParams{{2}, 2, {{1}}, {{1}}}); }), ErrorKind::Parameter);
  EXPECT_EQ(kind_of([] { ore_finite(OreParams{{2, 2}, 2, {{1, 0}, {1, 1}}, {{1, 0}, {0, 1}}}); }),
            ErrorKind::Parameter);
}

TEST(Groups, SymmetricGroupMatchesPermutationComposition) {
  const std::vector<Perm> all = perms(4);
  FiniteGroup g = symmetric_group(4);
  ASSERT_EQ(g.order(), 24);
  for (int a = 0; a < 24; ++a) {
    EXPECT_EQ(permutation_of(4, a), all[a]);
    for (int b = 0; b < 24; ++b)
      EXPECT_EQ(all[g.mul[a][b]], compose_perm(all[a], all[b]));
    EXPECT_EQ(g.mul[a][g.inv[a]], 0);
  }
}

TEST(Bicross, S3ActionsMatchBruteForceFactorization) {
  const std::vector<Perm> all = perms(3);
  for (bool normal_first : {true, false}) {
    Factorization f = s3_factorization(normal_first);
    ZooEntry e = bicross(f, "b");
    const int nm = static_cast<int>(f.M.size()), nn = static_cast<int>(f.N.size());
    ASSERT_EQ(nm * nn, 6);
    // n·m = m'·n' with unique m' in M, n' in N
    std::vector<std::vector<int>> left(nn, std::vector<int>(nm)), right(nn, std::vector<int>(nm));
    for (int n = 0; n < nn; ++n)
      for (int m = 0; m < nm; ++m) {
        const Perm prod = compose_perm(all[f.N[n]], all[f.M[m]]);
        int hits = 0;
        for (int a = 0; a < nm; ++a)
          for (int b = 0; b < nn; ++b)
            if (compose_perm(all[f.M[a]], all[f.N[b]]) == prod) {
              left[n][m] = a;
              right[n][m] = b;
              ++hits;
            }
        ASSERT_EQ(hits, 1);
      }
    // mu_r(δ_m ⊗ n) = Σ_{n▷m' = m} δ_{m'}, nu_l(n) = Σ_m δ_m ⊗ (n◁m)
    LinMap mu_r(e.datum.mu_r.dom(), e.datum.mu_r.cod()), nu_l(e.datum.nu_l.dom(), e.datum.nu_l.cod());
    for (int n = 0; n < nn; ++n)
      for (int m = 0; m < nm; ++m) {
        mu_r.add(m, static_cast<std::uint64_t>(left[n][m]) * nn + n, Scalar(1));
        nu_l.add(static_cast<std::uint64_t>(m) * nn + right[n][m], n, Scalar(1));
      }
    EXPECT_EQ(e.datum.mu_r, mu_r) << normal_first;
    EXPECT_EQ(e.datum.nu_l, nu_l) << normal_first;
    EXPECT_TRUE(check_axioms(e.H, StructureKind::Bialgebra).pass());
  }
}

TEST(Sweedler, CrossedModulesAreTwoDimensionalExteriorFactors) {
  DoubleBiproductInput in = sweedler_crossed_modules(4);
  EXPECT_EQ(in.B.dim(), 2);
  EXPECT_EQ(in.C.dim(), 2);
  EXPECT_EQ(in.H.dim(), 4);
  // x·x = 0 in both factors
  EXPECT_TRUE(in.B.m.column(3).empty());
  EXPECT_TRUE(in.C.m.column(3).empty());
  EXPECT_EQ(kind_of([] { sweedler_crossed_modules(3); }), ErrorKind::Parameter);
}

TEST(Constructions, DualAndTensorEntries) {
  ZooEntry a = zoo_entry("double-cross-S3");
  ZooEntry d = dual_entry(a, "dual");
  EXPECT_TRUE(check_hopf_datum(d.datum).pass());
  EXPECT_EQ(trivalence_pattern(d.datum), dual(trivalence_pattern(a.datum)));
  ZooEntry t = tensor_entry(zoo_entry("radford-2-1-2-1"), zoo_entry("bicross-S3"), "t");
  EXPECT_EQ(trivalence_pattern(t.datum).str(), "1011");
  EXPECT_TRUE(check_axioms(t.H, StructureKind::Bialgebra).pass());
}
