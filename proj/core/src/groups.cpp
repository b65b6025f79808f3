#include "crossbial/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "crossbial/error.hpp"

namespace crossbial {

namespace {

using Terms = std::vector<std::pair<std::uint64_t, Scalar>>;

std::vector<int> positions(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  return pos;
}

void expect_subgroup(const FiniteGroup& g, const std::vector<int>& el) {
  if (el.empty() || el[0] != 0 || !std::is_sorted(el.begin(), el.end()))
    fail(ErrorKind::Parameter, "subgroup elements must be sorted and contain the identity");
  if (generated_subgroup(g, el) != el) fail(ErrorKind::Parameter, "element list is not a subgroup");
}

}  // namespace

std::vector<int> permutation_of(int n, int index) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = 0; i < index; ++i) std::next_permutation(p.begin(), p.end());
  return p;
}

int index_of(const std::vector<int>& perm) {
  std::vector<int> p(perm.size());
  std::iota(p.begin(), p.end(), 0);
  int i = 0;
  while (p != perm) {
    if (!std::next_permutation(p.begin(), p.end())) fail(ErrorKind::Domain, "not a permutation");
    ++i;
  }
  return i;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) fail(ErrorKind::Parameter, "symmetric_group supports 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  FiniteGroup g;
  g.name = "S_" + std::to_string(n);
  const int order = static_cast<int>(perms.size());
  g.mul.assign(order, std::vector<int>(order));
  g.inv.assign(order, 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a][b] = index[c];
      if (g.mul[a][b] == 0) g.inv[a] = b;
    }
  return g;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int s : gens) {
        const int b = g.mul[a][s];
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Factorization factorize(FiniteGroup g, std::vector<int> M, std::vector<int> N, std::string M_name,
                        std::string N_name) {
  expect_subgroup(g, M);
  expect_subgroup(g, N);
  if (M.size() * N.size() != static_cast<std::size_t>(g.order()))
    fail(ErrorKind::Parameter, "|M|·|N| differs from |G|");
  std::set<int> products;
  for (int m : M)
    for (int n : N) products.insert(g.mul[m][n]);
  if (products.size() != static_cast<std::size_t>(g.order()))
    fail(ErrorKind::Parameter, "G is not the product M·N with trivial intersection");
  return Factorization{std::move(g), std::move(M), std::move(N), std::move(M_name), std::move(N_name)};
}

FactorActions factor_actions(const Factorization& f) {
  const FiniteGroup& g = f.G;
  std::vector<std::pair<int, int>> split(g.order());
  for (std::size_t m = 0; m < f.M.size(); ++m)
    for (std::size_t n = 0; n < f.N.size(); ++n)
      split[g.mul[f.M[m]][f.N[n]]] = {static_cast<int>(m), static_cast<int>(n)};
  FactorActions a;
  a.left.assign(f.N.size(), std::vector<int>(f.M.size()));
  a.right.assign(f.N.size(), std::vector<int>(f.M.size()));
  for (std::size_t n = 0; n < f.N.size(); ++n)
    for (std::size_t m = 0; m < f.M.size(); ++m) {
      auto [mm, nn] = split[g.mul[f.N[n]][f.M[m]]];
      a.left[n][m] = mm;
      a.right[n][m] = nn;
    }
  return a;
}

HopfAlgebraData group_algebra(const FiniteGroup& g, const std::vector<int>& el, const std::string& name) {
  expect_subgroup(g, el);
  const std::vector<int> pos = positions(g, el);
  const std::uint64_t D = el.size();
  SpaceLabel s{name, static_cast<int>(D)};
  const SpaceList x{s}, xx{s, s};
  return make_pair(
      s,
      LinMap::from_columns(xx, x, [&](std::uint64_t c) {
        return Terms{{static_cast<std::uint64_t>(pos[g.mul[el[c / D]][el[c % D]]]), Scalar(1)}};
      }),
      LinMap::from_columns({}, x, [](std::uint64_t) { return Terms{{0, Scalar(1)}}; }),
      LinMap::from_columns(x, xx, [&](std::uint64_t c) { return Terms{{c * D + c, Scalar(1)}}; }),
      LinMap::from_columns(x, {}, [](std::uint64_t) { return Terms{{0, Scalar(1)}}; }),
      LinMap::from_columns(x, x, [&](std::uint64_t c) {
        return Terms{{static_cast<std::uint64_t>(pos[g.inv[el[c]]]), Scalar(1)}};
      }));
}

HopfAlgebraData function_algebra(const FiniteGroup& g, const std::vector<int>& el, const std::string& name) {
  expect_subgroup(g, el);
  const std::vector<int> pos = positions(g, el);
  const std::uint64_t D = el.size();
  SpaceLabel s{name, static_cast<int>(D)};
  const SpaceList x{s}, xx{s, s};
  return make_pair(
      s,
      LinMap::from_columns(xx, x, [&](std::uint64_t c) {
        return c / D == c % D ? Terms{{c / D, Scalar(1)}} : Terms{};
      }),
      LinMap::from_columns({}, x, [&](std::uint64_t) {
        Terms t;
        for (std::uint64_t a = 0; a < D; ++a) t.emplace_back(a, Scalar(1));
        return t;
      }),
      LinMap::from_columns(x, xx, [&](std::uint64_t c) {
        Terms t;
        for (std::uint64_t u = 0; u < D; ++u) {
          const int v = g.mul[g.inv[el[u]]][el[c]];
          t.emplace_back(u * D + static_cast<std::uint64_t>(pos[v]), Scalar(1));
        }
        return t;
      }),
      LinMap::from_columns(x, {}, [](std::uint64_t c) { return c == 0 ? Terms{{0, Scalar(1)}} : Terms{}; }),
      LinMap::from_columns(x, x, [&](std::uint64_t c) {
        return Terms{{static_cast<std::uint64_t>(pos[g.inv[el[c]]]), Scalar(1)}};
      }));
}

ZooEntry double_cross(const Factorization& f, const std::string& name) {
  const FiniteGroup& g = f.G;
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  HopfAlgebraData A = group_algebra(g, all, "k" + g.name);
  HopfAlgebraData kM = group_algebra(g, f.M, "k" + f.M_name);
  HopfAlgebraData kN = group_algebra(g, f.N, "k" + f.N_name);
  std::vector<std::pair<int, int>> split(g.order());
  for (std::size_t m = 0; m < f.M.size(); ++m)
    for (std::size_t n = 0; n < f.N.size(); ++n)
      split[g.mul[f.M[m]][f.N[n]]] = {static_cast<int>(m), static_cast<int>(n)};
  const SpaceList a{A.space}, b1{kM.space}, b2{kN.space};
  ProjectionSystem sys{
      A,
      LinMap::from_columns(b1, a, [&](std::uint64_t m) { return Terms{{static_cast<std::uint64_t>(f.M[m]), Scalar(1)}}; }),
      LinMap::from_columns(b2, a, [&](std::uint64_t n) { return Terms{{static_cast<std::uint64_t>(f.N[n]), Scalar(1)}}; }),
      LinMap::from_columns(a, b1, [&](std::uint64_t x) {
        return Terms{{static_cast<std::uint64_t>(split[x].first), Scalar(1)}};
      }),
      LinMap::from_columns(a, b2, [&](std::uint64_t x) {
        return Terms{{static_cast<std::uint64_t>(split[x].second), Scalar(1)}};
      })};
  return entry_from_system(name, sys);
}

ZooEntry bicross(const Factorization& f, const std::string& name) {
  const FactorActions act = factor_actions(f);
  HopfAlgebraData B1 = group_algebra(f.G, f.N, "k" + f.N_name);
  HopfAlgebraData B2 = function_algebra(f.G, f.M, "k^" + f.M_name);
  const std::uint64_t nN = f.N.size(), nM = f.M.size();
  HopfDatum d = trivial_datum(B1, B2);
  // (δ_m ◁ n) = Σ_{m' : n▷m' = m} δ_{m'}
  d.mu_r = LinMap::from_columns(SpaceList{B2.space, B1.space}, SpaceList{B2.space}, [&](std::uint64_t c) {
    const std::uint64_t m = c / nN, n = c % nN;
    Terms t;
    for (std::uint64_t mp = 0; mp < nM; ++mp)
      if (static_cast<std::uint64_t>(act.left[n][mp]) == m) t.emplace_back(mp, Scalar(1));
    return t;
  });
  // n ↦ Σ_m δ_m ⊗ (n◁m)
  d.nu_l = LinMap::from_columns(SpaceList{B1.space}, SpaceList{B2.space, B1.space}, [&](std::uint64_t n) {
    Terms t;
    for (std::uint64_t m = 0; m < nM; ++m) t.emplace_back(m * nN + static_cast<std::uint64_t>(act.right[n][m]), Scalar(1));
    return t;
  });
  CheckReport r = check_hopf_datum(d);
  if (!r.pass())
    fail(ErrorKind::InternalConsistency, "bicross datum fails '" + r.first_failure()->name + "'");
  return entry_from_datum(name, d);
}

Factorization s3_factorization(bool normal_first) {
  FiniteGroup g = symmetric_group(3);
  std::vector<int> c3 = generated_subgroup(g, {index_of({1, 2, 0})});
  std::vector<int> c2 = generated_subgroup(g, {index_of({1, 0, 2})});
  if (normal_first) return factorize(std::move(g), c3, c2, "C_3", "C_2");
  return factorize(std::move(g), c2, c3, "C_2", "C_3");
}

Factorization s4_factorization() {
  FiniteGroup g = symmetric_group(4);
  std::vector<int> M = generated_subgroup(g, {index_of({1, 0, 2, 3}), index_of({1, 2, 0, 3})});
  std::vector<int> N = generated_subgroup(g, {index_of({1, 2, 3, 0})});
  return factorize(std::move(g), M, N, "S_3", "C_4");
}

}  // namespace crossbial
