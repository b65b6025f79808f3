#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "crossbial/linmap.hpp"

namespace testing_support {

using crossbial::LinMap;
using crossbial::Rational;
using crossbial::Scalar;
using crossbial::SpaceList;
using Terms = std::vector<std::pair<std::uint64_t, Scalar>>;

inline Rational random_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Rational(num(rng), den(rng));
}

// A random element of Q(zeta_n) with small rational coordinates.
inline Scalar random_scalar(std::mt19937& rng, int n = 1, int range = 5) {
  if (n == 1) return Scalar(random_rational(rng, range));
  std::vector<Rational> c(crossbial::euler_phi(n));
  for (auto& x : c) x = random_rational(rng, range);
  return Scalar::cyclotomic(n, c);
}

// Sparse random map with about `per_col` nonzeros in each column.
inline LinMap random_map(const SpaceList& dom, const SpaceList& cod, std::mt19937& rng, int per_col = 3,
                         int conductor = 1) {
  const std::uint64_t rows = crossbial::total_dim(cod);
  std::uniform_int_distribution<std::uint64_t> pick(0, rows - 1);
  return LinMap::from_columns(dom, cod, [&](std::uint64_t) {
    Terms t;
    for (int k = 0; k < per_col; ++k) t.emplace_back(pick(rng), random_scalar(rng, conductor, 3));
    return t;
  });
}

// Textbook dense product, used as an oracle for compose.
inline std::vector<std::vector<Scalar>> dense_product(const std::vector<std::vector<Scalar>>& a,
                                                      const std::vector<std::vector<Scalar>>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<Scalar>> c(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

// Gaussian binomial by the Pascal recursion [m,l] = [m-1,l-1] + Q^l [m-1,l].
inline Scalar gauss_binomial(int m, int l, const Scalar& Q) {
  if (l < 0 || l > m) return Scalar(0);
  std::vector<std::vector<Scalar>> t(m + 1, std::vector<Scalar>(m + 1));
  for (int i = 0; i <= m; ++i) {
    t[i][0] = Scalar(1);
    for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? Q.pow(j) * t[i - 1][j] : Scalar(0));
  }
  return t[m][l];
}

}  // namespace testing_support
