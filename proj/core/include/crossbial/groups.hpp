#pragma once

#include <string>
#include <vector>

#include "crossbial/zoo.hpp"

namespace crossbial {

// A finite group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  int order() const { return static_cast<int>(mul.size()); }
};

// Permutations of {0..n-1} in lexicographic order, (ab)(i) = a(b(i)).
FiniteGroup symmetric_group(int n);
std::vector<int> permutation_of(int n, int index);
int index_of(const std::vector<int>& perm);

// Closure of the generators, sorted.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

// G = M·N with M ∩ N = 1.
struct Factorization {
  FiniteGroup G;
  std::vector<int> M;
  std::vector<int> N;
  std::string M_name;
  std::string N_name;
};

Factorization factorize(FiniteGroup g, std::vector<int> M, std::vector<int> N, std::string M_name,
                        std::string N_name);
// n·m = (n▷m)(n◁m) for n in N, m in M; returned as positions in M and N.
struct FactorActions {
  std::vector<std::vector<int>> left;   // left[n][m]  = n▷m in M
  std::vector<std::vector<int>> right;  // right[n][m] = n◁m in N
};
FactorActions factor_actions(const Factorization& f);

HopfAlgebraData group_algebra(const FiniteGroup& g, const std::vector<int>& elements, const std::string& name);
HopfAlgebraData function_algebra(const FiniteGroup& g, const std::vector<int>& elements, const std::string& name);

// kG with B1 = kM, B2 = kN.
ZooEntry double_cross(const Factorization& f, const std::string& name);
// Datum with B1 = kN, B2 = k^M, mu_r and nu_l from the factorization.
ZooEntry bicross(const Factorization& f, const std::string& name);

// C_3 · C_2, or C_2 · C_3 with the normal factor on the right.
Factorization s3_factorization(bool normal_first = true);
Factorization s4_factorization();  // S_3 · C_4

}  // namespace crossbial
