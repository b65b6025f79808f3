#pragma once

#include <string>
#include <vector>

#include "crossbial/cross.hpp"
#include "crossbial/twisting.hpp"

namespace crossbial {

// Group algebra of C_N (basis g^0..g^{N-1}).
HopfAlgebraData group_algebra(int N, const std::string& name = {});
// Group algebra of C_{n_1} x ... x C_{n_k}; basis in mixed radix, first factor most significant.
HopfAlgebraData group_algebra(const std::vector<int>& orders, const std::string& name = {});
// Functions on C_N, basis the point masses e_0..e_{N-1}.
HopfAlgebraData dual_group_algebra(int N, const std::string& name = {});
// <g^a, e_b> = delta_{ab}
LinMap standard_pairing(const HopfAlgebraData& kg, const HopfAlgebraData& fun);

// k<x>/(x^r) with the p-binomial coproduct.
BiunitalPair taft_factor(int r, const Scalar& p, const std::string& name = {});

struct RadfordParams {
  int n = 2;
  int q_exponent = 1;
  int N = 2;
  int nu = 1;

  int r() const;
  std::string str() const;
};

struct OreParams {
  std::vector<int> group;                 // cyclic orders of C
  int t = 1;                              // number of x generators
  std::vector<std::vector<int>> g;        // g_j as exponent vectors
  std::vector<std::vector<int>> g_star;   // g*_j(c) = prod_i zeta_{n_i}^{a_i c_i}
};

struct ZooEntry {
  std::string name;
  BialgebraData H;
  ProjectionSystem system;
  HopfDatum datum;
};

void validate(const RadfordParams& p);
ZooEntry radford(const RadfordParams& p);

void validate(const OreParams& p);
ZooEntry ore_finite(const OreParams& p);

// H = kC_N, C = the Taft factor of radford(2,1,N,1) as a left crossed module,
// B = the exterior factor of ore_finite over C_N as a right crossed module.
DoubleBiproductInput sweedler_crossed_modules(int N = 2);

// A = B1⊗B2 with i1 = id⊗eta2, i2 = eta1⊗id, p1 = id⊗eps2, p2 = eps1⊗id.
ProjectionSystem system_from_datum(const HopfDatum& d);
ZooEntry entry_from_datum(const std::string& name, const HopfDatum& d);
ZooEntry entry_from_system(const std::string& name, const ProjectionSystem& sys);
// Transposed system on the dual bialgebra.
ZooEntry dual_entry(const ZooEntry& e, const std::string& name);
// (B1⊗B1')⊗(B2⊗B2') inside H⊗H'.
ZooEntry tensor_entry(const ZooEntry& a, const ZooEntry& b, const std::string& name);

std::vector<std::string> zoo_names();
ZooEntry zoo_entry(const std::string& name);

}  // namespace crossbial
