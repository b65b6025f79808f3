#pragma once

#include <optional>

#include "crossbial/linmap.hpp"

namespace crossbial {

// Structure constants (m, eta, delta, eps, optional S) on one space.
struct BiunitalPair {
  SpaceLabel space;
  LinMap m;      // B⊗B -> B
  LinMap eta;    // k -> B
  LinMap delta;  // B -> B⊗B
  LinMap eps;    // B -> k
  std::optional<LinMap> S;

  int dim() const { return space.dim; }
  LinMap id() const { return LinMap::identity(space); }
};

using BialgebraData = BiunitalPair;
using HopfAlgebraData = BiunitalPair;

// Throws a shape error if any structure map has the wrong boundary and a
// domain error if eps o eta differs from 1.
void validate_pair(const BiunitalPair& b);

BiunitalPair make_pair(SpaceLabel space, LinMap m, LinMap eta, LinMap delta, LinMap eps,
                       std::optional<LinMap> S = std::nullopt);

// The one-dimensional bialgebra k under the given name.
BiunitalPair unit_pair(const std::string& name);

// Same structure constants on a renamed space.
BiunitalPair rename(const BiunitalPair& b, const SpaceLabel& space);

// Transposed structure maps: m <-> delta^T, eta <-> eps^T, S -> S^T.
BiunitalPair dual(const BiunitalPair& b, const std::string& name);

// Canonical tensor product with flip crossings, on a single fused space.
BiunitalPair tensor_pair(const BiunitalPair& a, const BiunitalPair& b, const std::string& name);

// Carrier + structure map for a one-sided (co)action.
struct ActionData {
  SpaceLabel carrier;
  BiunitalPair actor;
  LinMap map;
};
using CoactionData = ActionData;

}  // namespace crossbial
