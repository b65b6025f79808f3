#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "crossbial/bundle.hpp"

namespace crossbial {

enum class BraidingKind { VectFlip, YetterDrinfeld };
enum class Side { Left, Right };

// Module and comodule structure of an object (possibly a tensor product) of
// a Yetter-Drinfeld category. Right side: action X⊗H -> X, coaction
// X -> X⊗H. Left side: action H⊗X -> X, coaction X -> H⊗X.
struct YDStructure {
  SpaceList spaces;
  LinMap action;
  LinMap coaction;
};

// Diagonal structure on X⊗Y.
YDStructure tensor_structure(const YDStructure& x, const YDStructure& y, const BiunitalPair& host, Side side);

// Braiding X⊗Y -> Y⊗X of two crossed modules.
LinMap yd_braiding(const YDStructure& x, const YDStructure& y, const BiunitalPair& host, Side side);

class BraidingProvider {
 public:
  static BraidingProvider vect_flip();
  static BraidingProvider yetter_drinfeld(BiunitalPair host, Side side = Side::Right);

  BraidingKind kind() const { return kind_; }
  Side side() const { return side_; }
  const BiunitalPair& host() const;

  // Registers a crossed module; throws a configuration error if the
  // crossed-module condition fails. Ignored by VectFlip providers.
  void register_space(const SpaceLabel& x, LinMap action, LinMap coaction);
  bool is_registered(const SpaceLabel& x) const;
  const YDStructure& structure(const SpaceLabel& x) const;
  YDStructure structure(const SpaceList& xs) const;

  LinMap braiding(const SpaceLabel& x, const SpaceLabel& y) const;
  LinMap inverse_braiding(const SpaceLabel& x, const SpaceLabel& y) const;
  LinMap braiding(const SpaceList& x, const SpaceList& y) const;
  LinMap inverse_braiding(const SpaceList& x, const SpaceList& y) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, LinMap> maps;
  };

  BraidingKind kind_ = BraidingKind::VectFlip;
  Side side_ = Side::Right;
  std::shared_ptr<const BiunitalPair> host_;
  std::map<std::string, YDStructure> spaces_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Permutation X1..Xa ⊗ Y1..Yb -> Y1..Yb ⊗ X1..Xa.
LinMap block_swap(const SpaceList& x, const SpaceList& y);

}  // namespace crossbial
