#pragma once

#include <memory>
#include <vector>

#include "crossbial/braiding.hpp"

namespace crossbial {

// One box in a diagram row.
struct Box {
  enum class Kind { Id, Map, Braid, InverseBraid, Flip };

  Kind kind = Kind::Id;
  int count = 1;
  std::shared_ptr<const LinMap> map;

  static Box id(int n = 1) { return Box{Kind::Id, n, nullptr}; }
  static Box of(const LinMap& m) { return Box{Kind::Map, 0, std::make_shared<const LinMap>(m)}; }
  static Box braid() { return Box{Kind::Braid, 2, nullptr}; }
  static Box braid_inv() { return Box{Kind::InverseBraid, 2, nullptr}; }
  static Box flip() { return Box{Kind::Flip, 2, nullptr}; }
};

// A string diagram read top to bottom. Each row lists boxes from left to
// right; the boxes of a row consume the current wires in order. Crossings
// are resolved against the provider using the labels of the crossing wires.
class Diagram {
 public:
  explicit Diagram(SpaceList inputs, const BraidingProvider* bp = nullptr);

  Diagram& row(std::vector<Box> boxes);

  const SpaceList& inputs() const { return inputs_; }
  const SpaceList& wires() const { return wires_; }

  LinMap evaluate() const;
  Column evaluate(const Column& input) const;

  // Sparse evaluation with 64-bit basis indices, for outputs too large for a LinMap.
  using Term = std::pair<std::uint64_t, Scalar>;
  std::vector<Term> evaluate_wide(std::vector<Term> input) const;

 private:
  struct Slot {
    int nin = 0;
    int nout = 0;
    std::shared_ptr<const LinMap> map;  // null for identity wires
  };
  struct Row {
    SpaceList in, out;
    std::vector<Slot> slots;
  };

  const BraidingProvider* bp_;
  BraidingProvider flip_;
  SpaceList inputs_;
  SpaceList wires_;
  std::vector<Row> rows_;
};

}  // namespace crossbial
