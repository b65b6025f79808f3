#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossbial/scalar.hpp"

namespace crossbial {

struct SpaceLabel {
  std::string name;
  int dim = 1;

  friend bool operator==(const SpaceLabel& a, const SpaceLabel& b) {
    return a.name == b.name && a.dim == b.dim;
  }
};

using SpaceList = std::vector<SpaceLabel>;

std::string describe(const SpaceList& spaces);

inline SpaceList concat(SpaceList a, const SpaceList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
std::uint64_t total_dim(const SpaceList& spaces);

// Mixed-radix conversion with the leftmost factor most significant.
std::vector<int> unflatten(const SpaceList& spaces, std::uint64_t index);
std::uint64_t flatten(const SpaceList& spaces, const std::vector<int>& digits);

struct Entry {
  std::uint32_t row;
  Scalar value;
};

// A sparse vector: entries sorted by row, no stored zeros.
using Column = std::vector<Entry>;

// Exact linear map dom -> cod. Entries are kept column by column; the
// public view is the (prod cod) x (prod dom) matrix.
class LinMap {
 public:
  LinMap() = default;
  LinMap(SpaceList dom, SpaceList cod);

  static LinMap zero(SpaceList dom, SpaceList cod) { return LinMap(std::move(dom), std::move(cod)); }
  static LinMap identity(const SpaceList& spaces);
  static LinMap identity(const SpaceLabel& space) { return identity(SpaceList{space}); }
  static LinMap from_dense(SpaceList dom, SpaceList cod, const std::vector<std::vector<Scalar>>& rows);
  // fn(col) returns the image of basis vector `col` as (row, value) pairs in any order.
  static LinMap from_columns(SpaceList dom, SpaceList cod,
                             const std::function<std::vector<std::pair<std::uint64_t, Scalar>>(std::uint64_t)>& fn);
  static LinMap scalar(const Scalar& s);

  const SpaceList& dom() const { return dom_; }
  const SpaceList& cod() const { return cod_; }
  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_.size(); }

  Scalar at(std::uint64_t row, std::uint64_t col) const;
  const Column& column(std::uint64_t col) const { return cols_[col]; }
  void set_column(std::uint64_t col, Column entries);
  void add(std::uint64_t row, std::uint64_t col, const Scalar& v);

  std::vector<std::vector<Scalar>> dense() const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  // Same matrix, new boundary labels with equal total dimension.
  LinMap relabel(SpaceList dom, SpaceList cod) const;
  LinMap transpose() const;

  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  LinMap operator*(const Scalar& s) const;

  // Exact equality of boundaries and entries.
  friend bool operator==(const LinMap& a, const LinMap& b);

 private:
  SpaceList dom_, cod_;
  std::uint64_t rows_ = 1;
  std::vector<Column> cols_;
};

// First entry where two equally shaped maps differ, scanning columns in
// ascending order and rows within a column in ascending order.
struct Difference {
  std::uint64_t row;
  std::uint64_t col;
  Scalar lhs;
  Scalar rhs;
};
std::optional<Difference> first_difference(const LinMap& a, const LinMap& b);

LinMap compose(const LinMap& g, const LinMap& f);
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap tensor(std::initializer_list<LinMap> maps);
// Output factor k is input factor perm[k].
LinMap permutation(const SpaceList& spaces, const std::vector<int>& perm);
LinMap flip(const SpaceLabel& x, const SpaceLabel& y);
LinMap invert(const LinMap& f);
std::size_t rank(const LinMap& f);

// Dense exact solve of A x = b; nullopt if inconsistent. A free variables are set to 0.
std::optional<std::vector<Scalar>> solve(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                                         std::size_t* rank_out = nullptr);

Column apply(const LinMap& f, const Column& v);

// Column-space factorisation f = inj o proj with proj o inj = id on the image.
struct Splitting {
  LinMap inj;   // image -> cod
  LinMap proj;  // dom -> image
};
Splitting split_idempotent(const LinMap& e, const SpaceLabel& image);

}  // namespace crossbial
