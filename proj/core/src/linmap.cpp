#include "crossbial/linmap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "crossbial/error.hpp"

namespace crossbial {

std::string describe(const SpaceList& spaces) {
  if (spaces.empty()) return "k";
  std::ostringstream os;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (i) os << "⊗";
    os << spaces[i].name;
  }
  return os.str();
}

std::uint64_t total_dim(const SpaceList& spaces) {
  std::uint64_t d = 1;
  for (const auto& s : spaces) d *= static_cast<std::uint64_t>(s.dim);
  return d;
}

std::vector<int> unflatten(const SpaceList& spaces, std::uint64_t index) {
  std::vector<int> digits(spaces.size());
  for (std::size_t i = spaces.size(); i-- > 0;) {
    digits[i] = static_cast<int>(index % spaces[i].dim);
    index /= spaces[i].dim;
  }
  return digits;
}

std::uint64_t flatten(const SpaceList& spaces, const std::vector<int>& digits) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) index = index * spaces[i].dim + digits[i];
  return index;
}

namespace {

class Accumulator {
 public:
  explicit Accumulator(std::uint64_t size) : vals_(size), mark_(size, 0) {}

  void add(std::uint32_t row, const Scalar& v) {
    if (!mark_[row]) {
      mark_[row] = 1;
      touched_.push_back(row);
      vals_[row] = v;
    } else {
      vals_[row] += v;
    }
  }

  Column take() {
    std::sort(touched_.begin(), touched_.end());
    Column out;
    out.reserve(touched_.size());
    for (auto r : touched_) {
      if (!vals_[r].is_zero()) out.push_back({r, std::move(vals_[r])});
      vals_[r] = Scalar();
      mark_[r] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Scalar> vals_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

[[noreturn]] void shape_error(const std::string& what, const SpaceList& a, const SpaceList& b) {
  fail(ErrorKind::Shape, what + ": " + describe(a) + " vs " + describe(b));
}

void check_labels(const SpaceList& spaces) {
  for (const auto& s : spaces)
    if (s.dim < 1) fail(ErrorKind::Shape, "space " + s.name + " has non-positive dimension");
}

}  // namespace

LinMap::LinMap(SpaceList dom, SpaceList cod) : dom_(std::move(dom)), cod_(std::move(cod)) {
  check_labels(dom_);
  check_labels(cod_);
  rows_ = total_dim(cod_);
  if (rows_ > 0xFFFFFFFFULL) fail(ErrorKind::Shape, "codomain too large: " + describe(cod_));
  cols_.resize(total_dim(dom_));
}

LinMap LinMap::identity(const SpaceList& spaces) {
  LinMap m(spaces, spaces);
  for (std::uint64_t i = 0; i < m.cols(); ++i) m.cols_[i].push_back({static_cast<std::uint32_t>(i), Scalar(1)});
  return m;
}

LinMap LinMap::scalar(const Scalar& s) {
  LinMap m({}, {});
  if (!s.is_zero()) m.cols_[0].push_back({0, s});
  return m;
}

LinMap LinMap::from_dense(SpaceList dom, SpaceList cod, const std::vector<std::vector<Scalar>>& rows) {
  LinMap m(std::move(dom), std::move(cod));
  if (rows.size() != m.rows())
    fail(ErrorKind::Shape, "dense matrix has " + std::to_string(rows.size()) + " rows, expected " +
                               std::to_string(m.rows()));
  for (std::uint64_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      fail(ErrorKind::Shape, "dense matrix row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                 " entries, expected " + std::to_string(m.cols()));
    for (std::uint64_t c = 0; c < rows[r].size(); ++c)
      if (!rows[r][c].is_zero()) m.cols_[c].push_back({static_cast<std::uint32_t>(r), rows[r][c]});
  }
  return m;
}

LinMap LinMap::from_columns(SpaceList dom, SpaceList cod,
                            const std::function<std::vector<std::pair<std::uint64_t, Scalar>>(std::uint64_t)>& fn) {
  LinMap m(std::move(dom), std::move(cod));
  Accumulator acc(m.rows());
  for (std::uint64_t c = 0; c < m.cols(); ++c) {
    for (auto& [r, v] : fn(c)) {
      if (r >= m.rows()) fail(ErrorKind::Shape, "row index out of range in from_columns");
      acc.add(static_cast<std::uint32_t>(r), v);
    }
    m.cols_[c] = acc.take();
  }
  return m;
}

Scalar LinMap::at(std::uint64_t row, std::uint64_t col) const {
  const Column& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::uint64_t r) { return e.row < r; });
  if (it != c.end() && it->row == row) return it->value;
  return Scalar();
}

void LinMap::set_column(std::uint64_t col, Column entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  Column clean;
  clean.reserve(entries.size());
  for (auto& e : entries) {
    if (e.row >= rows_) fail(ErrorKind::Shape, "row index out of range");
    if (!clean.empty() && clean.back().row == e.row) {
      clean.back().value += e.value;
    } else {
      clean.push_back(std::move(e));
    }
  }
  clean.erase(std::remove_if(clean.begin(), clean.end(), [](const Entry& e) { return e.value.is_zero(); }),
              clean.end());
  cols_.at(col) = std::move(clean);
}

void LinMap::add(std::uint64_t row, std::uint64_t col, const Scalar& v) {
  if (v.is_zero()) return;
  Column& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::uint64_t r) { return e.row < r; });
  if (it != c.end() && it->row == row) {
    it->value += v;
    if (it->value.is_zero()) c.erase(it);
  } else {
    c.insert(it, Entry{static_cast<std::uint32_t>(row), v});
  }
}

std::vector<std::vector<Scalar>> LinMap::dense() const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_.size()));
  for (std::uint64_t c = 0; c < cols_.size(); ++c)
    for (const auto& e : cols_[c]) out[e.row][c] = e.value;
  return out;
}

std::size_t LinMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool LinMap::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

LinMap LinMap::relabel(SpaceList dom, SpaceList cod) const {
  if (total_dim(dom) != cols() || total_dim(cod) != rows())
    fail(ErrorKind::Shape, "relabel changes dimensions: " + describe(dom_) + " -> " + describe(cod_) + " as " +
                               describe(dom) + " -> " + describe(cod));
  LinMap m = *this;
  m.dom_ = std::move(dom);
  m.cod_ = std::move(cod);
  return m;
}

LinMap LinMap::transpose() const {
  LinMap t(cod_, dom_);
  for (std::uint64_t c = 0; c < cols_.size(); ++c)
    for (const auto& e : cols_[c]) t.cols_[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  return t;
}

LinMap LinMap::operator+(const LinMap& o) const {
  if (!(dom_ == o.dom_) || !(cod_ == o.cod_)) shape_error("sum of differently shaped maps", dom_, o.dom_);
  LinMap m(dom_, cod_);
  for (std::uint64_t c = 0; c < cols_.size(); ++c) {
    const Column& a = cols_[c];
    const Column& b = o.cols_[c];
    Column out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].row < a[i].row) {
        out.push_back(b[j++]);
      } else {
        Scalar s = a[i].value + b[j].value;
        if (!s.is_zero()) out.push_back({a[i].row, std::move(s)});
        ++i;
        ++j;
      }
    }
    m.cols_[c] = std::move(out);
  }
  return m;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + o * Scalar(-1); }

LinMap LinMap::operator*(const Scalar& s) const {
  LinMap m(dom_, cod_);
  if (s.is_zero()) return m;
  for (std::uint64_t c = 0; c < cols_.size(); ++c) {
    m.cols_[c].reserve(cols_[c].size());
    for (const auto& e : cols_[c]) m.cols_[c].push_back({e.row, e.value * s});
  }
  return m;
}

bool operator==(const LinMap& a, const LinMap& b) {
  if (!(a.dom_ == b.dom_) || !(a.cod_ == b.cod_)) return false;
  for (std::uint64_t c = 0; c < a.cols_.size(); ++c) {
    const Column& x = a.cols_[c];
    const Column& y = b.cols_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].row != y[i].row || !(x[i].value == y[i].value)) return false;
  }
  return true;
}

std::optional<Difference> first_difference(const LinMap& a, const LinMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    shape_error("comparison of differently shaped maps", a.dom(), b.dom());
  for (std::uint64_t c = 0; c < a.cols(); ++c) {
    const Column& x = a.column(c);
    const Column& y = b.column(c);
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) return Difference{x[i].row, c, x[i].value, Scalar()};
      if (i == x.size() || y[j].row < x[i].row) return Difference{y[j].row, c, Scalar(), y[j].value};
      if (!(x[i].value == y[j].value)) return Difference{x[i].row, c, x[i].value, y[j].value};
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

Column apply(const LinMap& f, const Column& v) {
  Accumulator acc(f.rows());
  for (const auto& e : v)
    for (const auto& g : f.column(e.row)) acc.add(g.row, g.value * e.value);
  return acc.take();
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!(f.cod() == g.dom())) shape_error("compose: codomain of the inner map does not match domain of the outer map",
                                         f.cod(), g.dom());
  LinMap out(f.dom(), g.cod());
  Accumulator acc(g.rows());
  for (std::uint64_t c = 0; c < f.cols(); ++c) {
    for (const auto& e : f.column(c))
      for (const auto& h : g.column(e.row)) acc.add(h.row, h.value * e.value);
    out.set_column(c, acc.take());
  }
  return out;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  SpaceList dom = f.dom();
  dom.insert(dom.end(), g.dom().begin(), g.dom().end());
  SpaceList cod = f.cod();
  cod.insert(cod.end(), g.cod().begin(), g.cod().end());
  LinMap out(dom, cod);
  const std::uint64_t gr = g.rows();
  for (std::uint64_t c1 = 0; c1 < f.cols(); ++c1) {
    for (std::uint64_t c2 = 0; c2 < g.cols(); ++c2) {
      Column col;
      col.reserve(f.column(c1).size() * g.column(c2).size());
      for (const auto& a : f.column(c1))
        for (const auto& b : g.column(c2))
          col.push_back({static_cast<std::uint32_t>(a.row * gr + b.row), a.value * b.value});
      out.set_column(c1 * g.cols() + c2, std::move(col));
    }
  }
  return out;
}

LinMap tensor(std::initializer_list<LinMap> maps) {
  LinMap acc = LinMap::identity(SpaceList{});
  for (const auto& m : maps) acc = tensor(acc, m);
  return acc;
}

LinMap permutation(const SpaceList& spaces, const std::vector<int>& perm) {
  const int n = static_cast<int>(spaces.size());
  if (static_cast<int>(perm.size()) != n) fail(ErrorKind::Domain, "permutation length does not match factor count");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) fail(ErrorKind::Domain, "permutation is not a bijection on positions");
    seen[p] = 1;
  }
  SpaceList cod(n);
  for (int k = 0; k < n; ++k) cod[k] = spaces[perm[k]];
  LinMap out(spaces, cod);
  std::vector<int> digits(n), odig(n);
  for (std::uint64_t c = 0; c < out.cols(); ++c) {
    digits = unflatten(spaces, c);
    for (int k = 0; k < n; ++k) odig[k] = digits[perm[k]];
    out.set_column(c, Column{{static_cast<std::uint32_t>(flatten(cod, odig)), Scalar(1)}});
  }
  return out;
}

LinMap flip(const SpaceLabel& x, const SpaceLabel& y) { return permutation({x, y}, {1, 0}); }

namespace {

std::size_t dense_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar factor = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= factor * m[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const LinMap& f) { return dense_rank(f.dense()); }

LinMap invert(const LinMap& f) {
  if (f.rows() != f.cols())
    fail(ErrorKind::Shape, "invert requires a square map: " + describe(f.dom()) + " -> " + describe(f.cod()));
  const std::size_t n = f.rows();
  // Bareiss elimination on [A | I], then back substitution.
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n));
  for (std::uint64_t c = 0; c < n; ++c)
    for (const auto& e : f.column(c)) m[e.row][c] = e.value;
  for (std::size_t i = 0; i < n; ++i) m[i][n + i] = Scalar(1);
  Scalar prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) {
      std::size_t r = rank(f);
      throw NonInvertibleError("map " + describe(f.dom()) + " -> " + describe(f.cod()) + " is singular (rank " +
                                   std::to_string(r) + " of " + std::to_string(n) + ")",
                               r);
    }
    std::swap(m[piv], m[k]);
    Scalar pinv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < 2 * n; ++j) {
        Scalar v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_one() ? v : v * pinv;
      }
      m[i][k] = Scalar();
    }
    prev = m[k][k];
  }
  std::vector<std::vector<Scalar>> x(n, std::vector<Scalar>(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Scalar acc = m[ii][n + col];
      for (std::size_t j = ii + 1; j < n; ++j)
        if (!m[ii][j].is_zero() && !x[j][col].is_zero()) acc -= m[ii][j] * x[j][col];
      x[ii][col] = acc / m[ii][ii];
    }
  }
  return LinMap::from_dense(f.cod(), f.dom(), x);
}

std::optional<std::vector<Scalar>> solve(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                                         std::size_t* rank_out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t k = c; k <= cols; ++k)
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (std::size_t k = c; k <= cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= factor * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  if (rank_out) *rank_out = r;
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;
  std::vector<Scalar> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = m[i][cols];
  return x;
}

Splitting split_idempotent(const LinMap& e, const SpaceLabel& image_name) {
  if (e.rows() != e.cols()) fail(ErrorKind::Shape, "idempotent must be square");
  auto d = e.dense();
  const std::size_t n = d.size();
  // pick pivot columns of e as a basis of its image
  std::vector<std::size_t> basis;
  std::vector<std::vector<Scalar>> reduced;  // echelon rows of chosen columns (as vectors)
  std::vector<std::size_t> lead;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Scalar> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = d[r][c];
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (v[lead[k]].is_zero()) continue;
      Scalar f = v[lead[k]] / reduced[k][lead[k]];
      for (std::size_t r = 0; r < n; ++r)
        if (!reduced[k][r].is_zero()) v[r] -= f * reduced[k][r];
    }
    std::size_t l = 0;
    while (l < n && v[l].is_zero()) ++l;
    if (l == n) continue;
    reduced.push_back(std::move(v));
    lead.push_back(l);
    basis.push_back(c);
  }
  const int k = static_cast<int>(basis.size());
  if (k == 0) fail(ErrorKind::InvalidSystem, "idempotent has zero image");
  SpaceLabel img{image_name.name, k};
  LinMap inj(SpaceList{img}, e.cod());
  for (int j = 0; j < k; ++j) {
    Column col;
    for (std::size_t r = 0; r < n; ++r)
      if (!d[r][basis[j]].is_zero()) col.push_back({static_cast<std::uint32_t>(r), d[r][basis[j]]});
    inj.set_column(j, std::move(col));
  }
  // proj(v) = coordinates of e(v) in the chosen basis
  std::vector<std::vector<Scalar>> b(n, std::vector<Scalar>(k));
  for (std::size_t r = 0; r < n; ++r)
    for (int j = 0; j < k; ++j) b[r][j] = d[r][basis[j]];
  LinMap proj(e.dom(), SpaceList{img});
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Scalar> rhs(n);
    for (std::size_t r = 0; r < n; ++r) rhs[r] = d[r][c];
    auto x = solve(b, rhs);
    if (!x) fail(ErrorKind::InternalConsistency, "column of idempotent outside its own image");
    Column col;
    for (int j = 0; j < k; ++j)
      if (!(*x)[j].is_zero()) col.push_back({static_cast<std::uint32_t>(j), (*x)[j]});
    proj.set_column(c, std::move(col));
  }
  return {inj, proj};
}

}  // namespace crossbial
