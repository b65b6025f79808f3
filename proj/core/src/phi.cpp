#include <algorithm>
#include <unordered_map>

#include "crossbial/datum.hpp"
#include "crossbial/diagram.hpp"
#include "crossbial/error.hpp"

namespace crossbial {

namespace {

Box B(const LinMap& m) { return Box::of(m); }
Box I(int n = 1) { return Box::id(n); }
Box X() { return Box::braid(); }

SpaceList four(const HopfDatum& d) { return {d.B1.space, d.B2.space, d.B1.space, d.B2.space}; }

// Rows before f. With `f` null the middle four wires pass through.
void pre_rows(Diagram& g, const HopfDatum& d, const LinMap* f) {
  const BiunitalPair &A = d.B1, &H = d.B2;
  g.row({I(), B(H.delta), B(A.delta), I()})
      .row({I(), B(H.delta), X(), B(A.delta), I()})
      .row({I(), B(d.nu_r), X(), X(), B(d.nu_l), I()})
      .row({B(A.delta), I(), X(), I(2), X(), I(), B(H.delta)})
      .row({I(), B(d.nu_l), B(d.mu_l), I(4), B(d.mu_r), B(d.nu_r), I()})
      .row({I(2), X(), f ? B(*f) : I(4), X(), I(2)});
}

void post_rows(Diagram& g, const HopfDatum& d) {
  const BiunitalPair &A = d.B1, &H = d.B2;
  g.row({I(), B(d.mu_l), B(d.nu_l), I(4), B(d.nu_r), B(d.mu_r), I()})
      .row({B(A.m), I(), X(), I(2), X(), I(), B(H.m)})
      .row({I(), B(d.mu_r), X(), X(), B(d.mu_l), I()})
      .row({I(), B(H.m), X(), B(A.m), I()})
      .row({I(), B(H.m), B(A.m), I()});
}

}  // namespace

LinMap projector_pi(const HopfDatum& d) {
  return tensor({compose(d.B1.eta, d.B1.eps), d.B2.id(), d.B1.id(), compose(d.B2.eta, d.B2.eps)});
}

LinMap phi_apply(const HopfDatum& d, const LinMap& f) {
  validate_datum(d);
  const SpaceList w = four(d);
  if (!(f.dom() == w) || !(f.cod() == w))
    fail(ErrorKind::Shape, "Phi acts on endomorphisms of " + describe(w));
  Diagram g(w, &d.braiding);
  pre_rows(g, d, &f);
  post_rows(g, d);
  return g.evaluate();
}

PhiSuperoperator PhiSuperoperator::build(const HopfDatum& d, std::size_t max_nonzeros) {
  validate_datum(d);
  PhiSuperoperator s;
  s.four_ = four(d);
  const std::uint64_t n = total_dim(s.four_);
  s.d_ = n;
  if (n * n > 0xFFFFFFFFULL) fail(ErrorKind::Unsupported, "superoperator dimension exceeds 32-bit indexing");
  const SpaceList end{SpaceLabel{"End(" + describe(s.four_) + ")", static_cast<int>(n * n)}};

  Diagram pre(s.four_, &d.braiding);
  pre_rows(pre, d, nullptr);
  const SpaceList mid = pre.wires();
  Diagram post(mid, &d.braiding);
  post_rows(post, d);

  std::uint64_t left = 1, right = 1;
  for (int k = 0; k < 4; ++k) left *= mid[k].dim;
  for (int k = 8; k < 12; ++k) right *= mid[k].dim;

  // Phi(E_{ji})[o, c] = sum_{l,r} Post[o; l, j, r] Pre[l, i, r; c]
  std::vector<std::vector<std::pair<std::uint64_t, Scalar>>> cols(n * n);
  std::unordered_map<std::uint64_t, std::vector<Diagram::Term>> post_cache;
  std::size_t total = 0;
  for (std::uint64_t c = 0; c < n; ++c) {
    auto pre_col = pre.evaluate_wide({{c, Scalar(1)}});
    for (const auto& [idx, pv] : pre_col) {
      const std::uint64_t r = idx % right;
      const std::uint64_t i = (idx / right) % n;
      const std::uint64_t l = idx / right / n;
      for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t key = (l * n + j) * right + r;
        auto it = post_cache.find(key);
        if (it == post_cache.end()) it = post_cache.emplace(key, post.evaluate_wide({{key, Scalar(1)}})).first;
        auto& dst = cols[j * n + i];
        for (const auto& [o, qv] : it->second) dst.emplace_back(o * n + c, pv * qv);
        total += it->second.size();
        if (total > max_nonzeros) fail(ErrorKind::Unsupported, "superoperator exceeds the nonzero budget");
      }
    }
  }

  s.phi_ = LinMap(end, end);
  for (std::uint64_t k = 0; k < n * n; ++k) {
    Column col;
    col.reserve(cols[k].size());
    for (auto& [row, v] : cols[k]) col.push_back(Entry{static_cast<std::uint32_t>(row), std::move(v)});
    cols[k].clear();
    cols[k].shrink_to_fit();
    s.phi_.set_column(k, std::move(col));
  }

  // P(E_{ji}) = pi E_{ji} pi has entries pi[a, j] pi[i, b] at (a, b)
  const LinMap pi = projector_pi(d);
  const LinMap pit = pi.transpose();
  s.proj_ = LinMap(end, end);
  for (std::uint64_t j = 0; j < n; ++j)
    for (std::uint64_t i = 0; i < n; ++i) {
      Column col;
      for (const auto& ea : pi.column(j))
        for (const auto& eb : pit.column(i)) col.push_back(Entry{static_cast<std::uint32_t>(ea.row * n + eb.row), ea.value * eb.value});
      s.proj_.set_column(j * n + i, std::move(col));
    }
  return s;
}

Column PhiSuperoperator::vectorize(const LinMap& f) const {
  if (!(f.dom() == four_) || !(f.cod() == four_)) fail(ErrorKind::Shape, "vectorize expects an endomorphism of " + describe(four_));
  Column v;
  for (std::uint64_t c = 0; c < d_; ++c)
    for (const auto& e : f.column(c)) v.push_back(Entry{static_cast<std::uint32_t>(e.row * d_ + c), e.value});
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  return v;
}

LinMap PhiSuperoperator::unvectorize(const Column& v) const {
  LinMap f(four_, four_);
  for (const auto& e : v) f.add(e.row / d_, e.row % d_, e.value);
  return f;
}

OrderResult recursion_order(const PhiSuperoperator& s, int n_max) {
  OrderResult res;
  res.cap = n_max;
  const LinMap id = LinMap::identity(s.phi().dom());
  LinMap t = id - s.projector();
  int n = 0;
  while (!t.is_zero()) {
    if (n == n_max) return res;
    t = compose(s.phi(), t);
    ++n;
  }
  res.order = n;
  LinMap u = s.phi() - id;
  for (int k = 0; k < n; ++k) u = compose(s.phi(), u);
  res.stable_at_order = u.is_zero();
  return res;
}

OrderResult recursion_order(const HopfDatum& d, int n_max) {
  return recursion_order(PhiSuperoperator::build(d), n_max);
}

}  // namespace crossbial
