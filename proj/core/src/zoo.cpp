#include "crossbial/zoo.hpp"

#include <map>
#include <numeric>

#include "crossbial/error.hpp"
#include "crossbial/groups.hpp"

namespace crossbial {

namespace {

using Elem = std::map<std::uint64_t, Scalar>;
using Terms = std::vector<std::pair<std::uint64_t, Scalar>>;

void accumulate(Elem& out, std::uint64_t i, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = out.emplace(i, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) out.erase(it);
  }
}

Terms terms(const Elem& e) { return Terms(e.begin(), e.end()); }

Elem basis(std::uint64_t i) { return Elem{{i, Scalar(1)}}; }

// Product in H (m given as a LinMap on basis of size D).
Elem mul(const LinMap& m, std::uint64_t D, const Elem& a, const Elem& b) {
  Elem out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      for (const Entry& e : m.column(i * D + j)) accumulate(out, e.row, x * y * e.value);
  return out;
}

// Product in H⊗H with (a⊗b)(c⊗d) = ac⊗bd.
Elem mul2(const LinMap& m, std::uint64_t D, const Elem& u, const Elem& v) {
  Elem out;
  for (const auto& [i, x] : u)
    for (const auto& [j, y] : v) {
      const Column& left = m.column((i / D) * D + j / D);
      const Column& right = m.column((i % D) * D + j % D);
      for (const Entry& l : left)
        for (const Entry& r : right) accumulate(out, l.row * D + r.row, x * y * l.value * r.value);
    }
  return out;
}

LinMap from_elems(const SpaceList& dom, const SpaceList& cod, const std::vector<Elem>& cols) {
  return LinMap::from_columns(dom, cod, [&](std::uint64_t c) { return terms(cols[c]); });
}

std::string cyclic_name(const std::vector<int>& orders) {
  std::string s = "kC_";
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "×C_" : "") + std::to_string(orders[i]);
  return s;
}

SpaceList one(const SpaceLabel& s) { return SpaceList{s}; }

}  // namespace

HopfAlgebraData group_algebra(int N, const std::string& name) {
  return group_algebra(std::vector<int>{N}, name);
}

HopfAlgebraData group_algebra(const std::vector<int>& orders, const std::string& name) {
  if (orders.empty()) fail(ErrorKind::Parameter, "group_algebra needs at least one cyclic factor");
  for (int n : orders)
    if (n < 1) fail(ErrorKind::Parameter, "cyclic orders must be positive");
  SpaceList shape;
  for (int n : orders) shape.push_back(SpaceLabel{"", n});
  const int D = static_cast<int>(total_dim(shape));
  SpaceLabel s{name.empty() ? cyclic_name(orders) : name, D};
  const SpaceList x = one(s), xx{s, s};
  auto add = [&](std::uint64_t a, std::uint64_t b, int sign) {
    std::vector<int> da = unflatten(shape, a), db = unflatten(shape, b);
    for (std::size_t i = 0; i < da.size(); ++i) da[i] = ((da[i] + sign * db[i]) % orders[i] + orders[i]) % orders[i];
    return flatten(shape, da);
  };
  LinMap m = LinMap::from_columns(xx, x, [&](std::uint64_t c) {
    return Terms{{add(c / D, c % D, 1), Scalar(1)}};
  });
  LinMap eta = LinMap::from_columns({}, x, [](std::uint64_t) { return Terms{{0, Scalar(1)}}; });
  LinMap delta = LinMap::from_columns(x, xx, [&](std::uint64_t c) { return Terms{{c * D + c, Scalar(1)}}; });
  LinMap eps = LinMap::from_columns(x, {}, [](std::uint64_t) { return Terms{{0, Scalar(1)}}; });
  LinMap S = LinMap::from_columns(x, x, [&](std::uint64_t c) { return Terms{{add(0, c, -1), Scalar(1)}}; });
  return make_pair(s, m, eta, delta, eps, S);
}

HopfAlgebraData dual_group_algebra(int N, const std::string& name) {
  if (N < 1) fail(ErrorKind::Parameter, "dual_group_algebra needs N >= 1");
  SpaceLabel s{name.empty() ? "k^C_" + std::to_string(N) : name, N};
  const SpaceList x = one(s), xx{s, s};
  const std::uint64_t n = N;
  LinMap m = LinMap::from_columns(xx, x, [&](std::uint64_t c) {
    return c / n == c % n ? Terms{{c / n, Scalar(1)}} : Terms{};
  });
  LinMap eta = LinMap::from_columns({}, x, [&](std::uint64_t) {
    Terms t;
    for (std::uint64_t a = 0; a < n; ++a) t.emplace_back(a, Scalar(1));
    return t;
  });
  LinMap delta = LinMap::from_columns(x, xx, [&](std::uint64_t a) {
    Terms t;
    for (std::uint64_t b = 0; b < n; ++b) t.emplace_back(b * n + (a + n - b) % n, Scalar(1));
    return t;
  });
  LinMap eps = LinMap::from_columns(x, {}, [](std::uint64_t a) { return a == 0 ? Terms{{0, Scalar(1)}} : Terms{}; });
  LinMap S = LinMap::from_columns(x, x, [&](std::uint64_t a) { return Terms{{(n - a) % n, Scalar(1)}}; });
  return make_pair(s, m, eta, delta, eps, S);
}

LinMap standard_pairing(const HopfAlgebraData& kg, const HopfAlgebraData& fun) {
  if (kg.dim() != fun.dim()) fail(ErrorKind::Shape, "standard pairing needs equal dimensions");
  const std::uint64_t n = kg.dim();
  return LinMap::from_columns(SpaceList{kg.space, fun.space}, {}, [&](std::uint64_t c) {
    return c / n == c % n ? Terms{{0, Scalar(1)}} : Terms{};
  });
}

BiunitalPair taft_factor(int r, const Scalar& p, const std::string& name) {
  if (r < 1) fail(ErrorKind::Parameter, "taft_factor needs r >= 1");
  if (multiplicative_order(p, r) != r)
    fail(ErrorKind::Parameter, "taft_factor: p = " + p.str() + " does not have order " + std::to_string(r));
  SpaceLabel s{name.empty() ? "k[x]/x^" + std::to_string(r) : name, r};
  const SpaceList x = one(s), xx{s, s};
  const std::uint64_t R = r;
  LinMap m = LinMap::from_columns(xx, x, [&](std::uint64_t c) {
    const std::uint64_t e = c / R + c % R;
    return e < R ? Terms{{e, Scalar(1)}} : Terms{};
  });
  LinMap eta = LinMap::from_columns({}, x, [](std::uint64_t) { return Terms{{0, Scalar(1)}}; });
  LinMap delta = LinMap::from_columns(x, xx, [&](std::uint64_t mm) {
    Terms t;
    for (std::uint64_t l = 0; l <= mm; ++l)
      t.emplace_back(l * R + (mm - l), q_binomial(static_cast<int>(mm), static_cast<int>(l), p));
    return t;
  });
  LinMap eps = LinMap::from_columns(x, {}, [](std::uint64_t a) { return a == 0 ? Terms{{0, Scalar(1)}} : Terms{}; });
  return make_pair(s, m, eta, delta, eps);
}

// ---------------------------------------------------------------------------

int RadfordParams::r() const { return n / std::gcd(n, nu); }

std::string RadfordParams::str() const {
  return "(" + std::to_string(n) + "," + std::to_string(q_exponent) + "," + std::to_string(N) + "," +
         std::to_string(nu) + ")";
}

void validate(const RadfordParams& p) {
  if (p.n < 2) fail(ErrorKind::Parameter, "radford: need n >= 2 so that 0 < nu < n is possible");
  if (p.N < 1 || p.N % p.n != 0) fail(ErrorKind::Parameter, "radford: n must divide N");
  if (p.nu <= 0 || p.nu >= p.n) fail(ErrorKind::Parameter, "radford: need 0 < nu < n");
  if (std::gcd(((p.q_exponent % p.n) + p.n) % p.n, p.n) != 1)
    fail(ErrorKind::Parameter, "radford: q exponent must be coprime to n");
}

ZooEntry radford(const RadfordParams& p) {
  validate(p);
  const int n = p.n, N = p.N, nu = p.nu, r = p.r();
  const std::uint64_t D = static_cast<std::uint64_t>(r) * N;
  std::vector<Scalar> qp(n);
  const Scalar q = root_of_unity(n, p.q_exponent);
  qp[0] = Scalar(1);
  for (int k = 1; k < n; ++k) qp[k] = qp[k - 1] * q;
  auto qpow = [&](long long k) { return qp[((k % n) + n) % n]; };
  auto idx = [&](int mm, int l) { return static_cast<std::uint64_t>(mm) * N + ((l % N) + N) % N; };

  SpaceLabel s{"Rad" + p.str(), static_cast<int>(D)};
  const SpaceList x = one(s), xx{s, s};
  // (x^a g^b)(x^c g^d) = q^{-bc} x^{a+c} g^{b+d}
  LinMap m = LinMap::from_columns(xx, x, [&](std::uint64_t col) {
    const int a = static_cast<int>((col / D) / N), b = static_cast<int>((col / D) % N);
    const int c = static_cast<int>((col % D) / N), d = static_cast<int>((col % D) % N);
    if (a + c >= r) return Terms{};
    return Terms{{idx(a + c, b + d), qpow(-static_cast<long long>(b) * c)}};
  });
  LinMap eta = LinMap::from_columns({}, x, [](std::uint64_t) { return Terms{{0, Scalar(1)}}; });
  LinMap eps = LinMap::from_columns(x, {}, [&](std::uint64_t c) {
    return c / N == 0 ? Terms{{0, Scalar(1)}} : Terms{};
  });

  const Elem dx{{idx(1, 0) * D + idx(0, 0), Scalar(1)}, {idx(0, -nu) * D + idx(1, 0), Scalar(1)}};
  const Elem dg{{idx(0, 1) * D + idx(0, 1), Scalar(1)}};
  std::vector<Elem> dxp{Elem{{0, Scalar(1)}}}, dgp{Elem{{0, Scalar(1)}}};
  for (int k = 1; k < r; ++k) dxp.push_back(mul2(m, D, dxp.back(), dx));
  for (int k = 1; k < N; ++k) dgp.push_back(mul2(m, D, dgp.back(), dg));
  std::vector<Elem> dcols(D), scols(D);
  const Elem sg = basis(idx(0, -1));
  const Elem sx = mul(m, D, Elem{{idx(0, nu), Scalar(-1)}}, basis(idx(1, 0)));
  for (int mm = 0; mm < r; ++mm)
    for (int l = 0; l < N; ++l) {
      dcols[idx(mm, l)] = mul2(m, D, dxp[mm], dgp[l]);
      Elem a = basis(0);
      for (int k = 0; k < l; ++k) a = mul(m, D, a, sg);
      for (int k = 0; k < mm; ++k) a = mul(m, D, a, sx);
      scols[idx(mm, l)] = a;
    }
  HopfAlgebraData H = make_pair(s, m, eta, from_elems(x, xx, dcols), eps, from_elems(x, x, scols));

  SpaceLabel b1{"k[x]/x^" + std::to_string(r), r};
  SpaceLabel b2{"kC_" + std::to_string(N), N};
  ProjectionSystem sys{
      H,
      LinMap::from_columns(one(b1), x, [&](std::uint64_t mm) { return Terms{{idx(static_cast<int>(mm), 0), Scalar(1)}}; }),
      LinMap::from_columns(one(b2), x, [&](std::uint64_t l) { return Terms{{idx(0, static_cast<int>(l)), Scalar(1)}}; }),
      LinMap::from_columns(x, one(b1), [&](std::uint64_t c) { return Terms{{c / N, Scalar(1)}}; }),
      LinMap::from_columns(x, one(b2), [&](std::uint64_t c) {
        return c / N == 0 ? Terms{{c % N, Scalar(1)}} : Terms{};
      })};
  ZooEntry e = entry_from_system("radford" + p.str(), sys);

  const HopfDatum& d = e.datum;
  const HopfDatum triv = trivial_datum(d.B1, d.B2);
  const std::uint64_t R = r;
  LinMap mu_l = LinMap::from_columns(SpaceList{b2, b1}, one(b1), [&](std::uint64_t c) {
    const long long l = static_cast<long long>(c / R), mm = static_cast<long long>(c % R);
    return Terms{{c % R, qpow(-mm * l)}};
  });
  LinMap nu_l = LinMap::from_columns(one(b1), SpaceList{b2, b1}, [&](std::uint64_t mm) {
    const long long g = ((-static_cast<long long>(nu) * static_cast<long long>(mm)) % N + N) % N;
    return Terms{{static_cast<std::uint64_t>(g) * R + mm, Scalar(1)}};
  });
  if (!(d.mu_l == mu_l) || !(d.nu_l == nu_l) || !(d.mu_r == triv.mu_r) || !(d.nu_r == triv.nu_r))
    fail(ErrorKind::InternalConsistency, "radford" + p.str() + ": decomposition differs from the closed-form datum");
  return e;
}

// ---------------------------------------------------------------------------

void validate(const OreParams& p) {
  if (p.group.empty()) fail(ErrorKind::Parameter, "ore: the group needs at least one cyclic factor");
  for (int n : p.group)
    if (n < 1) fail(ErrorKind::Parameter, "ore: cyclic orders must be positive");
  if (p.t < 1) fail(ErrorKind::Parameter, "ore: need t >= 1");
  if (p.t > 16) fail(ErrorKind::Unsupported, "ore: at most 16 generators");
  if (static_cast<int>(p.g.size()) != p.t || static_cast<int>(p.g_star.size()) != p.t)
    fail(ErrorKind::Parameter, "ore: need exactly t group elements and t characters");
  for (const auto* list : {&p.g, &p.g_star})
    for (const auto& v : *list)
      if (v.size() != p.group.size()) fail(ErrorKind::Parameter, "ore: exponent vectors must match the group rank");
}

ZooEntry ore_finite(const OreParams& p) {
  validate(p);
  const std::vector<int>& ord = p.group;
  const int t = p.t;
  int L = 1;
  for (int n : ord) L = std::lcm(L, n);
  const Scalar zeta = root_of_unity(L, 1);
  SpaceList shape;
  for (int n : ord) shape.push_back(SpaceLabel{"", n});
  const std::uint64_t C = total_dim(shape);
  auto chi = [&](int j, const std::vector<int>& c) {
    long long e = 0;
    for (std::size_t i = 0; i < ord.size(); ++i) e += static_cast<long long>(p.g_star[j][i]) * c[i] * (L / ord[i]);
    return zeta.pow(((e % L) + L) % L);
  };
  auto norm = [&](std::vector<int> v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % ord[i]) + ord[i]) % ord[i];
    return v;
  };
  std::vector<std::vector<Scalar>> gjk(t, std::vector<Scalar>(t));
  for (int j = 0; j < t; ++j)
    for (int k = 0; k < t; ++k) gjk[j][k] = chi(j, norm(p.g[k]));
  for (int j = 0; j < t; ++j) {
    for (int k = 0; k < t; ++k)
      if (!(gjk[j][k] * gjk[k][j] == Scalar(1)))
        fail(ErrorKind::Parameter, "ore: g_{lr}·g_{rl} = 1 fails for l=" + std::to_string(j + 1) +
                                       ", r=" + std::to_string(k + 1));
    if (!(gjk[j][j] == Scalar(-1)))
      fail(ErrorKind::Unsupported, "ore: H(C,t,g,g*) is finite-dimensional only when g_jj = -1 (g_" +
                                       std::to_string(j + 1) + std::to_string(j + 1) + " = " + gjk[j][j].str() + ")");
  }
  bool g_nontrivial = false, chi_nontrivial = false;
  for (int j = 0; j < t; ++j) {
    if (flatten(shape, norm(p.g[j])) != 0) g_nontrivial = true;
    for (std::uint64_t c = 0; c < C; ++c)
      if (!(chi(j, unflatten(shape, c)) == Scalar(1))) chi_nontrivial = true;
  }
  if (!g_nontrivial || !chi_nontrivial)
    fail(ErrorKind::Parameter, "ore: need at least one nontrivial g_i and one nontrivial character");

  const std::uint64_t T = std::uint64_t{1} << t;
  const std::uint64_t D = C * T;
  // chi table: chitab[j][c]
  std::vector<std::vector<Scalar>> chitab(t, std::vector<Scalar>(C));
  for (int j = 0; j < t; ++j)
    for (std::uint64_t c = 0; c < C; ++c) chitab[j][c] = chi(j, unflatten(shape, c));
  auto cmul = [&](std::uint64_t a, std::uint64_t b, int sign) {
    std::vector<int> da = unflatten(shape, a), db = unflatten(shape, b);
    for (std::size_t i = 0; i < da.size(); ++i) da[i] += sign * db[i];
    return flatten(shape, norm(da));
  };

  SpaceLabel s{"H(" + cyclic_name(ord).substr(1) + "," + std::to_string(t) + ")", static_cast<int>(D)};
  const SpaceList x = one(s), xx{s, s};
  // (c x^e)(c' x^e') = c c' prod_{j in e} g*_j(c') x^e x^e'
  LinMap m = LinMap::from_columns(xx, x, [&](std::uint64_t col) {
    const std::uint64_t a = col / D, b = col % D;
    const std::uint64_t c1 = a / T, e1 = a % T, c2 = b / T, e2 = b % T;
    if (e1 & e2) return Terms{};
    Scalar v(1);
    for (int j = 0; j < t; ++j)
      if (e1 >> j & 1) v *= chitab[j][c2];
    for (int k = 0; k < t; ++k)
      if (e2 >> k & 1)
        for (int j = k + 1; j < t; ++j)
          if (e1 >> j & 1) v *= gjk[j][k];
    return Terms{{cmul(c1, c2, 1) * T + (e1 | e2), v}};
  });
  LinMap eta = LinMap::from_columns({}, x, [](std::uint64_t) { return Terms{{0, Scalar(1)}}; });
  LinMap eps = LinMap::from_columns(x, {}, [&](std::uint64_t c) {
    return c % T == 0 ? Terms{{0, Scalar(1)}} : Terms{};
  });
  std::vector<Elem> dcols(D), scols(D);
  std::vector<Elem> dxj(t), sxj(t);
  for (int j = 0; j < t; ++j) {
    const std::uint64_t xj = std::uint64_t{1} << j;
    const std::uint64_t gj = flatten(shape, norm(p.g[j]));
    dxj[j] = Elem{{xj * D + gj * T, Scalar(1)}, {xj, Scalar(1)}};
    sxj[j] = mul(m, D, Elem{{xj, Scalar(-1)}}, basis(cmul(0, gj, -1) * T));
  }
  for (std::uint64_t c = 0; c < C; ++c)
    for (std::uint64_t e = 0; e < T; ++e) {
      Elem d{{(c * T) * D + c * T, Scalar(1)}};
      for (int j = 0; j < t; ++j)
        if (e >> j & 1) d = mul2(m, D, d, dxj[j]);
      dcols[c * T + e] = d;
      Elem a = basis(0);
      for (int j = t - 1; j >= 0; --j)
        if (e >> j & 1) a = mul(m, D, a, sxj[j]);
      scols[c * T + e] = mul(m, D, a, basis(cmul(0, c, -1) * T));
    }
  HopfAlgebraData H = make_pair(s, m, eta, from_elems(x, xx, dcols), eps, from_elems(x, x, scols));

  SpaceLabel b1{cyclic_name(ord), static_cast<int>(C)};
  SpaceLabel b2{"Λ" + std::to_string(t), static_cast<int>(T)};
  ProjectionSystem sys{
      H,
      LinMap::from_columns(one(b1), x, [&](std::uint64_t c) { return Terms{{c * T, Scalar(1)}}; }),
      LinMap::from_columns(one(b2), x, [&](std::uint64_t e) { return Terms{{e, Scalar(1)}}; }),
      LinMap::from_columns(x, one(b1), [&](std::uint64_t i) {
        return i % T == 0 ? Terms{{i / T, Scalar(1)}} : Terms{};
      }),
      LinMap::from_columns(x, one(b2), [&](std::uint64_t i) { return Terms{{i % T, Scalar(1)}}; })};
  ZooEntry e = entry_from_system("ore" + s.name.substr(1), sys);
  const TrivalencePattern pat = trivalence_pattern(e.datum);
  if (!(pat == TrivalencePattern::parse("0101")))
    fail(ErrorKind::InternalConsistency, "ore: expected a biproduct datum, got pattern " + pat.str());
  return e;
}

// ---------------------------------------------------------------------------

DoubleBiproductInput sweedler_crossed_modules(int N) {
  if (N < 2 || N % 2 != 0) fail(ErrorKind::Parameter, "sweedler_crossed_modules needs an even N >= 2");
  ZooEntry rad = radford(RadfordParams{2, 1, N, 1});
  ZooEntry ore = ore_finite(OreParams{{N}, 1, {{1}}, {{N / 2}}});
  HopfAlgebraData H = group_algebra(N);
  const SpaceLabel h = H.space;
  for (const BiunitalPair* k : {&rad.datum.B2, &ore.datum.B1})
    if (!(k->space == h) || !(k->m == H.m) || !(k->delta == H.delta))
      fail(ErrorKind::InternalConsistency, "sweedler_crossed_modules: group factor differs from kC_N");
  const SpaceLabel b{"B", 2}, c{"C", 2};
  DoubleBiproductInput in;
  in.H = H;
  in.B = rename(ore.datum.B2, b);
  in.B_action = ore.datum.mu_r.relabel(SpaceList{b, h}, one(b));
  in.B_coaction = ore.datum.nu_r.relabel(one(b), SpaceList{b, h});
  in.C = rename(rad.datum.B1, c);
  in.C_action = rad.datum.mu_l.relabel(SpaceList{h, c}, one(c));
  in.C_coaction = rad.datum.nu_l.relabel(one(c), SpaceList{h, c});
  return in;
}

// ---------------------------------------------------------------------------

ProjectionSystem system_from_datum(const HopfDatum& d) {
  BialgebraData A = build_bialgebra(d);
  const SpaceList a = one(A.space);
  const LinMap i1 = d.B1.id(), i2 = d.B2.id();
  return ProjectionSystem{A,
                          tensor(i1, d.B2.eta).relabel(one(d.B1.space), a),
                          tensor(d.B1.eta, i2).relabel(one(d.B2.space), a),
                          tensor(i1, d.B2.eps).relabel(a, one(d.B1.space)),
                          tensor(d.B1.eps, i2).relabel(a, one(d.B2.space))};
}

ZooEntry entry_from_datum(const std::string& name, const HopfDatum& d) {
  ProjectionSystem sys = system_from_datum(d);
  return ZooEntry{name, sys.A, sys, d};
}

ZooEntry entry_from_system(const std::string& name, const ProjectionSystem& sys) {
  Decomposition dec = decompose(sys);
  return ZooEntry{name, sys.A, sys, bat_to_hopf_datum(dec.bat)};
}

ZooEntry dual_entry(const ZooEntry& e, const std::string& name) {
  BialgebraData A = dual(e.H, e.H.space.name + "*");
  const SpaceList a = one(A.space);
  const SpaceLabel b1 = e.system.i1.dom()[0], b2 = e.system.i2.dom()[0];
  const SpaceList d1{SpaceLabel{b1.name + "*", b1.dim}}, d2{SpaceLabel{b2.name + "*", b2.dim}};
  ProjectionSystem sys{A,
                       e.system.p1.transpose().relabel(d1, a),
                       e.system.p2.transpose().relabel(d2, a),
                       e.system.i1.transpose().relabel(a, d1),
                       e.system.i2.transpose().relabel(a, d2)};
  return entry_from_system(name, sys);
}

ZooEntry tensor_entry(const ZooEntry& a, const ZooEntry& b, const std::string& name) {
  BialgebraData H = tensor_pair(a.H, b.H, a.H.space.name + "⊗" + b.H.space.name);
  const SpaceList h = one(H.space);
  auto fused = [](const LinMap& x, const LinMap& y) {
    const SpaceLabel u = x.dom()[0], v = y.dom()[0];
    return SpaceList{SpaceLabel{u.name + "⊗" + v.name, u.dim * v.dim}};
  };
  const SpaceList f1 = fused(a.system.i1, b.system.i1), f2 = fused(a.system.i2, b.system.i2);
  ProjectionSystem sys{H,
                       tensor(a.system.i1, b.system.i1).relabel(f1, h),
                       tensor(a.system.i2, b.system.i2).relabel(f2, h),
                       tensor(a.system.p1, b.system.p1).relabel(h, f1),
                       tensor(a.system.p2, b.system.p2).relabel(h, f2)};
  return entry_from_system(name, sys);
}

// ---------------------------------------------------------------------------

std::vector<std::string> zoo_names() {
  return {"unit",           "tensor-C2-C3",   "radford-2-1-2-1", "radford-3-1-3-1", "radford-2-1-4-1",
          "ore-C2",         "ore-C4",         "matched-pair-C3", "double-cross-S3", "double-cross-S4",
          "bicross-S3",     "bicross-S3-swap", "bicross-S4",     "S3-x-ore",        "bicross-x-ore",
          "radford-x-ore"};
}

ZooEntry zoo_entry(const std::string& name) {
  if (name == "unit") return entry_from_datum(name, trivial_datum(unit_pair("k1"), unit_pair("k2")));
  if (name == "tensor-C2-C3") return entry_from_datum(name, trivial_datum(group_algebra(2), group_algebra(3)));
  if (name == "radford-2-1-2-1") return radford({2, 1, 2, 1});
  if (name == "radford-3-1-3-1") return radford({3, 1, 3, 1});
  if (name == "radford-2-1-4-1") return radford({2, 1, 4, 1});
  if (name == "ore-C2") return ore_finite({{2}, 1, {{1}}, {{1}}});
  if (name == "ore-C4") return ore_finite({{4}, 1, {{1}}, {{2}}});
  if (name == "matched-pair-C3") {
    HopfAlgebraData H = group_algebra(3), A = dual_group_algebra(3);
    MatchedPairResult r = matched_pair_from_pairing(DualPairing{H, A, standard_pairing(H, A)},
                                                    BraidingProvider::vect_flip());
    HopfDatum d{A, H, r.rhd, tensor(H.eta, A.id()), r.lhd, tensor(H.id(), A.eta), BraidingProvider::vect_flip()};
    return entry_from_datum(name, d);
  }
  if (name == "double-cross-S3") return double_cross(s3_factorization(), name);
  if (name == "double-cross-S4") return double_cross(s4_factorization(), name);
  if (name == "bicross-S3") return bicross(s3_factorization(), name);
  if (name == "bicross-S3-swap") return bicross(s3_factorization(false), name);
  if (name == "bicross-S4") return bicross(s4_factorization(), name);
  if (name == "S3-x-ore")
    return tensor_entry(double_cross(s3_factorization(), "double-cross-S3"), zoo_entry("ore-C2"), name);
  if (name == "bicross-x-ore") return tensor_entry(zoo_entry("bicross-S3-swap"), zoo_entry("ore-C2"), name);
  if (name == "radford-x-ore") return tensor_entry(radford({2, 1, 2, 1}), zoo_entry("ore-C2"), name);
  fail(ErrorKind::Parameter, "unknown zoo entry '" + name + "'");
}

}  // namespace crossbial
