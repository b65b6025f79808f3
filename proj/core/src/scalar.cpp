#include "crossbial/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "crossbial/error.hpp"

namespace crossbial {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::NonInvertible: return "non-invertible";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotABat: return "not-a-bat";
    case ErrorKind::NotSplitting: return "not-a-splitting";
    case ErrorKind::InvalidSystem: return "invalid-system";
    case ErrorKind::NotConvolutionInvertible: return "not-convolution-invertible";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits64(__int128 v) { return v >= kMin64 && v <= kMax64; }

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) fail(ErrorKind::Domain, "rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 un = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd_u128(un, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n == 0) d = 1;
  if (fits64(n) && fits64(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  return from_mpq(std::move(q));
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    Rational r;
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  Rational r;
  r.num_ = 0;
  r.den_ = 0;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto slash = text.find('/');
  std::string_view ns = trim(text.substr(0, slash));
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  auto valid = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid(ns, true) || !valid(ds, true))
    fail(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\"");
  std::string nstr(ns), dstr(ds);
  if (nstr[0] == '+') nstr.erase(0, 1);
  if (dstr[0] == '+') dstr.erase(0, 1);
  mpz_class n(nstr, 10), d(dstr, 10);
  if (d == 0) fail(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\": zero denominator");
  return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) return from_mpq(-to_mpq());
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::Domain, "division by zero");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
  }
  if (a.den_ == b.den_)
    return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
  __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t p;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
  }
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// cyclotomic fields

int euler_phi(int n) {
  if (n <= 0) fail(ErrorKind::Domain, "euler_phi of non-positive integer");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n <= 0) fail(ErrorKind::Domain, "cyclotomic polynomial of non-positive index");
  // x^n - 1 divided by every Phi_d with d | n, d < n
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long long> div = cyclotomic_polynomial(d);
    int dd = static_cast<int>(div.size()) - 1;
    int dp = static_cast<int>(poly.size()) - 1;
    std::vector<long long> quot(dp - dd + 1, 0);
    for (int k = dp - dd; k >= 0; --k) {
      long long c = poly[k + dd];
      quot[k] = c;
      for (int j = 0; j <= dd; ++j) poly[k + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return poly;
}

namespace {

struct Field {
  int n = 1;
  int phi = 1;
  // xpow[k] = z^k reduced to the power basis.
  std::vector<std::vector<long long>> xpow;
};

std::shared_ptr<const Field> build_field(int n) {
  auto f = std::make_shared<Field>();
  f->n = n;
  f->phi = euler_phi(n);
  std::vector<long long> cp = cyclotomic_polynomial(n);
  int phi = f->phi;
  int count = std::max(n, 2 * phi - 1);
  f->xpow.assign(count, std::vector<long long>(phi, 0));
  for (int k = 0; k < count; ++k) {
    if (k < phi) {
      f->xpow[k][k] = 1;
      continue;
    }
    const auto& prev = f->xpow[k - 1];
    auto& cur = f->xpow[k];
    long long top = prev[phi - 1];
    for (int i = phi - 1; i >= 1; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i) cur[i] -= top * cp[i];
  }
  return f;
}

const Field& field(int n) {
  thread_local int last_n = 0;
  thread_local std::shared_ptr<const Field> last;
  if (last_n == n && last) return *last;
  static std::mutex mu;
  static std::unordered_map<int, std::shared_ptr<const Field>> cache;
  std::shared_ptr<const Field> f;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_field(n)).first;
    f = it->second;
  }
  last_n = n;
  last = f;
  return *last;
}

[[noreturn]] void conductor_mismatch(int a, int b) {
  fail(ErrorKind::Domain, "cyclotomic conductor mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b) + " (no automatic compositum)");
}

}  // namespace

Scalar Scalar::make(int n, std::vector<Rational> c) {
  bool irrational = false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) {
      irrational = true;
      break;
    }
  if (!irrational) return Scalar(c.empty() ? Rational() : c[0]);
  Scalar s;
  s.cyc_ = std::make_shared<const Cyc>(Cyc{n, std::move(c)});
  return s;
}

Scalar Scalar::cyclotomic(int n, std::vector<Rational> coeffs) {
  const Field& f = field(n);
  if (static_cast<int>(coeffs.size()) != f.phi)
    fail(ErrorKind::Domain, "cyclotomic coefficient vector of length " + std::to_string(coeffs.size()) +
                                " for conductor " + std::to_string(n) + " (expected " + std::to_string(f.phi) + ")");
  return make(n, std::move(coeffs));
}

int Scalar::conductor() const { return cyc_ ? cyc_->n : 1; }

std::vector<Rational> Scalar::coeffs() const {
  if (cyc_) return cyc_->c;
  return {r_};
}

const Rational& Scalar::rational() const {
  if (cyc_) fail(ErrorKind::Domain, "scalar is not rational: " + str());
  return r_;
}

Scalar Scalar::operator-() const {
  if (!cyc_) return Scalar(-r_);
  std::vector<Rational> c = cyc_->c;
  for (auto& x : c) x = -x;
  return make(cyc_->n, std::move(c));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.cyc_ && !b.cyc_) return Scalar(a.r_ + b.r_);
  if (!a.cyc_) {
    std::vector<Rational> c = b.cyc_->c;
    c[0] += a.r_;
    return Scalar::make(b.cyc_->n, std::move(c));
  }
  if (!b.cyc_) return b + a;
  if (a.cyc_->n != b.cyc_->n) conductor_mismatch(a.cyc_->n, b.cyc_->n);
  std::vector<Rational> c = a.cyc_->c;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.cyc_->c[i];
  return Scalar::make(a.cyc_->n, std::move(c));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!cyc_ && !o.cyc_) {
    r_ += o.r_;
    return *this;
  }
  return *this = *this + o;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (!cyc_ && !o.cyc_) {
    r_ -= o.r_;
    return *this;
  }
  return *this = *this - o;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.cyc_ && !b.cyc_) return Scalar(a.r_ * b.r_);
  if (!a.cyc_ || !b.cyc_) {
    const Scalar& c = a.cyc_ ? a : b;
    const Rational& r = a.cyc_ ? b.r_ : a.r_;
    if (r.is_zero()) return Scalar();
    std::vector<Rational> v = c.cyc_->c;
    for (auto& x : v) x *= r;
    return Scalar::make(c.cyc_->n, std::move(v));
  }
  if (a.cyc_->n != b.cyc_->n) conductor_mismatch(a.cyc_->n, b.cyc_->n);
  const Field& f = field(a.cyc_->n);
  int phi = f.phi;
  std::vector<Rational> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (a.cyc_->c[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.cyc_->c[j].is_zero()) continue;
      prod[i + j] += a.cyc_->c[i] * b.cyc_->c[j];
    }
  }
  std::vector<Rational> out(phi);
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (prod[k].is_zero()) continue;
    const auto& red = f.xpow[k];
    for (int i = 0; i < phi; ++i)
      if (red[i] != 0) out[i] += prod[k] * Rational(red[i]);
  }
  return Scalar::make(a.cyc_->n, std::move(out));
}

Scalar Scalar::inverse() const {
  if (!cyc_) return Scalar(r_.inverse());
  const Field& f = field(cyc_->n);
  int phi = f.phi;
  // Solve (a * y) = 1 for y; column j of M holds the coordinates of a*z^j.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    std::vector<Rational> zj(phi);
    zj[j] = Rational(1);
    Scalar col = *this * make(cyc_->n, zj);
    std::vector<Rational> cc = col.coeffs();
    cc.resize(phi);
    for (int i = 0; i < phi; ++i) m[i][j] = cc[i];
  }
  m[0][phi] = Rational(1);
  for (int col = 0, row = 0; col < phi; ++col, ++row) {
    int piv = row;
    while (piv < phi && m[piv][col].is_zero()) ++piv;
    if (piv == phi) fail(ErrorKind::Domain, "division by zero");
    std::swap(m[piv], m[row]);
    Rational inv = m[row][col].inverse();
    for (int k = col; k <= phi; ++k) m[row][k] *= inv;
    for (int i = 0; i < phi; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational factor = m[i][col];
      for (int k = col; k <= phi; ++k) m[i][k] -= factor * m[row][k];
    }
  }
  std::vector<Rational> y(phi);
  for (int i = 0; i < phi; ++i) y[i] = m[i][phi];
  return make(cyc_->n, std::move(y));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.cyc_ && !b.cyc_) return a.r_ == b.r_;
  if (!a.cyc_ || !b.cyc_) return false;
  if (a.cyc_->n != b.cyc_->n) conductor_mismatch(a.cyc_->n, b.cyc_->n);
  return a.cyc_->c == b.cyc_->c;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Scalar::str() const {
  if (!cyc_) return r_.str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < cyc_->c.size(); ++i) {
    const Rational& c = cyc_->c[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    if (c.sign() < 0) cs = (-c).str();
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << "z" << cyc_->n;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::size_t Scalar::hash() const {
  if (!cyc_) return r_.hash();
  std::size_t h = static_cast<std::size_t>(cyc_->n) * 0x9E3779B97F4A7C15ULL;
  for (const auto& c : cyc_->c) h ^= c.hash() + 0x9E3779B9 + (h << 6) + (h >> 2);
  return h;
}

Scalar root_of_unity(int n, long long k) {
  if (n <= 0) fail(ErrorKind::Domain, "root_of_unity: order must be positive");
  long long km = ((k % n) + n) % n;
  if (std::gcd(km, static_cast<long long>(n)) != 1)
    fail(ErrorKind::Domain, "root_of_unity: invalid primitivity, gcd(" + std::to_string(k) + ", " +
                                std::to_string(n) + ") != 1");
  const Field& f = field(n);
  std::vector<Rational> c(f.phi);
  for (int i = 0; i < f.phi; ++i) c[i] = Rational(f.xpow[km][i]);
  return Scalar::cyclotomic(n, std::move(c));
}

Scalar q_integer(int s, const Scalar& p) {
  Scalar acc;
  Scalar pw(1);
  for (int i = 0; i < s; ++i) {
    acc += pw;
    pw *= p;
  }
  return acc;
}

Scalar q_binomial(int m, int l, const Scalar& p) {
  if (m < 0 || l < 0 || l > m)
    fail(ErrorKind::Domain, "q_binomial requires 0 <= l <= m (got m=" + std::to_string(m) +
                                ", l=" + std::to_string(l) + ")");
  // row[j] = (i choose j)_p, updated with (i choose j) = (i-1 choose j-1) + p^j (i-1 choose j)
  std::vector<Scalar> row(m + 1);
  row[0] = Scalar(1);
  std::vector<Scalar> ppow(m + 1);
  ppow[0] = Scalar(1);
  for (int j = 1; j <= m; ++j) ppow[j] = ppow[j - 1] * p;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, l); j >= 1; --j) row[j] = row[j - 1] + ppow[j] * row[j];
  }
  return row[l];
}

int multiplicative_order(const Scalar& x, int limit) {
  if (x.is_zero()) return 0;
  Scalar acc = x;
  for (int m = 1; m <= limit; ++m) {
    if (acc.is_one()) return m;
    acc *= x;
  }
  return 0;
}

}  // namespace crossbial
