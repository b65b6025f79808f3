#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace crossbial {

// Exact rational. Values that fit in int64 stay inline; larger ones spill
// into a shared GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  std::size_t hash() const;

 private:
  static Rational from_wide(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

// An element of Q or of the cyclotomic field Q(zeta_n), kept in the power
// basis 1, z, ..., z^{phi(n)-1}. Elements whose non-constant coordinates
// vanish are stored as plain rationals, so comparisons between fields of
// different conductor only fail for genuinely irrational operands.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : r_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)

  static Scalar cyclotomic(int n, std::vector<Rational> coeffs);

  bool is_rational() const { return !cyc_; }
  bool is_zero() const { return !cyc_ && r_.is_zero(); }
  bool is_one() const { return !cyc_ && r_.is_one(); }

  // Conductor of the ambient field; 1 for rationals.
  int conductor() const;
  // Power-basis coordinates (length phi(conductor)).
  std::vector<Rational> coeffs() const;
  const Rational& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  std::string str() const;
  std::size_t hash() const;

 private:
  struct Cyc {
    int n;
    std::vector<Rational> c;
  };
  static Scalar make(int n, std::vector<Rational> c);

  Rational r_;
  std::shared_ptr<const Cyc> cyc_;
};

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic_polynomial(int n);

Scalar root_of_unity(int n, long long k);
Scalar q_binomial(int m, int l, const Scalar& p);
// (s)_p = 1 + p + ... + p^{s-1}
Scalar q_integer(int s, const Scalar& p);
// Least m > 0 with x^m = 1, or 0 if there is none up to `limit`.
int multiplicative_order(const Scalar& x, int limit = 1024);

}  // namespace crossbial
