#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "crossbial/error.hpp"
#include "crossbial/scalar.hpp"
#include "support.hpp"

using namespace crossbial;
using testing_support::gauss_binomial;
using testing_support::random_rational;
using testing_support::random_scalar;

namespace {

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace

TEST(Rational, NormalizesSignAndLowestTerms) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "-7", "22/7", "-1/3", "123456789012345678901234567891/2"})
    EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* s : {"1/0", "", "abc", "1/", "/2", "1.5", "2/x"}) {
    try {
      Rational::parse(s);
      ADD_FAILURE() << "accepted '" << s << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << s;
    }
  }
}

TEST(Rational, SpillsToArbitraryPrecisionAndMatchesGmp) {
  std::mt19937 rng(11);
  Rational x(1);
  mpq_class oracle(1);
  for (int i = 0; i < 40; ++i) {
    const long long a = static_cast<long long>(rng() % 2000000000) + 1, b = static_cast<long long>(rng() % 999983) + 1;
    x = x * Rational(a, b) + Rational(1, 3);
    oracle = oracle * mpq_class(mpz_class(std::to_string(a)), mpz_class(std::to_string(b))) + mpq_class(1, 3);
    oracle.canonicalize();
    ASSERT_EQ(x.to_mpq(), oracle);
  }
  Rational y = x;
  for (int i = 0; i < 40; ++i) y = y - x * Rational(1, 40);
  EXPECT_TRUE(y.is_zero());
}

TEST(Rational, FieldPropertiesOnRandomValues) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng, 50), b = random_rational(rng, 50), c = random_rational(rng, 50);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rational(1));
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  }
}

TEST(Cyclotomic, EulerPhiAndPolynomials) {
  for (int n = 1; n <= 30; ++n) {
    int count = 0;
    for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, count) << n;
  }
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
}

TEST(Cyclotomic, SumOfPrimitiveRootsIsMobius) {
  for (int n = 2; n <= 24; ++n) {
    Scalar s(0);
    for (int k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) s += root_of_unity(n, k);
    EXPECT_EQ(s, Scalar(mobius(n))) << n;
  }
}

TEST(Cyclotomic, RootsHaveExactOrder) {
  for (int n : {2, 3, 4, 5, 6, 8, 12}) {
    const Scalar z = root_of_unity(n, 1);
    EXPECT_EQ(z.pow(n), Scalar(1));
    EXPECT_EQ(multiplicative_order(z), n);
    EXPECT_EQ(z.pow(-1), z.pow(n - 1));
    EXPECT_EQ(z * z.inverse(), Scalar(1));
  }
  EXPECT_EQ(root_of_unity(4, 1).pow(2), Scalar(-1));
  EXPECT_TRUE(root_of_unity(4, 1).pow(2).is_rational());
}

TEST(Cyclotomic, FieldPropertiesOnRandomValues) {
  std::mt19937 rng(5);
  for (int n : {3, 5, 8, 12}) {
    for (int i = 0; i < 40; ++i) {
      Scalar a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + (-a), Scalar(0));
      if (!a.is_zero()) EXPECT_EQ((a * b) / a, b);
    }
  }
}

TEST(QBinomial, MatchesPascalRecursion) {
  for (int n : {2, 3, 4, 6}) {
    const Scalar q = root_of_unity(n, 1);
    for (int m = 0; m <= 6; ++m)
      for (int l = 0; l <= m; ++l) EXPECT_EQ(q_binomial(m, l, q), gauss_binomial(m, l, q)) << m << " " << l;
  }
  EXPECT_EQ(q_binomial(5, 2, Scalar(1)), Scalar(10));
}

TEST(QBinomial, VanishesAtTheOrderOfQ) {
  for (int n : {2, 3, 4, 5}) {
    const Scalar q = root_of_unity(n, 1);
    EXPECT_TRUE(q_integer(n, q).is_zero());
    for (int l = 1; l < n; ++l) EXPECT_TRUE(q_binomial(n, l, q).is_zero()) << n << " " << l;
  }
}

TEST(Scalar, RootOfUnityRejectsNonPrimitiveExponent) {
  EXPECT_THROW(root_of_unity(4, 2), Error);
}
