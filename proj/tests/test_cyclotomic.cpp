#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "supchar/cyclotomic.hpp"

using namespace supchar;

namespace {

CycNumber random_cyc(unsigned p, std::mt19937& rng) {
  std::vector<Rational> c(p - 1);
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 4));
  return CycNumber::from_coeffs(p, c);
}

void expect_close(std::complex<double> a, std::complex<double> b) {
  EXPECT_NEAR(a.real(), b.real(), 1e-9);
  EXPECT_NEAR(a.imag(), b.imag(), 1e-9);
}

}  // namespace

TEST(Cyclotomic, PrimeValidation) {
  EXPECT_THROW(CycNumber(2), std::invalid_argument);
  EXPECT_THROW(CycNumber(9), std::invalid_argument);
  EXPECT_NO_THROW(CycNumber(7));
  EXPECT_TRUE(is_odd_prime(3));
  EXPECT_FALSE(is_odd_prime(1));
  EXPECT_FALSE(is_odd_prime(15));
}

TEST(Cyclotomic, RootsOfUnitySumToZero) {
  for (unsigned p : {3U, 5U, 7U, 11U}) {
    CycNumber sum(p);
    for (unsigned k = 0; k < p; ++k) sum += CycNumber::root_of_unity(p, k);
    EXPECT_TRUE(sum.is_zero()) << p;
  }
}

TEST(Cyclotomic, RootOfUnityArithmetic) {
  const unsigned p = 7;
  for (int a = -8; a < 8; ++a) {
    for (int b = 0; b < 7; ++b) {
      EXPECT_EQ(CycNumber::root_of_unity(p, a) * CycNumber::root_of_unity(p, b), CycNumber::root_of_unity(p, a + b));
    }
    EXPECT_EQ(CycNumber::root_of_unity(p, a).conjugate(), CycNumber::root_of_unity(p, -a));
  }
  EXPECT_EQ(CycNumber::root_of_unity(p, 1).pow(7), CycNumber::from_rational(p, 1));
}

TEST(Cyclotomic, MatchesComplexEmbedding) {
  std::mt19937 rng(5);
  for (unsigned p : {3U, 5U, 7U}) {
    for (int trial = 0; trial < 50; ++trial) {
      const CycNumber a = random_cyc(p, rng), b = random_cyc(p, rng);
      expect_close((a * b).to_complex(), a.to_complex() * b.to_complex());
      expect_close((a + b).to_complex(), a.to_complex() + b.to_complex());
      expect_close((a - b).to_complex(), a.to_complex() - b.to_complex());
      expect_close(a.conjugate().to_complex(), std::conj(a.to_complex()));
    }
  }
}

TEST(Cyclotomic, ExactEqualityIgnoresRationalForm) {
  CycNumber a = CycNumber::from_rational(5, 1);
  CycNumber b = CycNumber::from_rational(5, 3);
  b *= Rational(mpz_class(3), mpz_class(9));
  EXPECT_EQ(a, b);
}

TEST(Cyclotomic, ExponentCounts) {
  // Counts (2, 1, 0, 0, 1) mean 2 + z + z^4.
  const std::vector<std::int64_t> counts{2, 1, 0, 0, 1};
  const CycNumber x = CycNumber::from_exponent_counts(5, counts);
  const CycNumber expected = CycNumber::from_rational(5, 2) + CycNumber::root_of_unity(5, 1) +
                             CycNumber::root_of_unity(5, 4);
  EXPECT_EQ(x, expected);
  // All-equal counts vanish.
  const std::vector<std::int64_t> flat(5, 3);
  EXPECT_TRUE(CycNumber::from_exponent_counts(5, flat).is_zero());
}

TEST(Cyclotomic, AsRational) {
  EXPECT_EQ(CycNumber::from_rational(3, Rational(7, 2)).as_rational(), Rational(7, 2));
  EXPECT_FALSE(CycNumber::root_of_unity(3, 1).as_rational().has_value());
  // 1 + z + z^2 = 0 at p = 3, so z + z^2 = -1 is rational.
  EXPECT_EQ((CycNumber::root_of_unity(3, 1) + CycNumber::root_of_unity(3, 2)).as_rational(), Rational(-1));
}

TEST(Cyclotomic, Literal) {
  EXPECT_EQ(CycNumber(5).to_literal(), "0");
  EXPECT_EQ(CycNumber::from_rational(5, Rational(-3, 2)).to_literal(), "-3/2");
  const CycNumber x = CycNumber::from_coeffs(5, {Rational(1), Rational(0), Rational(-2), Rational(1, 3)});
  EXPECT_EQ(x.to_literal(), "1 - 2*z^2 + 1/3*z^3");
  EXPECT_EQ(CycNumber::root_of_unity(5, 1).to_literal(), "z");
}

TEST(Cyclotomic, MismatchedPrimesThrow) {
  EXPECT_THROW(CycNumber(3) + CycNumber(5), std::invalid_argument);
}

TEST(Cyclotomic, CycIntegerAgreesWithCycNumber) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> a(6), b(6);
    for (auto& x : a) x = static_cast<long>(rng() % 21) - 10;
    for (auto& x : b) x = static_cast<long>(rng() % 21) - 10;
    const CycNumber ca = CycNumber::from_coeffs(7, a), cb = CycNumber::from_coeffs(7, b);
    auto ia = CycInteger::from(ca), ib = CycInteger::from(cb);
    ASSERT_TRUE(ia && ib);
    EXPECT_EQ((*ia * *ib).to_cyc(), ca * cb);
    CycInteger acc = *ia;
    acc.add_scaled(*ib, -3);
    EXPECT_EQ(acc.to_cyc(), ca - cb * Rational(3));
  }
  EXPECT_FALSE(CycInteger::from(CycNumber::from_rational(3, Rational(1, 2))).has_value());
}

TEST(Cyclotomic, CycIntegerOverflowThrows) {
  CycInteger big = *CycInteger::from(CycNumber::from_rational(3, Rational(mpz_class("4000000000000000000"))));
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Cyclotomic, RationalText) {
  EXPECT_EQ(rational_to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(rational_to_string(Rational(-5)), "-5/1");
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}
