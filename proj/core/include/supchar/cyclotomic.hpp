#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace supchar {

using Rational = mpq_class;

bool is_odd_prime(long long value);

/// Exact element of the cyclotomic field Q(zeta_p), p an odd prime.
///
/// Stored as p-1 rational coordinates in the basis zeta^0, ..., zeta^(p-2);
/// zeta^(p-1) is always rewritten through 1 + zeta + ... + zeta^(p-1) = 0, so
/// two values are equal exactly when their coordinate vectors are equal.
class CycNumber {
 public:
  /// The zero of Q(zeta_p).
  explicit CycNumber(unsigned prime);

  static CycNumber from_rational(unsigned prime, const Rational& value);
  /// zeta_p^(k mod p); k may be negative.
  static CycNumber root_of_unity(unsigned prime, long long k);
  /// Sum over k of counts[k] * zeta^k; counts must have exactly p entries.
  static CycNumber from_exponent_counts(unsigned prime, std::span<const std::int64_t> counts);
  /// Builds a value from p-1 canonical coordinates.
  static CycNumber from_coeffs(unsigned prime, std::vector<Rational> coeffs);

  unsigned prime() const noexcept { return p_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  /// Complex conjugation, zeta -> zeta^-1.
  CycNumber conjugate() const;
  CycNumber pow(unsigned exponent) const;

  /// Image under zeta -> exp(2 pi i / p). Display only.
  std::complex<double> to_complex() const;
  /// "a0 + a1*z + a2*z^2 ..." with exact rationals; "0" for zero.
  std::string to_literal() const;

  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);
  CycNumber& operator*=(const Rational& scalar);
  CycNumber operator-() const;

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(CycNumber a, const Rational& s) { return a *= s; }
  friend CycNumber operator*(const Rational& s, CycNumber a) { return a *= s; }

  bool operator==(const CycNumber& other) const;

 private:
  CycNumber(unsigned prime, std::vector<Rational> coeffs);
  void require_same_prime(const CycNumber& other) const;
  // Folds a length-p coefficient vector into canonical form.
  static std::vector<Rational> reduce(std::vector<Rational> full);

  unsigned p_;
  std::vector<Rational> c_;
};

enum class CycOp { Add, Sub, Mul };

CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, CycOp op);

/// Element of Z[zeta_p] with machine-integer coordinates in the same basis as
/// CycNumber. Used on hot paths (convolution sums) where every intermediate is
/// an algebraic integer; arithmetic throws std::overflow_error rather than wrap.
class CycInteger {
 public:
  CycInteger() = default;
  explicit CycInteger(unsigned prime) : p_(prime), c_(prime - 1, 0) {}

  /// Fails (std::nullopt) if a coordinate is not an integer or does not fit.
  static std::optional<CycInteger> from(const CycNumber& value);
  CycNumber to_cyc() const;

  unsigned prime() const noexcept { return p_; }
  bool is_zero() const;

  /// this += factor * other
  void add_scaled(const CycInteger& other, std::int64_t factor);
  CycInteger operator*(const CycInteger& other) const;
  bool operator==(const CycInteger& other) const = default;

 private:
  unsigned p_ = 0;
  std::vector<std::int64_t> c_;
};

/// The string "num/den" in lowest terms with den > 0.
std::string rational_to_string(const Rational& value);
Rational parse_rational(const std::string& text);

}  // namespace supchar
