#include "supchar/cyclotomic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace supchar {

bool is_odd_prime(long long value) {
  if (value < 3 || value % 2 == 0) return false;
  for (long long d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

namespace {

void require_odd_prime(unsigned prime) {
  if (!is_odd_prime(prime)) {
    throw std::invalid_argument("cyclotomic: " + std::to_string(prime) + " is not an odd prime");
  }
}

unsigned mod_exp(long long k, unsigned p) {
  long long r = k % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<unsigned>(r);
}

}  // namespace

CycNumber::CycNumber(unsigned prime) : p_(prime) {
  require_odd_prime(prime);
  c_.assign(prime - 1, Rational(0));
}

CycNumber::CycNumber(unsigned prime, std::vector<Rational> coeffs) : p_(prime), c_(std::move(coeffs)) {}

std::vector<Rational> CycNumber::reduce(std::vector<Rational> full) {
  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  const Rational top = full.back();
  full.pop_back();
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

CycNumber CycNumber::from_rational(unsigned prime, const Rational& value) {
  CycNumber out(prime);
  out.c_[0] = value;
  out.c_[0].canonicalize();
  return out;
}

CycNumber CycNumber::root_of_unity(unsigned prime, long long k) {
  require_odd_prime(prime);
  std::vector<Rational> full(prime, Rational(0));
  full[mod_exp(k, prime)] = 1;
  return CycNumber(prime, reduce(std::move(full)));
}

CycNumber CycNumber::from_exponent_counts(unsigned prime, std::span<const std::int64_t> counts) {
  require_odd_prime(prime);
  if (counts.size() != prime) {
    throw std::invalid_argument("cyclotomic: exponent count vector must have p entries");
  }
  std::vector<Rational> out(prime - 1);
  const std::int64_t top = counts[prime - 1];
  for (unsigned k = 0; k + 1 < prime; ++k) {
    out[k] = Rational(static_cast<long>(counts[k] - top));
  }
  return CycNumber(prime, std::move(out));
}

CycNumber CycNumber::from_coeffs(unsigned prime, std::vector<Rational> coeffs) {
  require_odd_prime(prime);
  if (coeffs.size() != prime - 1) {
    throw std::invalid_argument("cyclotomic: expected p-1 coefficients");
  }
  for (auto& c : coeffs) c.canonicalize();
  return CycNumber(prime, std::move(coeffs));
}

bool CycNumber::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> CycNumber::as_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] != 0) return std::nullopt;
  }
  return c_[0];
}

CycNumber CycNumber::conjugate() const {
  std::vector<Rational> full(p_, Rational(0));
  full[0] = c_[0];
  for (unsigned k = 1; k + 1 < p_; ++k) full[p_ - k] = c_[k];
  return CycNumber(p_, reduce(std::move(full)));
}

CycNumber CycNumber::pow(unsigned exponent) const {
  CycNumber result = from_rational(p_, 1);
  CycNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> sum = 0;
  for (unsigned k = 0; k + 1 < p_; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / p_;
    sum += c_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string CycNumber::to_literal() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k + 1 < p_; ++k) {
    if (c_[k] == 0) continue;
    Rational mag = abs(c_[k]);
    const bool neg = sgn(c_[k]) < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

void CycNumber::require_same_prime(const CycNumber& other) const {
  if (p_ != other.p_) {
    throw std::invalid_argument("cyclotomic: mismatched primes " + std::to_string(p_) + " and " +
                                std::to_string(other.p_));
  }
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  require_same_prime(other);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += other.c_[k];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) {
  require_same_prime(other);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= other.c_[k];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  *this = *this * other;
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& scalar) {
  Rational s = scalar;
  s.canonicalize();
  for (auto& c : c_) c *= s;
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.require_same_prime(b);
  const unsigned p = a.p_;
  std::vector<Rational> full(p, Rational(0));
  Rational term;
  for (unsigned i = 0; i + 1 < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j + 1 < p; ++j) {
      if (b.c_[j] == 0) continue;
      unsigned k = i + j;
      if (k >= p) k -= p;
      term = a.c_[i] * b.c_[j];
      full[k] += term;
    }
  }
  return CycNumber(p, CycNumber::reduce(std::move(full)));
}

bool CycNumber::operator==(const CycNumber& other) const {
  return p_ == other.p_ && c_ == other.c_;
}

CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, CycOp op) {
  switch (op) {
    case CycOp::Add:
      return a + b;
    case CycOp::Sub:
      return a - b;
    case CycOp::Mul:
      return a * b;
  }
  throw std::invalid_argument("cyclotomic: unknown operation");
}

std::optional<CycInteger> CycInteger::from(const CycNumber& value) {
  CycInteger out(value.prime());
  for (std::size_t k = 0; k < value.coeffs().size(); ++k) {
    const Rational& c = value.coeffs()[k];
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
    out.c_[k] = c.get_num().get_si();
  }
  return out;
}

CycNumber CycInteger::to_cyc() const {
  std::vector<Rational> coeffs(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) coeffs[k] = Rational(static_cast<long>(c_[k]));
  return CycNumber::from_coeffs(p_, std::move(coeffs));
}

bool CycInteger::is_zero() const {
  for (auto c : c_) {
    if (c != 0) return false;
  }
  return true;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycInteger overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycInteger overflow");
  return r;
}

}  // namespace

void CycInteger::add_scaled(const CycInteger& other, std::int64_t factor) {
  if (p_ != other.p_) throw std::invalid_argument("CycInteger: mismatched primes");
  if (factor == 0) return;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (other.c_[k] != 0) c_[k] = checked_add(c_[k], checked_mul(other.c_[k], factor));
  }
}

CycInteger CycInteger::operator*(const CycInteger& other) const {
  if (p_ != other.p_) throw std::invalid_argument("CycInteger: mismatched primes");
  std::vector<std::int64_t> full(p_, 0);
  for (unsigned i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j + 1 < p_; ++j) {
      if (other.c_[j] == 0) continue;
      unsigned k = i + j;
      if (k >= p_) k -= p_;
      full[k] = checked_add(full[k], checked_mul(c_[i], other.c_[j]));
    }
  }
  CycInteger out(p_);
  for (unsigned k = 0; k + 1 < p_; ++k) out.c_[k] = checked_add(full[k], -full[p_ - 1]);
  return out;
}

std::string rational_to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational out;
  if (out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
  out.canonicalize();
  return out;
}

}  // namespace supchar
