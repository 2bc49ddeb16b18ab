#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "supchar/cyclotomic.hpp"

namespace supchar {

/// Canonical integer code sum c_i p^i of a field element, in [0, q).
using FieldElement = std::uint32_t;

enum class FieldOp { Add, Sub, Mul, Div };

/// F_q = F_p[t]/(f) for an odd prime p and a monic irreducible f of degree e.
///
/// Arithmetic is table driven when q is small and falls back to polynomial
/// arithmetic otherwise. The additive character is fixed as
/// theta(a) = zeta_p^Tr(a).
class FieldCtx {
 public:
  /// modulus, when given, lists e+1 coefficients low degree first and must be
  /// monic and irreducible. Without it the smallest monic irreducible (read as
  /// a base-p integer, low degree first) is used.
  FieldCtx(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  std::vector<unsigned> coeffs(FieldElement a) const;
  FieldElement from_coeffs(const std::vector<unsigned>& coeffs) const;
  /// The image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(long long value) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t exponent) const;
  FieldElement arith(FieldElement a, FieldElement b, FieldOp op) const;

  /// Absolute trace to F_p, returned as an integer in [0, p).
  unsigned trace(FieldElement a) const;
  /// theta(a) = zeta_p^Tr(a).
  CycNumber theta(FieldElement a) const;
  /// Quadratic character on F_q^x; throws on 0.
  int eta(FieldElement a) const;
  /// G(eta, theta) = sum over c != 0 of eta(c) theta(c).
  CycNumber gauss_sum() const;

  bool operator==(const FieldCtx& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  FieldElement poly_mul(FieldElement a, FieldElement b) const;
  void require_element(FieldElement a) const;

  unsigned p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pow_p_;
  // Dense tables, filled only for small q.
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> trace_;
};

/// True iff the monic polynomial (coefficients low degree first) is
/// irreducible over F_p.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

/// Smallest monic irreducible of degree e over F_p, in the base-p order.
std::vector<unsigned> default_modulus(unsigned p, unsigned e);

struct QuadraticSum {
  CycNumber brute_force;
  CycNumber closed_form;
};

/// Sum over c in F_q of theta(a2 c^2 + a1 c + a0), computed both by direct
/// summation and as theta(a0 - a1^2/(4 a2)) eta(a2) G(eta, theta).
QuadraticSum quadratic_sum(const FieldCtx& ctx, FieldElement a2, FieldElement a1, FieldElement a0);

}  // namespace supchar
