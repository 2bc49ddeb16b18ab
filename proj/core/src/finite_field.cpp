#include "supchar/finite_field.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace supchar {

namespace {

constexpr std::uint32_t kTableLimit = 1024;    // q above this: no q*q tables
constexpr std::uint32_t kVectorLimit = 1 << 20; // q above this: no per-element tables

using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime, so a^(p-2)
  unsigned long long result = 1, base = a % p;
  unsigned exp = p - 2;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<unsigned>(result);
}

// r = a mod f over F_p; f nonzero.
Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const unsigned lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const unsigned factor = static_cast<unsigned>(1ULL * a.back() * lead_inv % p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t k = 0; k <= df; ++k) {
      a[shift + k] = static_cast<unsigned>((a[shift + k] + 1ULL * (p - factor) * f[k]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<unsigned>((prod[i + j] + 1ULL * a[i] * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// t^(p^k) mod f by repeated p-th powering.
Poly frobenius_power_of_t(const Poly& f, unsigned p, unsigned k) {
  Poly x = poly_mod(Poly{0, 1}, f, p);
  for (unsigned step = 0; step < k; ++step) {
    Poly result{1};
    Poly base = x;
    unsigned exp = p;
    while (exp > 0) {
      if (exp & 1U) result = poly_mulmod(result, base, f, p);
      base = poly_mulmod(base, base, f, p);
      exp >>= 1U;
    }
    x = std::move(result);
  }
  return x;
}

}  // namespace

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
  Poly f = poly;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  // Ben-Or: f is irreducible iff gcd(t^(p^k) - t, f) = 1 for 1 <= k <= deg/2.
  for (unsigned k = 1; 2 * k <= degree; ++k) {
    Poly g = frobenius_power_of_t(f, p, k);
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    if (poly_gcd(f, g, p).size() != 1) return false;
  }
  return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned e) {
  if (e == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t count = 1;
  for (unsigned k = 0; k < e; ++k) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(e + 1, 0);
    std::uint64_t rest = code;
    for (unsigned k = 0; k < e; ++k) {
      f[k] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldCtx::FieldCtx(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) : p_(p), e_(e) {
  if (p % 2 == 0) throw std::invalid_argument("p must be odd (got " + std::to_string(p) + ")");
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be prime (got " + std::to_string(p) + ")");
  if (e == 0) throw std::invalid_argument("e must be positive");
  std::uint64_t q = 1;
  pow_p_.push_back(1);
  for (unsigned k = 0; k < e; ++k) {
    q *= p;
    if (q > std::numeric_limits<std::int32_t>::max()) throw std::invalid_argument("field too large");
    pow_p_.push_back(static_cast<std::uint32_t>(q));
  }
  q_ = static_cast<std::uint32_t>(q);

  if (modulus) {
    const auto& f = *modulus;
    if (f.size() != e + 1 || f.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(e));
    }
    for (unsigned c : f) {
      if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible(f, p)) throw std::invalid_argument("modulus is not irreducible");
    modulus_ = f;
  } else {
    modulus_ = default_modulus(p, e);
  }

  if (q_ <= kVectorLimit) {
    neg_.resize(q_);
    for (FieldElement a = 0; a < q_; ++a) {
      auto c = coeffs(a);
      for (auto& x : c) x = (p_ - x) % p_;
      neg_[a] = from_coeffs(c);
    }
  }
  if (q_ <= kTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (FieldElement a = 0; a < q_; ++a) {
      const auto ca = coeffs(a);
      for (FieldElement b = 0; b < q_; ++b) {
        const auto cb = coeffs(b);
        std::vector<unsigned> s(e_);
        for (unsigned k = 0; k < e_; ++k) s[k] = (ca[k] + cb[k]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = from_coeffs(s);
        mul_table_[static_cast<std::size_t>(a) * q_ + b] = poly_mul(a, b);
      }
    }
  }
  if (q_ <= kVectorLimit) {
    inv_.assign(q_, 0);
    trace_.assign(q_, 0);
    for (FieldElement a = 1; a < q_; ++a) inv_[a] = pow(a, q_ - 2);
    for (FieldElement a = 0; a < q_; ++a) {
      FieldElement sum = 0, x = a;
      for (unsigned k = 0; k < e_; ++k) {
        sum = add(sum, x);
        x = pow(x, p_);
      }
      trace_[a] = coeffs(sum)[0];
    }
  }
}

void FieldCtx::require_element(FieldElement a) const {
  if (a >= q_) throw std::out_of_range("field element code " + std::to_string(a) + " outside [0, q)");
}

std::vector<unsigned> FieldCtx::coeffs(FieldElement a) const {
  std::vector<unsigned> out(e_);
  for (unsigned k = 0; k < e_; ++k) {
    out[k] = a % p_;
    a /= p_;
  }
  return out;
}

FieldElement FieldCtx::from_coeffs(const std::vector<unsigned>& c) const {
  if (c.size() > e_) throw std::invalid_argument("too many coefficients for field element");
  FieldElement out = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] >= p_) throw std::invalid_argument("coefficient outside [0, p)");
    out = out * p_ + c[k];
  }
  return out;
}

FieldElement FieldCtx::from_int(long long value) const {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<FieldElement>(r);
}

FieldElement FieldCtx::poly_mul(FieldElement a, FieldElement b) const {
  Poly r = poly_mulmod(coeffs(a), coeffs(b), modulus_, p_);
  r.resize(e_, 0);
  return from_coeffs(r);
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  if (e_ == 1) return (a + b) % p_;
  FieldElement out = 0;
  for (unsigned k = e_; k-- > 0;) {
    out = out * p_ + ((a / pow_p_[k]) % p_ + (b / pow_p_[k]) % p_) % p_;
  }
  return out;
}

FieldElement FieldCtx::neg(FieldElement a) const {
  if (!neg_.empty()) return neg_[a];
  auto c = coeffs(a);
  for (auto& x : c) x = (p_ - x) % p_;
  return from_coeffs(c);
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  if (e_ == 1) return static_cast<FieldElement>(1ULL * a * b % p_);
  return poly_mul(a, b);
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t exponent) const {
  FieldElement result = 1, base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a == 0) throw std::domain_error("division by zero in F_q");
  if (!inv_.empty()) return inv_[a];
  return pow(a, q_ - 2);
}

FieldElement FieldCtx::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FieldCtx::arith(FieldElement a, FieldElement b, FieldOp op) const {
  require_element(a);
  require_element(b);
  switch (op) {
    case FieldOp::Add:
      return add(a, b);
    case FieldOp::Sub:
      return sub(a, b);
    case FieldOp::Mul:
      return mul(a, b);
    case FieldOp::Div:
      return div(a, b);
  }
  throw std::invalid_argument("unknown field operation");
}

unsigned FieldCtx::trace(FieldElement a) const {
  require_element(a);
  if (!trace_.empty()) return trace_[a];
  FieldElement sum = 0, x = a;
  for (unsigned k = 0; k < e_; ++k) {
    sum = add(sum, x);
    x = pow(x, p_);
  }
  return coeffs(sum)[0];
}

CycNumber FieldCtx::theta(FieldElement a) const { return CycNumber::root_of_unity(p_, trace(a)); }

int FieldCtx::eta(FieldElement a) const {
  require_element(a);
  if (a == 0) throw std::domain_error("quadratic character is undefined at 0");
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

CycNumber FieldCtx::gauss_sum() const {
  std::vector<std::int64_t> counts(p_, 0);
  for (FieldElement c = 1; c < q_; ++c) counts[trace(c)] += eta(c);
  return CycNumber::from_exponent_counts(p_, counts);
}

QuadraticSum quadratic_sum(const FieldCtx& ctx, FieldElement a2, FieldElement a1, FieldElement a0) {
  if (a2 == 0) throw std::invalid_argument("quadratic_sum: leading coefficient must be nonzero");
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (FieldElement c = 0; c < ctx.q(); ++c) {
    const FieldElement h = ctx.add(ctx.mul(ctx.add(ctx.mul(a2, c), a1), c), a0);
    ++counts[ctx.trace(h)];
  }
  CycNumber brute = CycNumber::from_exponent_counts(ctx.p(), counts);

  const FieldElement four_a2 = ctx.mul(ctx.from_int(4), a2);
  const FieldElement shift = ctx.sub(a0, ctx.div(ctx.mul(a1, a1), four_a2));
  CycNumber closed = ctx.theta(shift) * ctx.gauss_sum() * Rational(ctx.eta(a2));
  return {std::move(brute), std::move(closed)};
}

}  // namespace supchar
