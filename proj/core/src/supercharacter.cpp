#include "supchar/supercharacter.hpp"

#include <stdexcept>

namespace supchar {

Supercharacters::Supercharacters(const GroupModel& g) : g_(g), gauss_(g.field().gauss_sum()) {}

Rational Supercharacters::q_power(int k) const {
  mpz_class base = g_.field().q();
  mpz_class value;
  mpz_pow_ui(value.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(mpz_class(1), value) : Rational(value);
}

int Supercharacters::degree_exponent(const std::vector<std::size_t>& roots) const {
  return g_.index_exponent(roots);
}

mpz_class Supercharacters::degree(const BasicPair& pair) const {
  return q_power(degree_exponent(pair.roots)).get_num();
}

bool Supercharacters::root_regular(std::size_t root, const std::vector<Entry>& class_entries) const {
  const RootSystem& rs = g_.roots();
  bool all = true, any = false;
  for (const auto& e : rs.entries(root)) {
    const bool reg = !is_singular(rs, class_entries, e);
    all = all && reg;
    any = any || reg;
  }
  if (all != any) throw std::logic_error("regularity differs between mirrored entries");
  return all;
}

int Supercharacters::inner_count(std::size_t root, const std::vector<Entry>& class_entries) const {
  const RootSystem& rs = g_.roots();
  const Entry ij = rs.rep(root);
  int t = 0;
  for (const auto& e : class_entries) {
    if (rs.mirror_less(ij.row, e.row) && rs.mirror_less(e.row, e.col) && rs.mirror_less(e.col, ij.col)) ++t;
  }
  return t;
}

std::vector<std::size_t> Supercharacters::inner_long_roots(std::size_t root, const BasicPair& cls) const {
  const RootSystem& rs = g_.roots();
  const int i = rs.root(root).i;
  std::vector<std::size_t> out;
  for (auto beta : cls.roots) {
    const Root& b = rs.root(beta);
    if (b.kind == RootKind::Long && b.i > i) out.push_back(beta);
  }
  return out;
}

CycNumber Supercharacters::elementary_value(std::size_t root, FieldElement r, const BasicPair& cls) const {
  if (r == 0) throw std::invalid_argument("elementary character label must be nonzero");
  const FieldCtx& f = g_.field();
  const unsigned p = f.p();
  const EntryPair class_entries = entry_pair(g_, cls);
  if (!root_regular(root, class_entries.entries)) return CycNumber(p);

  const int t = inner_count(root, class_entries.entries);
  CycNumber value = CycNumber::from_rational(p, q_power(degree_exponent({root}) - t));
  if (g_.roots().is_long(root)) {
    const auto inner = inner_long_roots(root, cls);
    const int t0 = static_cast<int>(inner.size());
    if ((t - t0) % 2 != 0) throw std::logic_error("inner count and long-root count differ in parity");
    int sign = 1;
    for (auto beta : inner) sign *= f.eta(f.div(cls.label(beta), r));
    value *= q_power((t - t0) / 2) * Rational(sign);
    value *= gauss_.pow(static_cast<unsigned>(t0));
  }
  const FieldElement label = cls.label(root);
  if (label != 0) value *= f.theta(f.mul(r, label));
  return value;
}

CycNumber Supercharacters::value(const BasicPair& chr, const BasicPair& cls) const {
  const FieldCtx& f = g_.field();
  const unsigned p = f.p();
  const EntryPair class_entries = entry_pair(g_, cls);
  for (auto alpha : chr.roots) {
    if (!root_regular(alpha, class_entries.entries)) return CycNumber(p);
  }
  int t = 0, t_long = 0, t0 = 0, sign = 1;
  std::int64_t theta_exp = 0;
  for (std::size_t s = 0; s < chr.roots.size(); ++s) {
    const std::size_t alpha = chr.roots[s];
    const int ta = inner_count(alpha, class_entries.entries);
    t += ta;
    if (g_.roots().is_long(alpha)) {
      t_long += ta;
      for (auto beta : inner_long_roots(alpha, cls)) {
        ++t0;
        sign *= f.eta(f.div(cls.label(beta), chr.phi[s]));
      }
    }
    const FieldElement label = cls.label(alpha);
    if (label != 0) theta_exp += f.trace(f.mul(chr.phi[s], label));
  }
  if ((t_long - t0) % 2 != 0) throw std::logic_error("long-root inner counts have odd excess");
  const Rational scalar = q_power(degree_exponent(chr.roots) - t + (t_long - t0) / 2) * Rational(sign);
  CycNumber value = CycNumber::root_of_unity(p, theta_exp) * scalar;
  if (t0 > 0) value *= gauss_.pow(static_cast<unsigned>(t0));
  return value;
}

CycNumber Supercharacters::value_by_factors(const BasicPair& chr, const BasicPair& cls) const {
  CycNumber value = CycNumber::from_rational(g_.field().p(), 1);
  for (std::size_t s = 0; s < chr.roots.size(); ++s) {
    value *= elementary_value(chr.roots[s], chr.phi[s], cls);
    if (value.is_zero()) break;
  }
  return value;
}

CycNumber Supercharacters::unitriangular_elementary_value(const Entry& ij, FieldElement r, const EntryPair& D) const {
  if (r == 0) throw std::invalid_argument("elementary character label must be nonzero");
  const RootSystem& rs = g_.roots();
  const FieldCtx& f = g_.field();
  if (!rs.mirror_less(ij.row, ij.col)) throw std::invalid_argument("entry is not above the diagonal");
  for (const auto& d : D.entries) {
    if (d.row == ij.row && rs.mirror_less(d.col, ij.col)) return CycNumber(f.p());
    if (d.col == ij.col && rs.mirror_less(ij.row, d.row)) return CycNumber(f.p());
  }
  int t = 0;
  for (const auto& d : D.entries) {
    if (rs.mirror_less(ij.row, d.row) && rs.mirror_less(d.row, d.col) && rs.mirror_less(d.col, ij.col)) ++t;
  }
  const int between = rs.pos(ij.col) - rs.pos(ij.row) - 1;
  CycNumber value = CycNumber::from_rational(f.p(), q_power(between - t));
  const FieldElement label = D.value_at(ij);
  if (label != 0) value *= f.theta(f.mul(r, label));
  return value;
}

CycNumber Supercharacters::kirillov_value(std::size_t root, FieldElement r, const GroupElement& z,
                                          std::uint64_t max_terms) const {
  const RootSystem& rs = g_.roots();
  const FieldCtx& f = g_.field();
  if (rs.family() != Family::C || !rs.is_long(root)) {
    throw std::invalid_argument("coadjoint-orbit values are defined for long roots of family C");
  }
  if (r == 0) throw std::invalid_argument("elementary character label must be nonzero");
  const int i = rs.root(root).i;
  const int lo = rs.pos(i), hi = rs.pos(-i);
  const int k = hi - lo - 1;  // 2(n - i) free coordinates c_a, i < a < -i
  std::uint64_t terms = 1;
  for (int s = 0; s < k; ++s) {
    if (terms > max_terms / f.q()) throw std::length_error("coadjoint-orbit sum exceeds the term bound");
    terms *= f.q();
  }
  const LieElement a = g_.lie_from_group(z);
  const FieldElement r_inv = f.inv(r);
  // slot s <-> index at position lo + 1 + s
  std::vector<int> sign(k);
  std::vector<int> mirror_slot(k);
  for (int s = 0; s < k; ++s) {
    const int idx = rs.index_at(lo + 1 + s);
    sign[s] = idx > 0 ? 1 : -1;
    mirror_slot[s] = rs.pos(-idx) - lo - 1;
  }
  const FieldElement base = f.mul(r, a.at(lo, hi));
  std::vector<FieldElement> c(k, 0);
  std::vector<FieldElement> col(k);  // F_{a,-i} = sign(a) c_{-a}
  std::vector<std::int64_t> counts(f.p(), 0);
  for (std::uint64_t term = 0; term < terms; ++term) {
    for (int s = 0; s < k; ++s) {
      const FieldElement cm = c[mirror_slot[s]];
      col[s] = sign[s] > 0 ? cm : f.neg(cm);
    }
    FieldElement total = base;
    for (int s = 0; s < k; ++s) {
      total = f.add(total, f.mul(c[s], a.at(lo, lo + 1 + s)));
      total = f.add(total, f.mul(col[s], a.at(lo + 1 + s, hi)));
    }
    FieldElement inner = 0;
    for (int x = 0; x < k; ++x) {
      if (col[x] == 0) continue;
      for (int y = x + 1; y < k; ++y) {
        const FieldElement v = a.at(lo + 1 + x, lo + 1 + y);
        if (v != 0 && c[y] != 0) inner = f.add(inner, f.mul(f.mul(col[x], c[y]), v));
      }
    }
    total = f.add(total, f.mul(r_inv, inner));
    ++counts[f.trace(total)];
    for (int s = 0; s < k; ++s) {
      if (++c[s] < f.q()) break;
      c[s] = 0;
    }
  }
  return CycNumber::from_exponent_counts(f.p(), counts) * q_power(-(k / 2));
}

}  // namespace supchar
