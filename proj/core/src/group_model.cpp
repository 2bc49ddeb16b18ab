#include "supchar/group_model.hpp"

#include <stdexcept>

namespace supchar {

GroupModel::GroupModel(Family family, int n, FieldCtx ctx) : rs_(family, n), ctx_(std::move(ctx)) {
  half_ = ctx_.inv(ctx_.from_int(2));
  code_limit_ = 1;
  for (std::size_t k = 0; k < rs_.size(); ++k) {
    if (code_limit_ > UINT64_MAX / ctx_.q()) {
      code_limit_ = 0;
      break;
    }
    code_limit_ *= ctx_.q();
  }
}

std::optional<std::uint64_t> GroupModel::order() const {
  if (code_limit_ == 0) return std::nullopt;
  return code_limit_;
}

Matrix GroupModel::identity() const {
  Matrix x(m());
  for (int k = 0; k < m(); ++k) x.at(k, k) = 1;
  return x;
}

Matrix GroupModel::mul(const Matrix& x, const Matrix& y) const {
  const int size = m();
  Matrix out(size);
  for (int r = 0; r < size; ++r) {
    for (int k = 0; k < size; ++k) {
      const FieldElement xv = x.at(r, k);
      if (xv == 0) continue;
      for (int c = 0; c < size; ++c) {
        const FieldElement yv = y.at(k, c);
        if (yv != 0) out.at(r, c) = ctx_.add(out.at(r, c), ctx_.mul(xv, yv));
      }
    }
  }
  return out;
}

Matrix GroupModel::add(const Matrix& x, const Matrix& y) const {
  Matrix out(m());
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] = ctx_.add(x.a[k], y.a[k]);
  return out;
}

Matrix GroupModel::sub(const Matrix& x, const Matrix& y) const {
  Matrix out(m());
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] = ctx_.sub(x.a[k], y.a[k]);
  return out;
}

Matrix GroupModel::scale(const Matrix& x, FieldElement s) const {
  Matrix out(m());
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] = ctx_.mul(x.a[k], s);
  return out;
}

Matrix GroupModel::transpose(const Matrix& x) const {
  Matrix out(m());
  for (int r = 0; r < m(); ++r) {
    for (int c = 0; c < m(); ++c) out.at(c, r) = x.at(r, c);
  }
  return out;
}

namespace {

// Inverse of an upper unitriangular k x k matrix stored densely.
template <class Get>
std::vector<FieldElement> unitri_inverse(const FieldCtx& f, int k, Get get) {
  std::vector<FieldElement> inv(static_cast<std::size_t>(k) * k, 0);
  auto at = [&](int r, int c) -> FieldElement& { return inv[static_cast<std::size_t>(r) * k + c]; };
  for (int c = 0; c < k; ++c) {
    at(c, c) = 1;
    for (int r = c - 1; r >= 0; --r) {
      FieldElement s = 0;
      for (int l = r + 1; l <= c; ++l) {
        const FieldElement g = get(r, l);
        if (g != 0 && at(l, c) != 0) s = f.add(s, f.mul(g, at(l, c)));
      }
      at(r, c) = f.neg(s);
    }
  }
  return inv;
}

}  // namespace

Matrix GroupModel::unitriangular_inverse(const Matrix& x) const {
  const auto inv = unitri_inverse(ctx_, m(), [&](int r, int c) { return x.at(r, c); });
  Matrix out(m());
  out.a = inv;
  return out;
}

LieElement GroupModel::lie_basis(std::size_t root) const {
  Matrix a(m());
  for (const auto& e : rs_.entries(root)) {
    set(a, e, ctx_.from_int(rs_.basis_sign(e)));
  }
  return a;
}

LieElement GroupModel::lie_from_coords(const Coords& coords) const {
  if (coords.size() != rs_.size()) throw std::invalid_argument("coordinate vector has wrong length");
  Matrix a(m());
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    const FieldElement c = coords[idx];
    if (c == 0) continue;
    for (const auto& e : rs_.entries(idx)) {
      const FieldElement v = rs_.basis_sign(e) > 0 ? c : ctx_.neg(c);
      set(a, e, v);
    }
  }
  return a;
}

Coords GroupModel::coords_of(const LieElement& a) const {
  Coords out(rs_.size());
  for (std::size_t idx = 0; idx < rs_.size(); ++idx) out[idx] = get(a, rs_.rep(idx));
  return out;
}

std::optional<std::string> GroupModel::lie_violation(const LieElement& a) const {
  if (a.m != m()) return "matrix has size " + std::to_string(a.m) + ", expected " + std::to_string(m());
  for (int r = 0; r < m(); ++r) {
    for (int c = 0; c <= r; ++c) {
      if (a.at(r, c) != 0) {
        return "entry " + entry_to_string({rs_.index_at(r), rs_.index_at(c)}) + " must vanish (not strictly upper)";
      }
    }
  }
  const Matrix expected = lie_from_coords(coords_of(a));
  for (int r = 0; r < m(); ++r) {
    for (int c = r + 1; c < m(); ++c) {
      if (a.at(r, c) != expected.at(r, c)) {
        return "entry " + entry_to_string({rs_.index_at(r), rs_.index_at(c)}) +
               " violates the Lie algebra block conditions";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> GroupModel::group_violation(const GroupElement& z) const {
  const int size = m();
  if (z.m != size) return "matrix has size " + std::to_string(z.m) + ", expected " + std::to_string(size);
  for (FieldElement v : z.a) {
    if (v >= ctx_.q()) return "entry value " + std::to_string(v) + " is not a field element code";
  }
  for (int r = 0; r < size; ++r) {
    if (z.at(r, r) != 1) return "diagonal entry at row " + std::to_string(rs_.index_at(r)) + " is not 1";
    for (int c = 0; c < r; ++c) {
      if (z.at(r, c) != 0) {
        return "entry " + entry_to_string({rs_.index_at(r), rs_.index_at(c)}) + " below the diagonal is nonzero";
      }
    }
  }
  const int n = rs_.n();
  const int low = size - n;  // first bottom-block position
  const bool odd = rs_.family() == Family::B;
  const auto xinv = unitri_inverse(ctx_, n, [&](int r, int c) { return z.at(r, c); });
  auto xi = [&](int r, int c) { return xinv[static_cast<std::size_t>(r) * n + c]; };

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (z.at(low + a, low + b) != xi(n - 1 - b, n - 1 - a)) {
        return std::string("bottom-right block is not J x^-T J");
      }
    }
  }
  std::vector<FieldElement> u(n, 0);
  if (odd) {
    for (int a = 0; a < n; ++a) {
      FieldElement s = 0;
      for (int k = a; k < n; ++k) s = ctx_.add(s, ctx_.mul(xi(a, k), z.at(k, n)));
      u[a] = s;
    }
    for (int b = 0; b < n; ++b) {
      if (z.at(n, low + b) != ctx_.neg(u[n - 1 - b])) return std::string("middle row is not -u^T J");
    }
  }
  std::vector<FieldElement> w(static_cast<std::size_t>(n) * n, 0);
  auto wz = [&](int r, int c) -> FieldElement& { return w[static_cast<std::size_t>(r) * n + c]; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      FieldElement s = 0;
      for (int k = a; k < n; ++k) s = ctx_.add(s, ctx_.mul(xi(a, k), z.at(k, low + b)));
      wz(a, b) = s;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const FieldElement jzt = wz(b, n - 1 - a);
      const FieldElement zj = wz(a, n - 1 - b);
      switch (rs_.family()) {
        case Family::C:
          if (jzt != zj) return std::string("top-right block violates J z^T - z J = 0");
          break;
        case Family::D:
          if (ctx_.add(jzt, zj) != 0) return std::string("top-right block violates J z^T + z J = 0");
          break;
        case Family::B:
          if (ctx_.add(jzt, zj) != ctx_.neg(ctx_.mul(u[a], u[b]))) {
            return std::string("top-right block violates J z^T + z J = -u u^T");
          }
          break;
      }
    }
  }
  return std::nullopt;
}

GroupElement GroupModel::group_from_lie(const LieElement& a) const {
  const int size = m();
  const int n = rs_.n();
  const int low = size - n;
  const bool odd = rs_.family() == Family::B;
  GroupElement z(size);
  for (int k = 0; k < size; ++k) z.at(k, k) = 1;
  // x = 1 + u
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) z.at(r, c) = a.at(r, c);
  }
  std::vector<FieldElement> v(n, 0);
  if (odd) {
    for (int r = 0; r < n; ++r) v[r] = a.at(r, n);
  }
  std::vector<FieldElement> w(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      FieldElement val = a.at(r, low + c);
      if (odd) val = ctx_.sub(val, ctx_.mul(half_, ctx_.mul(v[r], v[n - 1 - c])));
      w[static_cast<std::size_t>(r) * n + c] = val;
    }
  }
  for (int r = 0; r < n; ++r) {
    if (odd) {
      FieldElement s = 0;
      for (int k = r; k < n; ++k) s = ctx_.add(s, ctx_.mul(z.at(r, k), v[k]));
      z.at(r, n) = s;
    }
    for (int c = 0; c < n; ++c) {
      FieldElement s = 0;
      for (int k = r; k < n; ++k) s = ctx_.add(s, ctx_.mul(z.at(r, k), w[static_cast<std::size_t>(k) * n + c]));
      z.at(r, low + c) = s;
    }
  }
  if (odd) {
    for (int c = 0; c < n; ++c) z.at(n, low + c) = ctx_.neg(v[n - 1 - c]);
  }
  const auto xinv = unitri_inverse(ctx_, n, [&](int r, int c) { return z.at(r, c); });
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      z.at(low + r, low + c) = xinv[static_cast<std::size_t>(n - 1 - c) * n + (n - 1 - r)];
    }
  }
  return z;
}

LieElement GroupModel::lie_from_group(const GroupElement& z) const {
  const int size = m();
  const int n = rs_.n();
  const int low = size - n;
  const bool odd = rs_.family() == Family::B;
  const auto xinv = unitri_inverse(ctx_, n, [&](int r, int c) { return z.at(r, c); });
  auto xi = [&](int r, int c) { return xinv[static_cast<std::size_t>(r) * n + c]; };
  LieElement a(size);
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) a.at(r, c) = z.at(r, c);
  }
  std::vector<FieldElement> v(n, 0);
  if (odd) {
    for (int r = 0; r < n; ++r) {
      FieldElement s = 0;
      for (int k = r; k < n; ++k) s = ctx_.add(s, ctx_.mul(xi(r, k), z.at(k, n)));
      v[r] = s;
      a.at(r, n) = s;
    }
    for (int c = 0; c < n; ++c) a.at(n, low + c) = ctx_.neg(v[n - 1 - c]);
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      FieldElement s = 0;
      for (int k = r; k < n; ++k) s = ctx_.add(s, ctx_.mul(xi(r, k), z.at(k, low + c)));
      if (odd) s = ctx_.add(s, ctx_.mul(half_, ctx_.mul(v[r], v[n - 1 - c])));
      a.at(r, low + c) = s;
    }
  }
  // bottom-right block -J u^T J
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const FieldElement ut = a.at(n - 1 - c, n - 1 - r);
      a.at(low + r, low + c) = ctx_.neg(ut);
    }
  }
  return a;
}

GroupElement GroupModel::group_mul(const GroupElement& x, const GroupElement& y) const { return mul(x, y); }

GroupElement GroupModel::group_inv(const GroupElement& z) const { return unitriangular_inverse(z); }

GroupElement GroupModel::conjugate(const GroupElement& x, const GroupElement& z) const {
  return mul(mul(x, z), unitriangular_inverse(x));
}

std::uint64_t GroupModel::coords_code(const Coords& coords) const {
  if (code_limit_ == 0) throw std::overflow_error("group too large for 64-bit element codes");
  std::uint64_t code = 0;
  for (std::size_t k = coords.size(); k-- > 0;) code = code * ctx_.q() + coords[k];
  return code;
}

Coords GroupModel::coords_from_code(std::uint64_t code) const {
  Coords out(rs_.size());
  for (auto& c : out) {
    c = static_cast<FieldElement>(code % ctx_.q());
    code /= ctx_.q();
  }
  return out;
}

std::uint64_t GroupModel::rep_entry_code(const GroupElement& z) const {
  if (code_limit_ == 0) throw std::overflow_error("group too large for 64-bit element codes");
  std::uint64_t code = 0;
  for (std::size_t k = rs_.size(); k-- > 0;) code = code * ctx_.q() + get(z, rs_.rep(k));
  return code;
}

std::vector<Entry> GroupModel::u_alpha_constraints(std::size_t root) const {
  const Root& r = rs_.root(root);
  const int n = rs_.n();
  std::vector<Entry> out;
  switch (r.kind) {
    case RootKind::Minus:
      for (int k = r.i + 1; k < r.j; ++k) out.push_back({r.i, k});
      break;
    case RootKind::Plus:
      for (int k = r.i + 1; k <= n; ++k) out.push_back({r.i, k});
      for (int l = r.j + 1; l <= n; ++l) out.push_back({r.j, l});
      if (rs_.family() == Family::B) out.push_back({r.j, 0});
      break;
    case RootKind::Long:
    case RootKind::Short:
      for (int k = r.i + 1; k <= n; ++k) out.push_back({r.i, k});
      break;
  }
  return out;
}

bool GroupModel::in_U_alpha(std::size_t root, const GroupElement& z) const {
  for (const auto& e : u_alpha_constraints(root)) {
    if (get(z, e) != 0) return false;
  }
  return true;
}

bool GroupModel::in_U_D(const std::vector<std::size_t>& roots, const GroupElement& z) const {
  for (auto idx : roots) {
    if (!in_U_alpha(idx, z)) return false;
  }
  return true;
}

int GroupModel::index_exponent(const std::vector<std::size_t>& roots) const {
  std::vector<bool> hit(static_cast<std::size_t>(m()) * m(), false);
  int count = 0;
  for (auto idx : roots) {
    for (const auto& e : u_alpha_constraints(idx)) {
      const std::size_t cell = static_cast<std::size_t>(rs_.pos(e.row)) * m() + rs_.pos(e.col);
      if (!hit[cell]) {
        hit[cell] = true;
        ++count;
      }
    }
  }
  return count;
}

unsigned GroupModel::lambda_exponent(const BasicPair& pair, const GroupElement& z) const {
  if (!in_U_D(pair.roots, z)) throw std::invalid_argument("lambda: element is not in U_D");
  unsigned k = 0;
  for (std::size_t s = 0; s < pair.roots.size(); ++s) {
    k += ctx_.trace(ctx_.mul(pair.phi[s], get(z, rs_.rep(pair.roots[s]))));
  }
  return k % ctx_.p();
}

CycNumber GroupModel::lambda_value(const BasicPair& pair, const GroupElement& z) const {
  return CycNumber::root_of_unity(ctx_.p(), lambda_exponent(pair, z));
}

}  // namespace supchar
