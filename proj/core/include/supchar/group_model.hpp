#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supchar/cyclotomic.hpp"
#include "supchar/finite_field.hpp"
#include "supchar/root_system.hpp"

namespace supchar {

/// Dense m x m matrix over F_q; row/column k is the k-th index of I in mirror
/// order. Used both for group elements of U and for elements of its Lie
/// algebra.
struct Matrix {
  int m = 0;
  std::vector<FieldElement> a;

  Matrix() = default;
  explicit Matrix(int size) : m(size), a(static_cast<std::size_t>(size) * size, 0) {}

  FieldElement& at(int r, int c) { return a[static_cast<std::size_t>(r) * m + c]; }
  FieldElement at(int r, int c) const { return a[static_cast<std::size_t>(r) * m + c]; }

  bool operator==(const Matrix&) const = default;
};

using GroupElement = Matrix;
using LieElement = Matrix;

/// Coordinates in the basis e_alpha, indexed like RootSystem::roots().
using Coords = std::vector<FieldElement>;

/// The group U and its Lie algebra for one (family, n, F_q).
///
/// The bijection z <-> a_z is the block map x = 1 + u, z = (x, xv, xw). For
/// the odd orthogonal family the w block additionally carries the quadratic
/// correction -1/2 v v^T J, which is what makes the image satisfy the group
/// equations while the Lie side stays linear.
class GroupModel {
 public:
  GroupModel(Family family, int n, FieldCtx ctx);

  const RootSystem& roots() const noexcept { return rs_; }
  const FieldCtx& field() const noexcept { return ctx_; }
  int m() const noexcept { return rs_.m(); }
  std::size_t rank() const noexcept { return rs_.size(); }
  /// |U| = q^|Phi|, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;

  FieldElement get(const Matrix& x, const Entry& e) const { return x.at(rs_.pos(e.row), rs_.pos(e.col)); }
  void set(Matrix& x, const Entry& e, FieldElement v) const { x.at(rs_.pos(e.row), rs_.pos(e.col)) = v; }

  Matrix identity() const;
  Matrix zero() const { return Matrix(m()); }
  Matrix mul(const Matrix& x, const Matrix& y) const;
  Matrix add(const Matrix& x, const Matrix& y) const;
  Matrix sub(const Matrix& x, const Matrix& y) const;
  Matrix scale(const Matrix& x, FieldElement s) const;
  Matrix transpose(const Matrix& x) const;
  /// Inverse of an upper unitriangular matrix.
  Matrix unitriangular_inverse(const Matrix& x) const;

  LieElement lie_basis(std::size_t root) const;
  LieElement lie_from_coords(const Coords& coords) const;
  /// Values at the E^+ representatives; the inverse of lie_from_coords on the
  /// Lie algebra.
  Coords coords_of(const LieElement& a) const;

  /// nullopt if a lies in the Lie algebra, otherwise the violated condition.
  std::optional<std::string> lie_violation(const LieElement& a) const;
  /// nullopt if z lies in U, otherwise the violated block condition.
  std::optional<std::string> group_violation(const GroupElement& z) const;

  GroupElement group_from_lie(const LieElement& a) const;
  LieElement lie_from_group(const GroupElement& z) const;
  GroupElement group_from_coords(const Coords& coords) const { return group_from_lie(lie_from_coords(coords)); }

  GroupElement group_mul(const GroupElement& x, const GroupElement& y) const;
  GroupElement group_inv(const GroupElement& z) const;
  GroupElement conjugate(const GroupElement& x, const GroupElement& z) const;

  /// Digits of coords in base q, root 0 least significant.
  std::uint64_t coords_code(const Coords& coords) const;
  Coords coords_from_code(std::uint64_t code) const;
  /// Same packing applied to the entries of z at the E^+ representatives.
  std::uint64_t rep_entry_code(const GroupElement& z) const;

  /// Row i entries fixed to zero by U_alpha.
  std::vector<Entry> u_alpha_constraints(std::size_t root) const;
  bool in_U_alpha(std::size_t root, const GroupElement& z) const;
  bool in_U_D(const std::vector<std::size_t>& roots, const GroupElement& z) const;
  /// log_q [U : U_D], the number of constrained entries.
  int index_exponent(const std::vector<std::size_t>& roots) const;

  /// Exponent k with lambda_{D,phi}(z) = zeta_p^k; z must lie in U_D.
  unsigned lambda_exponent(const BasicPair& pair, const GroupElement& z) const;
  CycNumber lambda_value(const BasicPair& pair, const GroupElement& z) const;

 private:
  RootSystem rs_;
  FieldCtx ctx_;
  FieldElement half_;
  std::uint64_t code_limit_;
};

}  // namespace supchar
