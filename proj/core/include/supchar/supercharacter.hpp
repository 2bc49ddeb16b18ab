#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "supchar/superclass.hpp"

namespace supchar {

/// Closed-form supercharacter values for one group U.
///
/// Rows and columns are both indexed by basic pairs: value(chr, cls) is the
/// value of the supercharacter of chr on the superclass of cls.
class Supercharacters {
 public:
  explicit Supercharacters(const GroupModel& g);

  const GroupModel& group() const noexcept { return g_; }
  const CycNumber& gauss_sum() const noexcept { return gauss_; }

  /// q^k for any integer k.
  Rational q_power(int k) const;

  /// log_q of the degree, i.e. of [U : U_D].
  int degree_exponent(const std::vector<std::size_t>& roots) const;
  mpz_class degree(const BasicPair& pair) const;

  /// E(alpha) is contained in the D'-regular entries.
  bool root_regular(std::size_t root, const std::vector<Entry>& class_entries) const;
  /// |D'(alpha)|: entries (k,l) of D' with i < k < l < j for (i,j) the
  /// representative of alpha.
  int inner_count(std::size_t root, const std::vector<Entry>& class_entries) const;
  /// Long roots 2e_k of the class pair with k > i, for alpha = 2e_i.
  std::vector<std::size_t> inner_long_roots(std::size_t root, const BasicPair& cls) const;

  CycNumber elementary_value(std::size_t root, FieldElement r, const BasicPair& cls) const;
  /// The general closed formula.
  CycNumber value(const BasicPair& chr, const BasicPair& cls) const;
  /// Product of elementary values over the roots of chr.
  CycNumber value_by_factors(const BasicPair& chr, const BasicPair& cls) const;

  /// Value of the elementary character of the full unitriangular group U_m(q)
  /// attached to the entry (i,j) and r, on the superclass of 1 + e_{D,phi}.
  /// Entries here may be any positions above the diagonal.
  CycNumber unitriangular_elementary_value(const Entry& ij, FieldElement r, const EntryPair& D) const;

  /// Long-root value from the coadjoint-orbit sum: q^-(n-i) times the sum over
  /// all c of theta(f_c(a_z)), with f_c paired against a_z entry by entry.
  /// Family C only; throws std::length_error above max_terms summands.
  CycNumber kirillov_value(std::size_t root, FieldElement r, const GroupElement& z,
                           std::uint64_t max_terms = 1000000) const;

 private:
  const GroupModel& g_;
  CycNumber gauss_;
};

}  // namespace supchar
