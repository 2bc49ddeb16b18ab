#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "supchar/superclass.hpp"

namespace supchar {

/// The whole group U held in memory, with conjugacy classes and direct
/// induction. Elements are addressed by their coordinate code (see
/// GroupModel::coords_code).
class BruteForce {
 public:
  /// Throws std::length_error if |U| exceeds max_order.
  BruteForce(const GroupModel& g, std::uint64_t max_order);

  const GroupModel& group() const noexcept { return g_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  const GroupElement& element(std::uint64_t code) const { return elements_.at(code); }
  const GroupElement& inverse(std::uint64_t code) const { return inverses_.at(code); }
  /// Code of an arbitrary element of U; throws std::out_of_range otherwise.
  std::uint64_t code_of(const GroupElement& z) const;
  std::uint64_t product(std::uint64_t x, std::uint64_t y) const;

  /// Conjugacy classes, closed under the generators 1 + s e_alpha.
  std::size_t class_count() const noexcept { return class_members_.size(); }
  std::size_t conj_class_of(std::uint64_t code) const { return conj_class_[code]; }
  const std::vector<std::uint64_t>& conj_class(std::size_t cls) const { return class_members_.at(cls); }
  /// Orbit of one element under conjugation by every element of U.
  std::vector<std::uint64_t> full_conjugation_orbit(std::uint64_t code) const;

  /// |U_D| by counting members.
  std::uint64_t subgroup_order(const std::vector<std::size_t>& roots) const;

  /// (1/|U_D|) sum over x in U of lambda'(x g x^-1), lambda' the extension by
  /// zero of lambda_{D,phi}.
  CycNumber induce_literal(const BasicPair& pair, std::uint64_t code) const;
  /// The same induced character on every conjugacy class, computed from the
  /// class sums |U| / (|U_D| |cl(g)|) sum over h in cl(g) of lambda'(h).
  std::vector<CycNumber> induce_on_classes(const BasicPair& pair) const;

 private:
  const GroupModel& g_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> inverses_;
  std::unordered_map<std::uint64_t, std::uint64_t> by_rep_code_;
  std::vector<std::uint32_t> conj_class_;
  std::vector<std::vector<std::uint64_t>> class_members_;
};

/// The unique basic pair for U_m(q) whose two-sided orbit contains a, found
/// by Gaussian-style reduction under (x, y) . a = x a y^-1 on the full
/// strictly upper triangular matrix. Entries are returned in column order.
EntryPair reduce_two_sided(const GroupModel& g, Matrix a);

/// Converts an entry-level pair into a root-level pair; nullopt if the entry
/// set is not E(D) for a basic D or labels disagree with e_{D,phi}.
std::optional<BasicPair> root_pair_of(const GroupModel& g, const EntryPair& pair);

/// Every basic pair whose membership test accepts a.
std::vector<BasicPair> classify_exhaustive(const GroupModel& g, const LieElement& a,
                                           const std::vector<BasicPair>& pairs);

}  // namespace supchar
