#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "supchar/group_model.hpp"

namespace supchar {

/// Labeled basic subset of matrix entries.
struct EntryPair {
  std::vector<Entry> entries;
  std::vector<FieldElement> values;

  FieldElement value_at(const Entry& e) const;
  bool contains(const Entry& e) const;
};

/// E(D) with the labels of e_{D,phi}, i.e. phi(alpha) times the basis sign.
EntryPair entry_pair(const GroupModel& g, const BasicPair& pair);
LieElement pair_element(const GroupModel& g, const BasicPair& pair);

/// D(i,j): entries (k,l) of D with i < k and l < j, sorted by column.
std::vector<Entry> minor_support(const RootSystem& rs, const std::vector<Entry>& D, const Entry& ij);

/// The bordered minor: row i and the rows of D(i,j) (in mirror order) against
/// the columns of D(i,j) (in mirror order) followed by column j.
FieldElement delta_minor(const GroupModel& g, const std::vector<Entry>& D, const Entry& ij, const Matrix& u);

/// (-1)^t sgn(sigma) prod phi(i_s, j_s), the factor relating phi(i,j) to the
/// minor of e_{D,phi} at a D entry.
FieldElement minor_factor(const GroupModel& g, const EntryPair& D, const Entry& ij);

struct RegularSplit {
  std::vector<Entry> regular;
  std::vector<Entry> singular;
};

/// Partition of E into D-regular and D-singular entries, each in entry order.
RegularSplit regular_entries(const RootSystem& rs, const std::vector<Entry>& D);
bool is_singular(const RootSystem& rs, const std::vector<Entry>& D, const Entry& e);

/// Orbit membership test: every D-regular minor of a equals that of e_{D,phi}.
bool membership(const GroupModel& g, const BasicPair& pair, const LieElement& a);

/// The unique basic pair whose orbit contains a, found by a single scan of the
/// E^+ entries in entry order. Throws std::logic_error if the result fails the
/// membership test.
BasicPair classify(const GroupModel& g, const LieElement& a);
BasicPair superclass_of(const GroupModel& g, const GroupElement& z);

/// z_{D,phi}.
GroupElement representative(const GroupModel& g, const BasicPair& pair);

/// The exponent r of the mirrored minor law Delta_{i,j} = (-1)^(r+1) Delta_{-j,-i},
/// following the three-way case split on family and the sign of j. For family C
/// with j negative the count includes the entries of D(i,j) with both indices
/// negative, not only those with both positive.
int mirror_minor_exponent(const GroupModel& g, const std::vector<Entry>& D, const Entry& ij);

/// Classification of every element of U.
class SuperclassPartition {
 public:
  /// Throws std::length_error if |U| exceeds max_order.
  SuperclassPartition(const GroupModel& g, std::vector<BasicPair> pairs, std::uint64_t max_order);

  const std::vector<BasicPair>& pairs() const noexcept { return pairs_; }
  std::uint64_t group_order() const noexcept { return order_; }
  /// Superclass index of the element with coordinate code `code`.
  std::size_t class_of_code(std::uint64_t code) const { return class_of_[code]; }
  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }
  std::size_t index_of(const BasicPair& pair) const;
  /// Coordinate codes of the members of one superclass.
  std::vector<std::uint64_t> members(std::size_t cls) const;

 private:
  std::vector<BasicPair> pairs_;
  std::map<std::pair<std::vector<std::size_t>, std::vector<FieldElement>>, std::size_t> lookup_;
  std::uint64_t order_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint64_t> sizes_;
};

}  // namespace supchar
