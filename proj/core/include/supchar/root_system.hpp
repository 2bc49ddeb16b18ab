#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "supchar/finite_field.hpp"

namespace supchar {

/// B = O_{2n+1}, C = Sp_{2n}, D = O_{2n}.
enum class Family { B, C, D };

Family parse_family(const std::string& text);
char family_letter(Family family);

enum class RootKind {
  Minus,  // e_i - e_j
  Plus,   // e_i + e_j
  Long,   // 2 e_i, family C only
  Short,  // e_i, family B only
};

struct Root {
  RootKind kind;
  int i;
  int j;  // 0 for Long and Short

  auto operator<=>(const Root&) const = default;
};

/// Matrix position addressed by signed indices (row, col) in I.
struct Entry {
  int row;
  int col;

  bool operator==(const Entry&) const = default;
};

std::string root_to_string(const Root& root);
Root parse_root(const std::string& text);
std::string entry_to_string(const Entry& entry);

/// Positive roots, entry sets and orderings for one (family, n).
///
/// Indices run over I = {1..n} (+ {0} for B) + {-n..-1}; the mirror order is
/// the listed order and pos() gives the matrix row/column of an index.
class RootSystem {
 public:
  RootSystem(Family family, int n);

  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  /// I in mirror order.
  const std::vector<int>& indices() const noexcept { return indices_; }
  int pos(int index) const;
  int index_at(int position) const { return indices_.at(position); }
  bool mirror_less(int a, int b) const { return pos(a) < pos(b); }
  /// Column-major: (i,j) < (k,l) iff j < l, or j = l and k < i.
  bool entry_less(const Entry& a, const Entry& b) const;

  /// Roots sorted by the entry order of their representative.
  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t root_index(const Root& root) const;
  const Root& root(std::size_t idx) const { return roots_.at(idx); }

  /// E(alpha), representative first.
  const std::vector<Entry>& entries(std::size_t idx) const { return entries_.at(idx); }
  Entry rep(std::size_t idx) const { return entries_.at(idx).front(); }
  /// The root whose entry set contains e, if any.
  std::optional<std::size_t> root_of_entry(const Entry& e) const;
  /// Coefficient of the matrix unit e in the Lie basis element of its root
  /// (+1 on representatives). Zero when e lies in no E(alpha).
  int basis_sign(const Entry& e) const;

  /// E sorted by entry order.
  const std::vector<Entry>& all_entries() const noexcept { return all_entries_; }

  /// The entry set E(D) of a set of roots, sorted by entry order.
  std::vector<Entry> entry_set(const std::vector<std::size_t>& roots) const;
  bool is_basic(const std::vector<std::size_t>& roots) const;
  /// All basic subsets ordered by size, then lexicographically on root index.
  std::vector<std::vector<std::size_t>> basic_subsets() const;

  bool is_long(std::size_t idx) const { return roots_.at(idx).kind == RootKind::Long; }

 private:
  Family family_;
  int n_;
  int m_;
  std::vector<int> indices_;
  std::vector<Root> roots_;
  std::vector<std::vector<Entry>> entries_;
  std::vector<Entry> all_entries_;
  std::vector<int> entry_root_;  // m*m, -1 where no root
  std::vector<int> entry_sign_;  // m*m
};

/// Basic subset (root indices, increasing) with nonzero labels, one per root.
struct BasicPair {
  std::vector<std::size_t> roots;
  std::vector<FieldElement> phi;

  bool operator==(const BasicPair&) const = default;
  bool empty() const { return roots.empty(); }
  /// Label of root idx, or 0 when idx is not in D.
  FieldElement label(std::size_t idx) const;
};

/// Ordered by |D|, then root indices, then labels.
std::vector<BasicPair> enumerate_basic_pairs(const RootSystem& rs, const FieldCtx& ctx);

/// "{e1-e2:1;2e2:2}", "{}" for the empty pair.
std::string pair_to_string(const RootSystem& rs, const BasicPair& pair);

}  // namespace supchar
