#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "supchar/oracle.hpp"
#include "supchar/supercharacter.hpp"

namespace supchar {

/// Outcome of one family of identity checks.
struct CheckReport {
  std::string suite;
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_counterexample;
  /// "pass", "fail" or "skipped"
  std::string status = "pass";
  std::string note;

  void record(bool ok, const std::string& counterexample);
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++instances;
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    status = "fail";
    if (!first_counterexample) first_counterexample = describe();
  }
  void merge(const CheckReport& other);
  bool ok() const noexcept { return status != "fail"; }
};

/// A class function as its values on the superclasses, in table column order.
using ClassFunction = std::vector<CycNumber>;

/// The supercharacter table: rows and columns both follow enumerate_basic_pairs.
struct SuperTable {
  Family family = Family::C;
  int n = 0;
  unsigned p = 0;
  unsigned e = 0;
  std::vector<unsigned> modulus;
  mpz_class group_order;
  std::vector<BasicPair> pairs;
  std::vector<mpz_class> sizes;
  std::vector<mpz_class> degrees;
  std::vector<Rational> norms;
  /// values[row][col] = xi_row(z_col)
  std::vector<std::vector<CycNumber>> values;

  std::size_t dimension() const noexcept { return pairs.size(); }
  /// Column of the trivial pair (the identity superclass).
  std::size_t identity_column() const;
};

/// Sizes from a full classification of U (bounded by max_order), values from
/// the closed formula, norms from the weighted class sums.
SuperTable build_table(const GroupModel& g, const SuperclassPartition& partition);
SuperTable build_table(const GroupModel& g, std::uint64_t max_order);

/// (1/|U|) sum over classes of |K| f conj(g).
CycNumber inner_product(const SuperTable& table, const ClassFunction& f, const ClassFunction& g);

/// Rows pairwise (first relation) and columns pairwise (second relation).
CheckReport check_orthogonality(const SuperTable& table);

/// xi(1)/<xi,xi> per row; throws std::logic_error if one is not a positive integer.
std::vector<mpz_class> regular_decomposition(const SuperTable& table);
/// The combination above is |U| at the identity and 0 on every other class.
CheckReport check_regular(const SuperTable& table);

/// The idempotent (xi(1) / (|U| <xi,xi>)) xi of a row.
ClassFunction idempotent(const SuperTable& table, std::size_t row);

/// Class multiplication counts: for each superclass c and a fixed member z_c,
/// the number of x in U with x in K_a and z_c x^-1 in K_b, stored sparsely.
class ConvolutionAlgebra {
 public:
  struct Term {
    std::uint32_t a;
    std::uint32_t b;
    std::uint64_t count;
  };

  ConvolutionAlgebra(const BruteForce& bf, const SuperclassPartition& partition);

  std::size_t dimension() const noexcept { return terms_.size(); }
  /// (f * g)(z) = sum over x in U of f(x) g(z x^-1), for superclass functions.
  ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) const;

  /// Checks that the counts do not depend on the chosen member of each
  /// superclass, i.e. that superclass functions are closed under convolution.
  /// Costs |U|^2 group products.
  CheckReport check_closure() const;

 private:
  const BruteForce& bf_;
  const SuperclassPartition& partition_;
  std::vector<std::vector<Term>> terms_;

  std::vector<Term> count_terms(std::uint64_t z) const;
};

/// xi * xi' = delta (|U| <xi,xi> / xi(1)) xi for all row pairs, and the
/// idempotents satisfy e * e = e.
CheckReport check_convolution(const SuperTable& table, const ConvolutionAlgebra& algebra);

}  // namespace supchar
