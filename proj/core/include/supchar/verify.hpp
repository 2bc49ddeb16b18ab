#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supchar/table_analysis.hpp"

namespace supchar {

/// Suite names in their canonical run order.
const std::vector<std::string>& suite_names();
/// Splits "a,b" and expands "all"; throws std::invalid_argument on an unknown name.
std::vector<std::string> parse_suites(const std::string& text);

struct VerifyOptions {
  /// Suites needing all of U in memory are skipped above this order.
  std::uint64_t max_group_order = 10000;
  std::uint32_t seed = 20240601;
  /// Random (u, D, entry) draws for the mirrored-minor law.
  int mirror_samples = 500;
  /// Random triples per field for the quadratic sums when q exceeds 5.
  int gauss_samples = 100;
  /// Element-by-element closure of convolution costs |U|^2 products.
  std::uint64_t max_closure_order = 2000;
};

/// Runs verification suites against one group, building the brute-force
/// ingredients on first use.
class Verifier {
 public:
  Verifier(const GroupModel& g, VerifyOptions options = {});
  ~Verifier();

  CheckReport run(const std::string& suite);
  std::vector<CheckReport> run_all(const std::vector<std::string>& suites);

  CheckReport partition();
  CheckReport counting();
  CheckReport degrees();
  CheckReport values();
  CheckReport kirillov();
  CheckReport factorization();
  CheckReport orthogonality();
  CheckReport convolution();
  CheckReport regular();
  CheckReport structural();
  CheckReport gauss();

  bool enumerable() const;
  const SuperclassPartition& superclasses();
  const BruteForce& brute_force();
  const SuperTable& table();

 private:
  const GroupModel& g_;
  VerifyOptions opt_;
  std::vector<BasicPair> pairs_;
  std::unique_ptr<SuperclassPartition> partition_;
  std::unique_ptr<BruteForce> bf_;
  std::unique_ptr<SuperTable> table_;

  CheckReport skipped(const std::string& suite) const;
};

}  // namespace supchar
