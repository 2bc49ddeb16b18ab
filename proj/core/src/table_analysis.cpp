#include "supchar/table_analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace supchar {

void CheckReport::record(bool ok, const std::string& counterexample) {
  check(ok, [&] { return counterexample; });
}

void CheckReport::merge(const CheckReport& other) {
  instances += other.instances;
  passed += other.passed;
  failed += other.failed;
  if (!first_counterexample && other.first_counterexample) first_counterexample = other.first_counterexample;
  if (other.status == "fail") status = "fail";
}

std::size_t SuperTable::identity_column() const {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].roots.empty()) return k;
  }
  throw std::logic_error("table has no trivial pair");
}

namespace {

mpz_class to_mpz(std::uint64_t v) { return mpz_class(std::to_string(v)); }

CycNumber weighted(const CycNumber& x, const mpz_class& w) { return x * Rational(w); }

}  // namespace

SuperTable build_table(const GroupModel& g, const SuperclassPartition& partition) {
  const Supercharacters S(g);
  const FieldCtx& f = g.field();
  SuperTable t;
  t.family = g.roots().family();
  t.n = g.roots().n();
  t.p = f.p();
  t.e = f.e();
  t.modulus = f.modulus();
  t.group_order = to_mpz(partition.group_order());
  t.pairs = partition.pairs();
  const std::size_t k = t.pairs.size();
  for (auto s : partition.sizes()) t.sizes.push_back(to_mpz(s));
  t.values.assign(k, {});
  for (std::size_t r = 0; r < k; ++r) {
    t.degrees.push_back(S.degree(t.pairs[r]));
    t.values[r].reserve(k);
    for (std::size_t c = 0; c < k; ++c) t.values[r].push_back(S.value(t.pairs[r], t.pairs[c]));
  }
  for (std::size_t r = 0; r < k; ++r) {
    const auto norm = inner_product(t, t.values[r], t.values[r]).as_rational();
    if (!norm || *norm <= 0) throw std::logic_error("supercharacter norm is not a positive rational");
    t.norms.push_back(*norm);
  }
  return t;
}

SuperTable build_table(const GroupModel& g, std::uint64_t max_order) {
  const SuperclassPartition partition(g, enumerate_basic_pairs(g.roots(), g.field()), max_order);
  return build_table(g, partition);
}

CycNumber inner_product(const SuperTable& table, const ClassFunction& f, const ClassFunction& g) {
  if (f.size() != table.dimension() || g.size() != table.dimension()) {
    throw std::invalid_argument("class function length does not match the table");
  }
  CycNumber sum(table.p);
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c].is_zero() || g[c].is_zero()) continue;
    sum += weighted(f[c] * g[c].conjugate(), table.sizes[c]);
  }
  sum *= Rational(mpz_class(1), table.group_order);
  return sum;
}

CheckReport check_orthogonality(const SuperTable& table) {
  CheckReport report;
  report.suite = "orthogonality";
  const std::size_t k = table.dimension();
  const unsigned p = table.p;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      const CycNumber lhs = inner_product(table, table.values[r], table.values[s]);
      const CycNumber rhs = CycNumber::from_rational(p, r == s ? table.norms[r] : Rational(0));
      report.check(lhs == rhs, [&] {
        return "rows " + std::to_string(r) + "," + std::to_string(s) + ": " + lhs.to_literal();
      });
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      CycNumber lhs(p);
      for (std::size_t r = 0; r < k; ++r) {
        const CycNumber& x = table.values[r][c];
        const CycNumber& y = table.values[r][d];
        if (x.is_zero() || y.is_zero()) continue;
        lhs += x * y.conjugate() * (Rational(1) / table.norms[r]);
      }
      const Rational expected = c == d ? Rational(table.group_order, table.sizes[c]) : Rational(0);
      const CycNumber rhs = CycNumber::from_rational(p, expected);
      report.check(lhs == rhs, [&] {
        return "columns " + std::to_string(c) + "," + std::to_string(d) + ": " + lhs.to_literal();
      });
    }
  }
  return report;
}

std::vector<mpz_class> regular_decomposition(const SuperTable& table) {
  std::vector<mpz_class> out;
  for (std::size_t r = 0; r < table.dimension(); ++r) {
    Rational m = Rational(table.degrees[r]) / table.norms[r];
    m.canonicalize();
    if (m.get_den() != 1 || m <= 0) {
      throw std::logic_error("regular-character coefficient " + m.get_str() + " is not a positive integer");
    }
    out.push_back(m.get_num());
  }
  return out;
}

CheckReport check_regular(const SuperTable& table) {
  CheckReport report;
  report.suite = "regular";
  std::vector<mpz_class> coeffs;
  try {
    coeffs = regular_decomposition(table);
  } catch (const std::logic_error& err) {
    report.record(false, err.what());
    return report;
  }
  report.record(true, "");
  const std::size_t id = table.identity_column();
  for (std::size_t c = 0; c < table.dimension(); ++c) {
    CycNumber sum(table.p);
    for (std::size_t r = 0; r < table.dimension(); ++r) sum += weighted(table.values[r][c], coeffs[r]);
    const Rational expected = c == id ? Rational(table.group_order) : Rational(0);
    report.check(sum == CycNumber::from_rational(table.p, expected), [&] {
      return "column " + std::to_string(c) + ": " + sum.to_literal();
    });
  }
  return report;
}

ClassFunction idempotent(const SuperTable& table, std::size_t row) {
  Rational scale = Rational(table.degrees[row]) / (Rational(table.group_order) * table.norms[row]);
  ClassFunction out = table.values.at(row);
  for (auto& v : out) v *= scale;
  return out;
}

ConvolutionAlgebra::ConvolutionAlgebra(const BruteForce& bf, const SuperclassPartition& partition)
    : bf_(bf), partition_(partition) {
  const std::size_t k = partition.pairs().size();
  std::vector<std::optional<std::uint64_t>> member(k);
  for (std::uint64_t code = 0; code < bf.order(); ++code) {
    auto& slot = member[partition.class_of_code(code)];
    if (!slot) slot = code;
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (!member[c]) throw std::logic_error("empty superclass");
    terms_.push_back(count_terms(*member[c]));
  }
}

std::vector<ConvolutionAlgebra::Term> ConvolutionAlgebra::count_terms(std::uint64_t z) const {
  const GroupModel& g = bf_.group();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
  for (std::uint64_t x = 0; x < bf_.order(); ++x) {
    const auto a = static_cast<std::uint32_t>(partition_.class_of_code(x));
    const std::uint64_t y = bf_.code_of(g.mul(bf_.element(z), bf_.inverse(x)));
    const auto b = static_cast<std::uint32_t>(partition_.class_of_code(y));
    ++counts[{a, b}];
  }
  std::vector<Term> out;
  out.reserve(counts.size());
  for (const auto& [ab, n] : counts) out.push_back({ab.first, ab.second, n});
  return out;
}

namespace {

// Common-denominator integer form of a class function; nullopt if a
// coefficient does not fit.
std::optional<std::pair<std::vector<CycInteger>, mpz_class>> integral_form(const ClassFunction& f) {
  mpz_class den = 1;
  for (const auto& v : f) {
    for (const auto& c : v.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<CycInteger> out;
  out.reserve(f.size());
  for (const auto& v : f) {
    auto scaled = CycInteger::from(v * Rational(den));
    if (!scaled) return std::nullopt;
    out.push_back(std::move(*scaled));
  }
  return std::make_pair(std::move(out), den);
}

}  // namespace

ClassFunction ConvolutionAlgebra::convolve(const ClassFunction& f, const ClassFunction& g) const {
  const std::size_t k = terms_.size();
  if (f.size() != k || g.size() != k) throw std::invalid_argument("class function length does not match");
  const unsigned p = f.empty() ? 3 : f.front().prime();
  ClassFunction out;
  out.reserve(k);

  auto fi = integral_form(f);
  auto gi = integral_form(g);
  if (fi && gi) {
    try {
      const Rational scale(mpz_class(1), fi->second * gi->second);
      for (std::size_t c = 0; c < k; ++c) {
        CycInteger acc(p), inner(p);
        std::optional<std::uint32_t> current;
        auto flush = [&] {
          if (current && !inner.is_zero()) acc.add_scaled(fi->first[*current] * inner, 1);
        };
        for (const auto& t : terms_[c]) {
          if (!current || *current != t.a) {
            flush();
            current = t.a;
            inner = CycInteger(p);
          }
          inner.add_scaled(gi->first[t.b], static_cast<std::int64_t>(t.count));
        }
        flush();
        out.push_back(acc.to_cyc() * scale);
      }
      return out;
    } catch (const std::overflow_error&) {
      out.clear();
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    CycNumber acc(p);
    for (const auto& t : terms_[c]) {
      if (f[t.a].is_zero() || g[t.b].is_zero()) continue;
      acc += f[t.a] * g[t.b] * Rational(to_mpz(t.count));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

CheckReport ConvolutionAlgebra::check_closure() const {
  CheckReport report;
  report.suite = "convolution";
  for (std::uint64_t z = 0; z < bf_.order(); ++z) {
    const std::size_t c = partition_.class_of_code(z);
    const auto terms = count_terms(z);
    const bool same = std::equal(terms.begin(), terms.end(), terms_[c].begin(), terms_[c].end(),
                                 [](const Term& x, const Term& y) {
                                   return x.a == y.a && x.b == y.b && x.count == y.count;
                                 });
    report.check(same, [&] { return "class counts differ at element " + std::to_string(z); });
  }
  return report;
}

CheckReport check_convolution(const SuperTable& table, const ConvolutionAlgebra& algebra) {
  CheckReport report;
  report.suite = "convolution";
  const std::size_t k = table.dimension();
  for (std::size_t r = 0; r < k; ++r) {
    const Rational factor = Rational(table.group_order) * table.norms[r] / Rational(table.degrees[r]);
    for (std::size_t s = 0; s < k; ++s) {
      const ClassFunction conv = algebra.convolve(table.values[r], table.values[s]);
      for (std::size_t c = 0; c < k; ++c) {
        const CycNumber expected = r == s ? table.values[r][c] * factor : CycNumber(table.p);
        report.check(conv[c] == expected, [&] {
          return "rows " + std::to_string(r) + "," + std::to_string(s) + " at column " + std::to_string(c) + ": " +
                 conv[c].to_literal();
        });
      }
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    const ClassFunction e = idempotent(table, r);
    const ClassFunction ee = algebra.convolve(e, e);
    for (std::size_t c = 0; c < k; ++c) {
      report.check(ee[c] == e[c], [&] {
        return "idempotent " + std::to_string(r) + " at column " + std::to_string(c) + ": " + ee[c].to_literal();
      });
    }
  }
  return report;
}

}  // namespace supchar
