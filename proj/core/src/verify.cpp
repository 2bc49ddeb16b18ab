#include "supchar/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace supchar {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"partition",    "counting",      "degrees",     "values",
                                                 "kirillov",     "factorization", "orthogonality",
                                                 "convolution",  "regular",       "structural",  "gauss"};
  return names;
}

std::vector<std::string> parse_suites(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& name : suite_names()) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
      }
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end()) {
      throw std::invalid_argument("unknown suite '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("no suite requested");
  return out;
}

Verifier::Verifier(const GroupModel& g, VerifyOptions options)
    : g_(g), opt_(options), pairs_(enumerate_basic_pairs(g.roots(), g.field())) {}

Verifier::~Verifier() = default;

bool Verifier::enumerable() const {
  const auto order = g_.order();
  return order && *order <= opt_.max_group_order;
}

const SuperclassPartition& Verifier::superclasses() {
  if (!partition_) partition_ = std::make_unique<SuperclassPartition>(g_, pairs_, opt_.max_group_order);
  return *partition_;
}

const BruteForce& Verifier::brute_force() {
  if (!bf_) bf_ = std::make_unique<BruteForce>(g_, opt_.max_group_order);
  return *bf_;
}

const SuperTable& Verifier::table() {
  if (!table_) table_ = std::make_unique<SuperTable>(build_table(g_, superclasses()));
  return *table_;
}

CheckReport Verifier::skipped(const std::string& suite) const {
  CheckReport r;
  r.suite = suite;
  r.status = "skipped";
  r.note = "skipped (bound): |U| exceeds --max-group-order " + std::to_string(opt_.max_group_order);
  return r;
}

CheckReport Verifier::run(const std::string& suite) {
  if (suite == "partition") return partition();
  if (suite == "counting") return counting();
  if (suite == "degrees") return degrees();
  if (suite == "values") return values();
  if (suite == "kirillov") return kirillov();
  if (suite == "factorization") return factorization();
  if (suite == "orthogonality") return orthogonality();
  if (suite == "convolution") return convolution();
  if (suite == "regular") return regular();
  if (suite == "structural") return structural();
  if (suite == "gauss") return gauss();
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<CheckReport> Verifier::run_all(const std::vector<std::string>& suites) {
  std::vector<CheckReport> out;
  for (const auto& s : suites) out.push_back(run(s));
  return out;
}

namespace {

std::string describe(const GroupModel& g, const BasicPair& pair) { return pair_to_string(g.roots(), pair); }

bool same_pair(const BasicPair& a, const BasicPair& b) { return a.roots == b.roots && a.phi == b.phi; }

std::string element_text(const GroupModel& g, std::uint64_t code) {
  std::ostringstream os;
  os << "element " << code << " (coords";
  for (auto c : g.coords_from_code(code)) os << ' ' << c;
  os << ')';
  return os.str();
}

}  // namespace

CheckReport Verifier::partition() {
  if (!enumerable()) return skipped("partition");
  CheckReport r;
  r.suite = "partition";
  const auto& part = superclasses();
  const auto& bf = brute_force();
  for (std::uint64_t code = 0; code < part.group_order(); ++code) {
    const BasicPair& cls = part.pairs()[part.class_of_code(code)];
    const LieElement a = g_.lie_from_coords(g_.coords_from_code(code));
    const auto accepted = classify_exhaustive(g_, a, pairs_);
    r.check(accepted.size() == 1 && same_pair(accepted.front(), cls), [&] {
      return element_text(g_, code) + ": scan gives " + describe(g_, cls) + ", " +
             std::to_string(accepted.size()) + " pairs accept it";
    });
    const auto reduced = root_pair_of(g_, reduce_two_sided(g_, a));
    r.check(reduced && same_pair(*reduced, cls), [&] {
      return element_text(g_, code) + ": two-sided reduction disagrees with " + describe(g_, cls);
    });
  }
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < part.sizes().size(); ++k) {
    total += part.sizes()[k];
    r.check(part.sizes()[k] > 0, [&] { return "empty superclass " + describe(g_, part.pairs()[k]); });
  }
  r.check(total == part.group_order(), [&] { return "sizes sum to " + std::to_string(total); });
  // Every conjugacy class lies inside one superclass.
  for (std::size_t c = 0; c < bf.class_count(); ++c) {
    const auto& members = bf.conj_class(c);
    const std::size_t k = part.class_of_code(members.front());
    const bool inside = std::all_of(members.begin(), members.end(),
                                    [&](std::uint64_t x) { return part.class_of_code(x) == k; });
    r.check(inside, [&] { return "conjugacy class " + std::to_string(c) + " meets two superclasses"; });
  }
  return r;
}

CheckReport Verifier::counting() {
  CheckReport r;
  r.suite = "counting";
  const RootSystem& rs = g_.roots();
  const std::size_t rank = rs.size();
  if (rank > 24) {
    r.status = "skipped";
    r.note = "skipped (bound): too many roots for subset enumeration";
    return r;
  }
  // Independent count: every root subset whose entries use each row and each
  // column at most once contributes (q-1)^|D| pairs.
  mpz_class expected = 0;
  std::uint64_t subsets = 0;
  const mpz_class q1 = g_.field().q() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank); ++mask) {
    std::set<int> rows, cols;
    bool basic = true;
    int size = 0;
    for (std::size_t idx = 0; idx < rank && basic; ++idx) {
      if (!(mask >> idx & 1U)) continue;
      ++size;
      for (const auto& e : rs.entries(idx)) {
        if (!rows.insert(e.row).second || !cols.insert(e.col).second) basic = false;
      }
    }
    if (!basic) continue;
    ++subsets;
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), q1.get_mpz_t(), static_cast<unsigned long>(size));
    expected += term;
  }
  r.check(rs.basic_subsets().size() == subsets, [&] {
    return std::to_string(rs.basic_subsets().size()) + " basic subsets, oracle counts " + std::to_string(subsets);
  });
  r.check(mpz_class(std::to_string(pairs_.size())) == expected, [&] {
    return std::to_string(pairs_.size()) + " basic pairs, oracle counts " + expected.get_str();
  });
  if (enumerable()) {
    const auto& part = superclasses();
    const auto nonempty = std::count_if(part.sizes().begin(), part.sizes().end(), [](auto s) { return s > 0; });
    r.check(static_cast<std::size_t>(nonempty) == pairs_.size(), [&] {
      return std::to_string(nonempty) + " nonempty superclasses for " + std::to_string(pairs_.size()) + " pairs";
    });
  } else {
    r.note = "superclass count not enumerated (bound)";
  }
  return r;
}

CheckReport Verifier::degrees() {
  CheckReport r;
  r.suite = "degrees";
  const Supercharacters S(g_);
  const BruteForce* bf = enumerable() ? &brute_force() : nullptr;
  for (const auto& pair : pairs_) {
    const mpz_class d = S.degree(pair);
    mpz_class product = 1;
    for (auto alpha : pair.roots) product *= S.degree(BasicPair{{alpha}, {1}});
    r.check(d == product, [&] { return describe(g_, pair) + ": degree " + d.get_str() + " vs " + product.get_str(); });
    if (bf) {
      const mpz_class index = mpz_class(std::to_string(bf->order() / bf->subgroup_order(pair.roots)));
      r.check(d == index, [&] { return describe(g_, pair) + ": degree " + d.get_str() + " vs index " + index.get_str(); });
    }
  }
  if (!bf) r.note = "subgroup indices not enumerated (bound)";
  return r;
}

CheckReport Verifier::values() {
  if (!enumerable()) return skipped("values");
  CheckReport r;
  r.suite = "values";
  const Supercharacters S(g_);
  const auto& part = superclasses();
  const auto& bf = brute_force();
  for (const auto& chr : pairs_) {
    const auto induced = bf.induce_on_classes(chr);
    std::vector<CycNumber> closed;
    closed.reserve(pairs_.size());
    for (const auto& cls : pairs_) closed.push_back(S.value(chr, cls));
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const CycNumber by_factors = S.value_by_factors(chr, pairs_[k]);
      r.check(by_factors == closed[k], [&] {
        return describe(g_, chr) + " on " + describe(g_, pairs_[k]) + ": product of elementary values " +
               by_factors.to_literal() + " vs " + closed[k].to_literal();
      });
    }
    // Pointwise: the induced value at each element equals the closed form at
    // its superclass, which also shows constancy on superclasses.
    for (std::uint64_t code = 0; code < bf.order(); ++code) {
      const CycNumber& got = induced[bf.conj_class_of(code)];
      const CycNumber& want = closed[part.class_of_code(code)];
      r.check(got == want, [&] {
        return describe(g_, chr) + " at " + element_text(g_, code) + ": induced " + got.to_literal() +
               ", closed form " + want.to_literal();
      });
    }
  }
  // Non-long roots restrict from the unitriangular group.
  const RootSystem& rs = g_.roots();
  const FieldCtx& f = g_.field();
  for (std::size_t alpha = 0; alpha < rs.size(); ++alpha) {
    if (rs.is_long(alpha)) continue;
    for (FieldElement s = 1; s < f.q(); ++s) {
      for (const auto& cls : pairs_) {
        const CycNumber a = S.elementary_value(alpha, s, cls);
        const CycNumber b = S.unitriangular_elementary_value(rs.rep(alpha), s, entry_pair(g_, cls));
        r.check(a == b, [&] {
          return root_to_string(rs.root(alpha)) + " on " + describe(g_, cls) + ": " + a.to_literal() +
                 " vs unitriangular " + b.to_literal();
        });
      }
    }
  }
  return r;
}

CheckReport Verifier::kirillov() {
  CheckReport r;
  r.suite = "kirillov";
  if (g_.roots().family() != Family::C) {
    r.status = "skipped";
    r.note = "no long roots in this family";
    return r;
  }
  if (!enumerable()) return skipped("kirillov");
  const Supercharacters S(g_);
  const auto& part = superclasses();
  const auto& bf = brute_force();
  const RootSystem& rs = g_.roots();
  for (std::size_t alpha = 0; alpha < rs.size(); ++alpha) {
    if (!rs.is_long(alpha)) continue;
    for (FieldElement s = 1; s < g_.field().q(); ++s) {
      const BasicPair chr{{alpha}, {s}};
      const auto induced = bf.induce_on_classes(chr);
      for (std::uint64_t code = 0; code < bf.order(); ++code) {
        const CycNumber orbit_sum = S.kirillov_value(alpha, s, bf.element(code));
        const CycNumber closed = S.elementary_value(alpha, s, part.pairs()[part.class_of_code(code)]);
        const CycNumber& direct = induced[bf.conj_class_of(code)];
        r.check(orbit_sum == closed && closed == direct, [&] {
          return describe(g_, chr) + " at " + element_text(g_, code) + ": orbit sum " + orbit_sum.to_literal() +
                 ", closed form " + closed.to_literal() + ", induced " + direct.to_literal();
        });
      }
    }
  }
  return r;
}

namespace {

std::vector<std::uint64_t> product_set(const BruteForce& bf, const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b) {
  std::unordered_set<std::uint64_t> seen;
  for (auto x : a) {
    for (auto y : b) seen.insert(bf.product(x, y));
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CheckReport Verifier::factorization() {
  if (!enumerable()) return skipped("factorization");
  CheckReport r;
  r.suite = "factorization";
  const auto& part = superclasses();
  const auto& bf = brute_force();
  const std::uint64_t identity = g_.coords_code(Coords(g_.rank(), 0));
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const BasicPair& pair = pairs_[k];
    std::vector<std::vector<std::uint64_t>> factors;
    for (std::size_t s = 0; s < pair.roots.size(); ++s) {
      factors.push_back(part.members(part.index_of(BasicPair{{pair.roots[s]}, {pair.phi[s]}})));
    }
    auto multiply = [&](const std::vector<std::size_t>& order) {
      std::vector<std::uint64_t> acc{identity};
      for (auto s : order) acc = product_set(bf, acc, factors[s]);
      return acc;
    };
    std::vector<std::size_t> order(factors.size());
    for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
    std::vector<std::vector<std::size_t>> orders{order};
    if (order.size() > 1) {
      orders.emplace_back(order.rbegin(), order.rend());
      std::vector<std::size_t> rotated = order;
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      if (rotated != orders.back()) orders.push_back(rotated);
    }
    const auto expected = part.members(k);
    for (const auto& o : orders) {
      const auto got = multiply(o);
      r.check(got == expected, [&] {
        return describe(g_, pair) + ": product of elementary superclasses has " + std::to_string(got.size()) +
               " elements, superclass has " + std::to_string(expected.size());
      });
    }
  }
  return r;
}

CheckReport Verifier::orthogonality() {
  if (!enumerable()) return skipped("orthogonality");
  const SuperTable& t = table();
  CheckReport r = check_orthogonality(t);
  const auto& bf = brute_force();
  r.check(t.values.size() == t.sizes.size(), [] { return std::string("table is not square"); });
  mpz_class total = 0;
  for (const auto& s : t.sizes) total += s;
  r.check(total == t.group_order, [&] { return "column weights sum to " + total.get_str(); });
  const std::size_t id = t.identity_column();
  for (std::size_t row = 0; row < t.dimension(); ++row) {
    r.check(t.values[row][id] == CycNumber::from_rational(t.p, Rational(t.degrees[row])),
            [&] { return "identity column differs from the degree at row " + std::to_string(row); });
    // Norm from the full group sum over conjugacy classes of the induced character.
    const auto induced = bf.induce_on_classes(t.pairs[row]);
    CycNumber sum(t.p);
    for (std::size_t c = 0; c < bf.class_count(); ++c) {
      sum += induced[c] * induced[c].conjugate() * Rational(mpz_class(std::to_string(bf.conj_class(c).size())));
    }
    sum *= Rational(mpz_class(1), t.group_order);
    r.check(sum == CycNumber::from_rational(t.p, t.norms[row]), [&] {
      return "norm of row " + std::to_string(row) + " is " + rational_to_string(t.norms[row]) +
             ", brute force gives " + sum.to_literal();
    });
  }
  return r;
}

CheckReport Verifier::convolution() {
  if (!enumerable()) return skipped("convolution");
  const ConvolutionAlgebra algebra(brute_force(), superclasses());
  CheckReport r = check_convolution(table(), algebra);
  if (brute_force().order() <= opt_.max_closure_order) {
    r.merge(algebra.check_closure());
  } else {
    r.note = "element-wise closure not checked above |U| = " + std::to_string(opt_.max_closure_order);
  }
  return r;
}

CheckReport Verifier::regular() {
  if (!enumerable()) return skipped("regular");
  return check_regular(table());
}

CheckReport Verifier::structural() {
  CheckReport r;
  r.suite = "structural";
  const RootSystem& rs = g_.roots();
  const FieldCtx& f = g_.field();
  std::mt19937 rng(opt_.seed);
  const auto subsets = rs.basic_subsets();
  if (rs.size() > 0) {
    for (int sample = 0; sample < opt_.mirror_samples; ++sample) {
      Coords coords(g_.rank());
      for (auto& c : coords) c = static_cast<FieldElement>(rng() % f.q());
      const LieElement u = g_.lie_from_coords(coords);
      const auto D = rs.entry_set(subsets[rng() % subsets.size()]);
      const Entry ij = rs.rep(rng() % rs.size());
      const Entry mirror{-ij.col, -ij.row};
      const FieldElement lhs = delta_minor(g_, D, ij, u);
      const FieldElement other = delta_minor(g_, D, mirror, u);
      const int e = mirror_minor_exponent(g_, D, ij);
      const FieldElement rhs = (e + 1) % 2 == 0 ? other : f.neg(other);
      r.check(lhs == rhs, [&] {
        return "mirrored minor at " + entry_to_string(ij) + " in sample " + std::to_string(sample) + ": " +
               std::to_string(lhs) + " vs " + std::to_string(rhs);
      });
    }
  }
  if (!enumerable()) {
    r.note = "mirrored labels and elementary conjugacy classes not enumerated (bound)";
    return r;
  }
  // Mirrored labels, read off the unitriangular reduction of every a_z.
  const bool symplectic = rs.family() == Family::C;
  for (std::uint64_t code = 0; code < *g_.order(); ++code) {
    const EntryPair red = reduce_two_sided(g_, g_.lie_from_coords(g_.coords_from_code(code)));
    for (std::size_t s = 0; s < red.entries.size(); ++s) {
      const Entry& e = red.entries[s];
      const Entry mirror{-e.col, -e.row};
      if (!symplectic) {
        r.check(e.col != -e.row, [&] { return element_text(g_, code) + ": diagonal entry " + entry_to_string(e); });
      }
      const auto root = rs.root_of_entry(e);
      r.check(root.has_value(), [&] { return element_text(g_, code) + ": entry " + entry_to_string(e) + " outside E"; });
      if (!root || !(rs.rep(*root) == e)) continue;
      const bool flips = !(symplectic && e.col < 0);
      const FieldElement want = red.contains(mirror) ? red.value_at(mirror) : 0;
      const FieldElement expected = flips ? f.neg(want) : want;
      r.check(red.contains(mirror) && red.values[s] == expected, [&] {
        return element_text(g_, code) + ": label at " + entry_to_string(e) + " does not mirror to " +
               entry_to_string(mirror);
      });
    }
  }
  // Elementary superclasses are conjugacy classes in family C. For the
  // orthogonal families only containment holds (U is abelian for D2).
  const auto& part = superclasses();
  const auto& bf = brute_force();
  for (std::size_t beta = 0; beta < rs.size(); ++beta) {
    for (FieldElement s = 1; s < f.q(); ++s) {
      const BasicPair pair{{beta}, {s}};
      const std::uint64_t rep = bf.code_of(representative(g_, pair));
      const auto orbit = bf.full_conjugation_orbit(rep);
      const auto members = part.members(part.index_of(pair));
      if (symplectic) {
        r.check(orbit == members,
                [&] { return describe(g_, pair) + ": superclass differs from the conjugacy class"; });
      } else {
        r.check(std::includes(members.begin(), members.end(), orbit.begin(), orbit.end()),
                [&] { return describe(g_, pair) + ": conjugacy class leaves the superclass"; });
      }
    }
  }
  if (!symplectic) r.note = "elementary superclasses checked to contain their conjugacy class only";
  return r;
}

CheckReport Verifier::gauss() {
  CheckReport r;
  r.suite = "gauss";
  const FieldCtx& f = g_.field();
  const std::uint32_t q = f.q();
  auto check_triple = [&](FieldElement a2, FieldElement a1, FieldElement a0) {
    const QuadraticSum s = quadratic_sum(f, a2, a1, a0);
    r.check(s.brute_force == s.closed_form, [&] {
      return "quadratic sum (" + std::to_string(a2) + "," + std::to_string(a1) + "," + std::to_string(a0) +
             "): " + s.brute_force.to_literal() + " vs " + s.closed_form.to_literal();
    });
  };
  if (q <= 5) {
    for (FieldElement a2 = 1; a2 < q; ++a2) {
      for (FieldElement a1 = 0; a1 < q; ++a1) {
        for (FieldElement a0 = 0; a0 < q; ++a0) check_triple(a2, a1, a0);
      }
    }
  } else {
    std::mt19937 rng(opt_.seed);
    for (int k = 0; k < opt_.gauss_samples; ++k) {
      check_triple(static_cast<FieldElement>(1 + rng() % (q - 1)), static_cast<FieldElement>(rng() % q),
                   static_cast<FieldElement>(rng() % q));
    }
  }
  const CycNumber G = f.gauss_sum();
  const CycNumber norm = G * G.conjugate();
  r.check(norm == CycNumber::from_rational(f.p(), Rational(q)),
          [&] { return "G conj(G) = " + norm.to_literal(); });
  return r;
}

}  // namespace supchar
