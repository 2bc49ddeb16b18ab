#include "supchar/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace supchar {

BruteForce::BruteForce(const GroupModel& g, std::uint64_t max_order) : g_(g) {
  const auto order = g.order();
  if (!order || *order > max_order) {
    throw std::length_error("group order exceeds the brute-force bound " + std::to_string(max_order));
  }
  elements_.reserve(*order);
  inverses_.reserve(*order);
  for (std::uint64_t code = 0; code < *order; ++code) {
    elements_.push_back(g.group_from_coords(g.coords_from_code(code)));
    inverses_.push_back(g.group_inv(elements_.back()));
    const auto [it, fresh] = by_rep_code_.emplace(g.rep_entry_code(elements_.back()), code);
    if (!fresh) throw std::logic_error("representative entries do not separate group elements");
  }

  // Union-find over conjugation by the root elements 1 + s e_alpha.
  std::vector<std::uint64_t> parent(*order);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const FieldCtx& f = g.field();
  for (std::size_t idx = 0; idx < g.rank(); ++idx) {
    for (FieldElement s = 1; s < f.q(); ++s) {
      Coords coords(g.rank(), 0);
      coords[idx] = s;
      const GroupElement x = g.group_from_coords(coords);
      const GroupElement x_inv = g.group_inv(x);
      for (std::uint64_t code = 0; code < *order; ++code) {
        const std::uint64_t other = code_of(g.mul(g.mul(x, elements_[code]), x_inv));
        const auto a = find(code), b = find(other);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  conj_class_.resize(*order);
  std::map<std::uint64_t, std::uint32_t> root_to_class;
  for (std::uint64_t code = 0; code < *order; ++code) {
    const auto root = find(code);
    auto [it, fresh] = root_to_class.emplace(root, static_cast<std::uint32_t>(class_members_.size()));
    if (fresh) class_members_.emplace_back();
    conj_class_[code] = it->second;
    class_members_[it->second].push_back(code);
  }
}

std::uint64_t BruteForce::code_of(const GroupElement& z) const {
  auto it = by_rep_code_.find(g_.rep_entry_code(z));
  if (it == by_rep_code_.end() || !(elements_[it->second] == z)) {
    throw std::out_of_range("matrix is not an element of U");
  }
  return it->second;
}

std::uint64_t BruteForce::product(std::uint64_t x, std::uint64_t y) const {
  return code_of(g_.mul(elements_[x], elements_[y]));
}

std::vector<std::uint64_t> BruteForce::full_conjugation_orbit(std::uint64_t code) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < order(); ++x) {
    out.push_back(code_of(g_.mul(g_.mul(elements_[x], elements_[code]), inverses_[x])));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t BruteForce::subgroup_order(const std::vector<std::size_t>& roots) const {
  std::uint64_t count = 0;
  for (const auto& z : elements_) {
    if (g_.in_U_D(roots, z)) ++count;
  }
  return count;
}

CycNumber BruteForce::induce_literal(const BasicPair& pair, std::uint64_t code) const {
  const unsigned p = g_.field().p();
  std::vector<std::int64_t> counts(p, 0);
  const GroupElement& z = elements_.at(code);
  for (std::uint64_t x = 0; x < order(); ++x) {
    const GroupElement h = g_.mul(g_.mul(elements_[x], z), inverses_[x]);
    if (g_.in_U_D(pair.roots, h)) ++counts[g_.lambda_exponent(pair, h)];
  }
  const std::uint64_t sub = subgroup_order(pair.roots);
  return CycNumber::from_exponent_counts(p, counts) * Rational(mpz_class(1), mpz_class(std::to_string(sub)));
}

std::vector<CycNumber> BruteForce::induce_on_classes(const BasicPair& pair) const {
  const unsigned p = g_.field().p();
  const mpz_class group_order(std::to_string(order()));
  const mpz_class sub(std::to_string(subgroup_order(pair.roots)));
  std::vector<CycNumber> out;
  out.reserve(class_count());
  for (const auto& members : class_members_) {
    std::vector<std::int64_t> counts(p, 0);
    for (auto code : members) {
      const GroupElement& h = elements_[code];
      if (g_.in_U_D(pair.roots, h)) ++counts[g_.lambda_exponent(pair, h)];
    }
    const mpz_class size(std::to_string(members.size()));
    out.push_back(CycNumber::from_exponent_counts(p, counts) * Rational(group_order, sub * size));
  }
  return out;
}

EntryPair reduce_two_sided(const GroupModel& g, Matrix a) {
  const FieldCtx& f = g.field();
  const RootSystem& rs = g.roots();
  const int m = a.m;
  std::vector<bool> used(m, false);
  EntryPair out;
  for (int c = 0; c < m; ++c) {
    int r = -1;
    for (int k = m - 1; k >= 0; --k) {
      if (!used[k] && a.at(k, c) != 0) {
        r = k;
        break;
      }
    }
    if (r < 0) continue;
    const FieldElement pivot = a.at(r, c);
    const FieldElement inv = f.inv(pivot);
    // Clear the column above the pivot with row operations from below.
    for (int k = 0; k < r; ++k) {
      if (a.at(k, c) == 0) continue;
      const FieldElement lam = f.mul(a.at(k, c), inv);
      for (int l = 0; l < m; ++l) a.at(k, l) = f.sub(a.at(k, l), f.mul(lam, a.at(r, l)));
    }
    // Clear the row to the right with column operations from the left.
    for (int l = c + 1; l < m; ++l) {
      if (a.at(r, l) == 0) continue;
      const FieldElement lam = f.mul(a.at(r, l), inv);
      for (int k = 0; k < m; ++k) a.at(k, l) = f.sub(a.at(k, l), f.mul(lam, a.at(k, c)));
    }
    used[r] = true;
    out.entries.push_back({rs.index_at(r), rs.index_at(c)});
    out.values.push_back(pivot);
  }
  return out;
}

std::optional<BasicPair> root_pair_of(const GroupModel& g, const EntryPair& pair) {
  const RootSystem& rs = g.roots();
  const FieldCtx& f = g.field();
  std::map<std::size_t, FieldElement> labels;
  for (const auto& e : pair.entries) {
    const auto root = rs.root_of_entry(e);
    if (!root) return std::nullopt;
    labels[*root] = pair.value_at(rs.rep(*root));
  }
  BasicPair out;
  for (const auto& [root, phi] : labels) {
    if (phi == 0) return std::nullopt;
    for (const auto& e : rs.entries(root)) {
      const FieldElement expected = rs.basis_sign(e) > 0 ? phi : f.neg(phi);
      if (!pair.contains(e) || pair.value_at(e) != expected) return std::nullopt;
    }
    out.roots.push_back(root);
    out.phi.push_back(phi);
  }
  if (!rs.is_basic(out.roots)) return std::nullopt;
  return out;
}

std::vector<BasicPair> classify_exhaustive(const GroupModel& g, const LieElement& a,
                                           const std::vector<BasicPair>& pairs) {
  std::vector<BasicPair> out;
  for (const auto& pair : pairs) {
    if (membership(g, pair, a)) out.push_back(pair);
  }
  return out;
}

}  // namespace supchar
