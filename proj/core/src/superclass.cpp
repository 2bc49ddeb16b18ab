#include "supchar/superclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace supchar {

FieldElement EntryPair::value_at(const Entry& e) const {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] == e) return values[k];
  }
  return 0;
}

bool EntryPair::contains(const Entry& e) const {
  return std::find(entries.begin(), entries.end(), e) != entries.end();
}

EntryPair entry_pair(const GroupModel& g, const BasicPair& pair) {
  const RootSystem& rs = g.roots();
  const FieldCtx& f = g.field();
  EntryPair out;
  for (std::size_t s = 0; s < pair.roots.size(); ++s) {
    for (const auto& e : rs.entries(pair.roots[s])) {
      out.entries.push_back(e);
      out.values.push_back(rs.basis_sign(e) > 0 ? pair.phi[s] : f.neg(pair.phi[s]));
    }
  }
  return out;
}

LieElement pair_element(const GroupModel& g, const BasicPair& pair) {
  Coords coords(g.rank(), 0);
  for (std::size_t s = 0; s < pair.roots.size(); ++s) coords[pair.roots[s]] = pair.phi[s];
  return g.lie_from_coords(coords);
}

std::vector<Entry> minor_support(const RootSystem& rs, const std::vector<Entry>& D, const Entry& ij) {
  std::vector<Entry> out;
  for (const auto& e : D) {
    if (rs.mirror_less(ij.row, e.row) && rs.mirror_less(e.col, ij.col)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [&](const Entry& a, const Entry& b) { return rs.mirror_less(a.col, b.col); });
  return out;
}

namespace {

FieldElement determinant(const FieldCtx& f, std::vector<std::vector<FieldElement>> m) {
  const std::size_t k = m.size();
  FieldElement det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && m[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const FieldElement inv = f.inv(m[c][c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      if (m[r][c] == 0) continue;
      const FieldElement factor = f.mul(m[r][c], inv);
      for (std::size_t l = c; l < k; ++l) m[r][l] = f.sub(m[r][l], f.mul(factor, m[c][l]));
    }
  }
  return det;
}

}  // namespace

FieldElement delta_minor(const GroupModel& g, const std::vector<Entry>& D, const Entry& ij, const Matrix& u) {
  const RootSystem& rs = g.roots();
  const auto support = minor_support(rs, D, ij);
  if (support.empty()) return g.get(u, ij);
  std::vector<int> rows{ij.row};
  std::vector<int> sorted_rows;
  std::vector<int> cols;
  for (const auto& e : support) {
    sorted_rows.push_back(e.row);
    cols.push_back(e.col);
  }
  std::sort(sorted_rows.begin(), sorted_rows.end(), [&](int a, int b) { return rs.mirror_less(a, b); });
  rows.insert(rows.end(), sorted_rows.begin(), sorted_rows.end());
  cols.push_back(ij.col);
  std::vector<std::vector<FieldElement>> m(rows.size(), std::vector<FieldElement>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) m[a][b] = g.get(u, {rows[a], cols[b]});
  }
  return determinant(g.field(), std::move(m));
}

FieldElement minor_factor(const GroupModel& g, const EntryPair& D, const Entry& ij) {
  const RootSystem& rs = g.roots();
  const FieldCtx& f = g.field();
  const auto support = minor_support(rs, D.entries, ij);
  FieldElement out = 1;
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < support.size(); ++a) {
    out = f.mul(out, D.value_at(support[a]));
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      if (rs.mirror_less(support[b].row, support[a].row)) ++inversions;
    }
  }
  if ((support.size() + inversions) % 2 == 1) out = f.neg(out);
  return out;
}

bool is_singular(const RootSystem& rs, const std::vector<Entry>& D, const Entry& e) {
  for (const auto& d : D) {
    if (d.row == e.row && rs.mirror_less(d.col, e.col)) return true;
    if (d.col == e.col && rs.mirror_less(e.row, d.row)) return true;
  }
  return false;
}

RegularSplit regular_entries(const RootSystem& rs, const std::vector<Entry>& D) {
  RegularSplit out;
  for (const auto& e : rs.all_entries()) {
    (is_singular(rs, D, e) ? out.singular : out.regular).push_back(e);
  }
  return out;
}

bool membership(const GroupModel& g, const BasicPair& pair, const LieElement& a) {
  const EntryPair target = entry_pair(g, pair);
  const LieElement e = pair_element(g, pair);
  for (const auto& ij : g.roots().all_entries()) {
    if (is_singular(g.roots(), target.entries, ij)) continue;
    if (delta_minor(g, target.entries, ij, a) != delta_minor(g, target.entries, ij, e)) return false;
  }
  return true;
}

BasicPair classify(const GroupModel& g, const LieElement& a) {
  const RootSystem& rs = g.roots();
  const FieldCtx& f = g.field();
  EntryPair current;
  BasicPair out;
  for (std::size_t idx = 0; idx < rs.size(); ++idx) {
    const Entry ij = rs.rep(idx);
    if (is_singular(rs, current.entries, ij)) continue;
    const FieldElement delta = delta_minor(g, current.entries, ij, a);
    if (delta == 0) continue;
    const FieldElement phi = f.div(delta, minor_factor(g, current, ij));
    for (const auto& e : rs.entries(idx)) {
      current.entries.push_back(e);
      current.values.push_back(rs.basis_sign(e) > 0 ? phi : f.neg(phi));
    }
    out.roots.push_back(idx);
    out.phi.push_back(phi);
  }
  if (!rs.is_basic(out.roots) || !membership(g, out, a)) {
    throw std::logic_error("classify: scan produced " + pair_to_string(rs, out) +
                           ", which fails the orbit membership test");
  }
  return out;
}

BasicPair superclass_of(const GroupModel& g, const GroupElement& z) { return classify(g, g.lie_from_group(z)); }

GroupElement representative(const GroupModel& g, const BasicPair& pair) {
  return g.group_from_lie(pair_element(g, pair));
}

int mirror_minor_exponent(const GroupModel& g, const std::vector<Entry>& D, const Entry& ij) {
  const auto support = minor_support(g.roots(), D, ij);
  const int t = static_cast<int>(support.size());
  if (g.roots().family() != Family::C || ij.col > 0) return t;
  // Entries whose row and column lie in the same half each flip one sign when
  // the minor is mirrored; the (neg, neg) ones count as well as the (pos, pos).
  int same_half = 0;
  for (const auto& e : support) {
    if ((e.row > 0) == (e.col > 0)) ++same_half;
  }
  return same_half - 1;
}

SuperclassPartition::SuperclassPartition(const GroupModel& g, std::vector<BasicPair> pairs, std::uint64_t max_order)
    : pairs_(std::move(pairs)) {
  const auto order = g.order();
  if (!order || *order > max_order) {
    throw std::length_error("group order exceeds the enumeration bound " + std::to_string(max_order));
  }
  order_ = *order;
  for (std::size_t k = 0; k < pairs_.size(); ++k) lookup_[{pairs_[k].roots, pairs_[k].phi}] = k;
  class_of_.resize(order_);
  sizes_.assign(pairs_.size(), 0);
  for (std::uint64_t code = 0; code < order_; ++code) {
    const BasicPair cls = classify(g, g.lie_from_coords(g.coords_from_code(code)));
    const std::size_t k = index_of(cls);
    class_of_[code] = static_cast<std::uint32_t>(k);
    ++sizes_[k];
  }
}

std::size_t SuperclassPartition::index_of(const BasicPair& pair) const {
  auto it = lookup_.find({pair.roots, pair.phi});
  if (it == lookup_.end()) throw std::out_of_range("basic pair not in the enumerated list");
  return it->second;
}

std::vector<std::uint64_t> SuperclassPartition::members(std::size_t cls) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t code = 0; code < order_; ++code) {
    if (class_of_[code] == cls) out.push_back(code);
  }
  return out;
}

}  // namespace supchar
