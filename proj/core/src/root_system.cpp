#include "supchar/root_system.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace supchar {

Family parse_family(const std::string& text) {
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "D" || text == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + text + "' (expected B, C or D)");
}

char family_letter(Family family) {
  switch (family) {
    case Family::B:
      return 'B';
    case Family::C:
      return 'C';
    case Family::D:
      return 'D';
  }
  return '?';
}

std::string root_to_string(const Root& root) {
  const std::string i = std::to_string(root.i);
  switch (root.kind) {
    case RootKind::Minus:
      return "e" + i + "-e" + std::to_string(root.j);
    case RootKind::Plus:
      return "e" + i + "+e" + std::to_string(root.j);
    case RootKind::Long:
      return "2e" + i;
    case RootKind::Short:
      return "e" + i;
  }
  return "?";
}

Root parse_root(const std::string& text) {
  static const std::regex pair_re(R"(e(\d+)([+-])e(\d+))");
  static const std::regex long_re(R"(2e(\d+))");
  static const std::regex short_re(R"(e(\d+))");
  std::smatch mt;
  if (std::regex_match(text, mt, pair_re)) {
    const int i = std::stoi(mt[1]), j = std::stoi(mt[3]);
    if (i < 1 || j <= i) throw std::invalid_argument("root '" + text + "' is not positive (need 1 <= i < j)");
    return {mt[2] == "-" ? RootKind::Minus : RootKind::Plus, i, j};
  }
  if (std::regex_match(text, mt, long_re) || std::regex_match(text, mt, short_re)) {
    const int i = std::stoi(mt[1]);
    if (i < 1) throw std::invalid_argument("root '" + text + "' has index below 1");
    return {text[0] == '2' ? RootKind::Long : RootKind::Short, i, 0};
  }
  throw std::invalid_argument("cannot parse root '" + text + "'");
}

std::string entry_to_string(const Entry& entry) {
  return "(" + std::to_string(entry.row) + "," + std::to_string(entry.col) + ")";
}

RootSystem::RootSystem(Family family, int n) : family_(family), n_(n) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  m_ = family == Family::B ? 2 * n + 1 : 2 * n;
  for (int i = 1; i <= n; ++i) indices_.push_back(i);
  if (family == Family::B) indices_.push_back(0);
  for (int i = n; i >= 1; --i) indices_.push_back(-i);

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      roots_.push_back({RootKind::Minus, i, j});
      roots_.push_back({RootKind::Plus, i, j});
    }
    if (family == Family::C) roots_.push_back({RootKind::Long, i, 0});
    if (family == Family::B) roots_.push_back({RootKind::Short, i, 0});
  }
  auto rep_of = [](const Root& r) -> Entry {
    switch (r.kind) {
      case RootKind::Minus:
        return {r.i, r.j};
      case RootKind::Plus:
        return {r.i, -r.j};
      case RootKind::Long:
        return {r.i, -r.i};
      case RootKind::Short:
        return {r.i, 0};
    }
    return {0, 0};
  };
  std::sort(roots_.begin(), roots_.end(),
            [&](const Root& a, const Root& b) { return entry_less(rep_of(a), rep_of(b)); });

  entry_root_.assign(static_cast<std::size_t>(m_) * m_, -1);
  entry_sign_.assign(static_cast<std::size_t>(m_) * m_, 0);
  const int plus_sign = family == Family::C ? 1 : -1;
  for (std::size_t idx = 0; idx < roots_.size(); ++idx) {
    const Root& r = roots_[idx];
    std::vector<std::pair<Entry, int>> es;
    switch (r.kind) {
      case RootKind::Minus:
        es = {{{r.i, r.j}, 1}, {{-r.j, -r.i}, -1}};
        break;
      case RootKind::Plus:
        es = {{{r.i, -r.j}, 1}, {{r.j, -r.i}, plus_sign}};
        break;
      case RootKind::Long:
        es = {{{r.i, -r.i}, 1}};
        break;
      case RootKind::Short:
        es = {{{r.i, 0}, 1}, {{0, -r.i}, -1}};
        break;
    }
    std::vector<Entry> list;
    for (const auto& [e, sign] : es) {
      list.push_back(e);
      const std::size_t cell = static_cast<std::size_t>(pos(e.row)) * m_ + pos(e.col);
      entry_root_[cell] = static_cast<int>(idx);
      entry_sign_[cell] = sign;
      all_entries_.push_back(e);
    }
    entries_.push_back(std::move(list));
  }
  std::sort(all_entries_.begin(), all_entries_.end(),
            [&](const Entry& a, const Entry& b) { return entry_less(a, b); });
}

int RootSystem::pos(int index) const {
  if (index >= 1 && index <= n_) return index - 1;
  if (index == 0 && family_ == Family::B) return n_;
  if (index <= -1 && index >= -n_) return m_ + index;
  throw std::out_of_range("index " + std::to_string(index) + " outside the index set");
}

bool RootSystem::entry_less(const Entry& a, const Entry& b) const {
  if (a.col != b.col) return mirror_less(a.col, b.col);
  return mirror_less(b.row, a.row);
}

std::size_t RootSystem::root_index(const Root& root) const {
  auto it = std::find(roots_.begin(), roots_.end(), root);
  if (it == roots_.end()) {
    throw std::invalid_argument("root " + root_to_string(root) + " is not a positive root of " +
                                std::string(1, family_letter(family_)) + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - roots_.begin());
}

std::optional<std::size_t> RootSystem::root_of_entry(const Entry& e) const {
  const int r = entry_root_[static_cast<std::size_t>(pos(e.row)) * m_ + pos(e.col)];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

int RootSystem::basis_sign(const Entry& e) const {
  return entry_sign_[static_cast<std::size_t>(pos(e.row)) * m_ + pos(e.col)];
}

std::vector<Entry> RootSystem::entry_set(const std::vector<std::size_t>& roots) const {
  std::vector<Entry> out;
  for (auto idx : roots) {
    for (const auto& e : entries(idx)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [&](const Entry& a, const Entry& b) { return entry_less(a, b); });
  return out;
}

bool RootSystem::is_basic(const std::vector<std::size_t>& roots) const {
  std::vector<bool> row_used(m_, false), col_used(m_, false);
  for (const auto& e : entry_set(roots)) {
    const int r = pos(e.row), c = pos(e.col);
    if (row_used[r] || col_used[c]) return false;
    row_used[r] = col_used[c] = true;
  }
  return true;
}

std::vector<std::vector<std::size_t>> RootSystem::basic_subsets() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  // Depth-first over increasing root indices; basicity is hereditary, so
  // pruning at the first conflict is exact.
  auto extend = [&](auto&& self, std::size_t start) -> void {
    out.push_back(current);
    for (std::size_t idx = start; idx < roots_.size(); ++idx) {
      current.push_back(idx);
      if (is_basic(current)) self(self, idx + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

FieldElement BasicPair::label(std::size_t idx) const {
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots[k] == idx) return phi[k];
  }
  return 0;
}

std::vector<BasicPair> enumerate_basic_pairs(const RootSystem& rs, const FieldCtx& ctx) {
  std::vector<BasicPair> out;
  for (const auto& subset : rs.basic_subsets()) {
    BasicPair pair{subset, std::vector<FieldElement>(subset.size(), 1)};
    while (true) {
      out.push_back(pair);
      // Odometer over F_q^x labels, last root fastest.
      std::size_t k = subset.size();
      while (k > 0) {
        --k;
        if (pair.phi[k] + 1 < ctx.q()) {
          ++pair.phi[k];
          break;
        }
        pair.phi[k] = 1;
        if (k == 0) {
          k = subset.size() + 1;
          break;
        }
      }
      if (subset.empty() || k == subset.size() + 1) break;
    }
  }
  return out;
}

std::string pair_to_string(const RootSystem& rs, const BasicPair& pair) {
  std::string out = "{";
  for (std::size_t k = 0; k < pair.roots.size(); ++k) {
    if (k) out += ';';
    out += root_to_string(rs.root(pair.roots[k])) + ":" + std::to_string(pair.phi[k]);
  }
  return out + "}";
}

}  // namespace supchar
