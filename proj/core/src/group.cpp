#include "cocycle_forge/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cocycle_forge/error.hpp"

namespace cocycle_forge {

namespace {

std::string triple_text(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string power_name(std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return "a";
  return "a^" + std::to_string(i);
}

}  // namespace

std::vector<std::vector<Element>> Group::rows() const {
  std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) out[a][b] = mul(a, b);
  return out;
}

GroupPtr group_from_table(const std::vector<std::vector<Element>>& rows,
                          std::vector<std::string> names) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::invalid_order, "group table is empty");
  if (n > kMaxOrder)
    throw Error(ErrorCode::invalid_order,
                "group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw Error(ErrorCode::invalid_table, "row " + std::to_string(i) + " has " +
                                                std::to_string(rows[i].size()) +
                                                " entries, expected " + std::to_string(n));

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = rows[i][j];
      if (v >= n || seen[v])
        throw Error(ErrorCode::invalid_table, "row " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = rows[i][j];
      if (seen[v])
        throw Error(ErrorCode::invalid_table,
                    "column " + std::to_string(j) + " is not a permutation");
      seen[v] = true;
    }
  }
  for (Element s = 0; s < n; ++s)
    if (rows[0][s] != s || rows[s][0] != s)
      throw Error(ErrorCode::invalid_table,
                  "identity is not at index 0 (fails at element " + std::to_string(s) + ")");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (rows[rows[a][b]][c] != rows[a][rows[b][c]])
          throw Error(ErrorCode::invalid_table, "associativity fails at " + triple_text(a, b, c));

  auto g = std::make_shared<Group>();
  g->n_ = n;
  g->table_.reserve(n * n);
  for (const auto& row : rows) g->table_.insert(g->table_.end(), row.begin(), row.end());
  g->inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (rows[a][b] == 0) g->inverse_[a] = b;

  if (names.empty()) {
    for (Element a = 0; a < n; ++a) names.push_back(std::to_string(a));
  } else if (names.size() != n) {
    throw Error(ErrorCode::shape_error, "expected " + std::to_string(n) + " element names");
  }
  g->names_ = std::move(names);
  return g;
}

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_order, "cyclic group of order 0");
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return group_from_table(rows);
}

GroupPtr make_dihedral(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::invalid_order, "dihedral group with m = 0");
  const std::size_t n = 2 * m;
  // index i -> a^i, index m + i -> a^i b
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    const std::size_t i = x % m;
    const bool xs = x >= m;
    for (Element y = 0; y < n; ++y) {
      const std::size_t j = y % m;
      const bool ys = y >= m;
      // (a^i b^s)(a^j b^t) = a^{i + (-1)^s j} b^{s+t}
      const std::size_t k = xs ? (i + m - j) % m : (i + j) % m;
      rows[x][y] = ((xs != ys) ? m : 0) + k;
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = i == 0 ? "e" : power_name(i);
    names[m + i] = power_name(i) + "b";
  }
  return group_from_table(rows, std::move(names));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Subgroup::Subgroup(GroupPtr parent, const ElementSet& members)
    : parent_(std::move(parent)), members_(members) {
  const Group& g = *parent_;
  const std::size_t n = g.order();
  if (!members_.contains(0)) throw Error(ErrorCode::invalid_subgroup, "identity missing");
  if (!members_.is_subset_of(g.all()))
    throw Error(ErrorCode::invalid_subgroup, "member outside the group");
  for (Element a = 0; a < n; ++a) {
    if (!members_.contains(a)) continue;
    if (!members_.contains(g.inverse(a)))
      throw Error(ErrorCode::invalid_subgroup,
                  "not closed under inverse at " + std::to_string(a));
    for (Element b = 0; b < n; ++b)
      if (members_.contains(b) && !members_.contains(g.mul(a, b)))
        throw Error(ErrorCode::invalid_subgroup, "not closed under product at (" +
                                                     std::to_string(a) + "," +
                                                     std::to_string(b) + ")");
  }
}

ElementSet double_coset(const Subgroup& h, Element x) {
  const Group& g = h.group();
  ElementSet out;
  h.members().for_each([&](Element h1) {
    h.members().for_each([&](Element h2) { out.insert(g.mul(g.mul(h1, x), h2)); });
  });
  return out;
}

std::vector<ElementSet> double_cosets(const Subgroup& h) {
  std::vector<ElementSet> classes;
  ElementSet covered;
  for (Element x = 0; x < h.group().order(); ++x) {
    if (covered.contains(x)) continue;
    ElementSet c = double_coset(h, x);
    covered |= c;
    classes.push_back(c);
  }
  return classes;
}

GroupPtr builtin_group(const std::string& spec) {
  std::string s;
  for (char c : spec) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto parse_suffix = [&](std::string_view prefix) -> std::size_t {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return 0;
    std::size_t v = 0;
    const char* first = s.data() + prefix.size();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) return 0;
    return v;
  };
  for (std::string_view p : {"cyclic", "z"})
    if (auto v = parse_suffix(p); v > 0) return make_cyclic(v);
  for (std::string_view p : {"dihedral", "d"})
    if (auto v = parse_suffix(p); v > 0) return make_dihedral(v);
  return nullptr;
}

}  // namespace cocycle_forge
