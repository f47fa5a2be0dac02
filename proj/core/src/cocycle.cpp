#include "cocycle_forge/cocycle.hpp"

#include "cocycle_forge/error.hpp"

namespace cocycle_forge {

BinaryTable::BinaryTable(GroupPtr group, bool fill)
    : group_(std::move(group)), n_(group_->order()), bits_(n_ * n_, fill ? 1 : 0) {}

BinaryTable BinaryTable::from_rows(GroupPtr group, const std::vector<std::vector<int>>& rows) {
  BinaryTable t(std::move(group), false);
  if (rows.size() != t.n_)
    throw Error(ErrorCode::shape_error, "table has " + std::to_string(rows.size()) +
                                            " rows, group order is " + std::to_string(t.n_));
  for (std::size_t i = 0; i < t.n_; ++i) {
    if (rows[i].size() != t.n_)
      throw Error(ErrorCode::shape_error, "row " + std::to_string(i) + " has " +
                                              std::to_string(rows[i].size()) + " entries");
    for (std::size_t j = 0; j < t.n_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1)
        throw Error(ErrorCode::invalid_table, "entry (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") is not 0/1");
      t.set(i, j, rows[i][j] == 1);
    }
  }
  return t;
}

std::size_t BinaryTable::support_size() const noexcept {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

std::string CocycleViolation::describe() const {
  if (kind == Kind::normalization)
    return "normalization fails at (" + std::to_string(sigma) + "," + std::to_string(tau) + ")";
  return "cocycle identity fails at (" + std::to_string(sigma) + "," + std::to_string(tau) + "," +
         std::to_string(rho) + ")";
}

CocycleCheck validate_cocycle(const BinaryTable& t) {
  const Group& g = t.group();
  const std::size_t n = g.order();
  CocycleCheck out;
  for (Element s = 0; s < n; ++s) {
    if (!t.at(0, s)) {
      out.violation = CocycleViolation{CocycleViolation::Kind::normalization, 0, s, 0};
      return out;
    }
    if (!t.at(s, 0)) {
      out.violation = CocycleViolation{CocycleViolation::Kind::normalization, s, 0, 0};
      return out;
    }
  }
  for (Element s = 1; s < n; ++s)
    for (Element u = 1; u < n; ++u) {
      const bool fst = t.at(s, u);
      const Element su = g.mul(s, u);
      for (Element r = 1; r < n; ++r) {
        const bool lhs = fst && t.at(su, r);
        const bool rhs = t.at(u, r) && t.at(s, g.mul(u, r));
        if (lhs != rhs) {
          out.violation = CocycleViolation{CocycleViolation::Kind::cocycle_identity, s, u, r};
          return out;
        }
      }
    }
  out.cocycle = Cocycle::unchecked(t);
  return out;
}

Cocycle require_cocycle(const BinaryTable& t) {
  auto check = validate_cocycle(t);
  if (!check) throw Error(ErrorCode::invalid_table, check.violation->describe());
  return std::move(*check.cocycle);
}

Subgroup inertial_group(const Cocycle& f) {
  const Group& g = f.group();
  ElementSet h;
  for (Element s = 0; s < g.order(); ++s)
    if (f(s, g.inverse(s))) h.insert(s);
  try {
    return Subgroup(f.group_ptr(), h);
  } catch (const Error& e) {
    throw Error(ErrorCode::internal, std::string("inertial set is not a subgroup: ") + e.what());
  }
}

Cocycle waterhouse(const Subgroup& h) {
  BinaryTable t(h.parent(), false);
  const std::size_t n = h.group().order();
  for (Element s = 0; s < n; ++s)
    for (Element u = 0; u < n; ++u) t.set(s, u, h.contains(s) || h.contains(u));
  return Cocycle::unchecked(std::move(t));
}

Cocycle trivial_cocycle(const GroupPtr& g) { return Cocycle::unchecked(BinaryTable(g, true)); }

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::equal: return "equal";
    case Ordering::less: return "less";
    case Ordering::greater: return "greater";
    case Ordering::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

void require_same_group(const BinaryTable& a, const BinaryTable& b) {
  if (!same_group(a.group_ptr(), b.group_ptr()))
    throw Error(ErrorCode::domain_mismatch, "tables live over different groups");
}

}  // namespace

Ordering compare(const BinaryTable& f, const BinaryTable& g) {
  require_same_group(f, g);
  bool f_extra = false;
  bool g_extra = false;
  const std::size_t n = f.order();
  for (Element s = 0; s < n; ++s)
    for (Element u = 0; u < n; ++u) {
      if (f.at(s, u) && !g.at(s, u)) f_extra = true;
      if (g.at(s, u) && !f.at(s, u)) g_extra = true;
    }
  if (!f_extra && !g_extra) return Ordering::equal;
  if (!f_extra) return Ordering::less;
  if (!g_extra) return Ordering::greater;
  return Ordering::incomparable;
}

bool leq(const BinaryTable& f, const BinaryTable& g) {
  const auto o = compare(f, g);
  return o == Ordering::equal || o == Ordering::less;
}

BinaryTable vee(const std::vector<BinaryTable>& fs) {
  if (fs.empty()) throw Error(ErrorCode::precondition, "vee of an empty list");
  BinaryTable out = fs.front();
  const std::size_t n = out.order();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    require_same_group(out, fs[i]);
    for (Element s = 0; s < n; ++s)
      for (Element u = 0; u < n; ++u)
        if (fs[i].at(s, u)) out.set(s, u, true);
  }
  return out;
}

BinaryTable pointwise_product(const std::vector<BinaryTable>& fs) {
  if (fs.empty()) throw Error(ErrorCode::precondition, "product of an empty list");
  BinaryTable out = fs.front();
  const std::size_t n = out.order();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    require_same_group(out, fs[i]);
    for (Element s = 0; s < n; ++s)
      for (Element u = 0; u < n; ++u)
        if (!fs[i].at(s, u)) out.set(s, u, false);
  }
  return out;
}

std::optional<std::pair<Element, Element>> first_difference(const BinaryTable& a,
                                                            const BinaryTable& b) {
  require_same_group(a, b);
  for (Element s = 0; s < a.order(); ++s)
    for (Element u = 0; u < a.order(); ++u)
      if (a.at(s, u) != b.at(s, u)) return std::pair{s, u};
  return std::nullopt;
}

}  // namespace cocycle_forge
