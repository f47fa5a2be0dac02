#include "cocycle_forge/decomposition.hpp"

#include <array>

#include "cocycle_forge/error.hpp"

namespace cocycle_forge {

namespace {

constexpr std::array<std::pair<IdentityName, std::string_view>, 8> kNames{{
    {IdentityName::chain_break, "chain_break"},
    {IdentityName::waterhouse_iff, "waterhouse_iff"},
    {IdentityName::sum_product, "sum_product"},
    {IdentityName::intersection_vee, "intersection_vee"},
    {IdentityName::cap_zero, "cap_zero"},
    {IdentityName::fI_eq_f, "fI_eq_f"},
    {IdentityName::trivial_annih_replace, "trivial_annih_replace"},
    {IdentityName::leq_f, "leq_f"},
}};

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::precondition, what);
}

BinaryTable pair_table(const MonomialIdeal& a, const MonomialIdeal& b) {
  return chain_table(DescendingChain({a, b}));
}

IdentityResult compare_tables(const BinaryTable& lhs, const BinaryTable& rhs, std::string label) {
  IdentityResult r;
  r.counterexample = first_difference(lhs, rhs);
  r.holds = !r.counterexample.has_value();
  r.detail = std::move(label);
  if (!r.holds)
    r.detail += " differs at (" + std::to_string(r.counterexample->first) + "," +
                std::to_string(r.counterexample->second) + ")";
  return r;
}

const DescendingChain& need_chain(const IdentityArgs& a, std::string_view name) {
  if (!a.chain) precondition(std::string(name) + " needs a chain");
  return *a.chain;
}

const MonomialIdeal& need_base(const IdentityArgs& a, std::string_view name) {
  if (!a.base) precondition(std::string(name) + " needs a base ideal");
  return *a.base;
}

void need_family_in(const IdentityArgs& a, const MonomialIdeal& base, std::string_view name) {
  if (a.family.empty()) precondition(std::string(name) + " needs a non-empty family");
  for (const auto& i : a.family)
    if (!i.is_subset_of(base))
      precondition(to_string(i.members()) + " is not contained in " + to_string(base.members()));
}

void check_context(const ContextPtr& ctx, const IdentityArgs& a) {
  auto same = [&](const ContextPtr& other) {
    if (!same_context(ctx, other))
      throw Error(ErrorCode::context_mismatch, "identity arguments belong to another algebra");
  };
  if (a.chain) same(a.chain->context());
  if (a.base) same(a.base->context());
  for (const auto& i : a.family) same(i.context());
}

IdentityResult chain_break(const DescendingChain& chain) {
  const auto& ideals = chain.ideals();
  const BinaryTable whole = chain_table(chain);
  std::vector<BinaryTable> steps;
  for (std::size_t i = 0; i + 1 < ideals.size(); ++i) steps.push_back(pair_table(ideals[i], ideals[i + 1]));
  IdentityResult r = compare_tables(whole, vee(steps), "f_I vs join of consecutive pairs");
  if (!r.holds) return r;
  // Split at every interior index.
  for (std::size_t a = 1; a + 1 < ideals.size(); ++a) {
    DescendingChain head(std::vector<MonomialIdeal>(ideals.begin(), ideals.begin() + a + 1));
    DescendingChain tail(std::vector<MonomialIdeal>(ideals.begin() + a, ideals.end()));
    r = compare_tables(whole, vee({chain_table(head), chain_table(tail)}),
                       "split at ideal " + std::to_string(a + 1));
    if (!r.holds) return r;
  }
  return r;
}

IdentityResult waterhouse_iff(const AlgebraContext& ctx, const DescendingChain& chain) {
  const BinaryTable t = chain_table(chain);
  const BinaryTable f0 = waterhouse(ctx.inertial()).table();
  const auto diff = first_difference(t, f0);
  bool squares = true;
  const auto& ideals = chain.ideals();
  for (std::size_t a = 0; a + 1 < ideals.size(); ++a)
    if (!ideal_product(ideals[a], ideals[a]).is_subset_of(ideals[a + 1])) squares = false;
  IdentityResult r;
  r.holds = (!diff.has_value()) == squares;
  r.detail = std::string("f_I = f0 is ") + (diff ? "false" : "true") + ", squares condition is " +
             (squares ? "true" : "false");
  if (!r.holds) r.counterexample = diff;
  return r;
}

IdentityResult leq_f(const AlgebraContext& ctx, const DescendingChain& chain) {
  const BinaryTable t = chain_table(chain);
  const BinaryTable& f = ctx.cocycle().table();
  IdentityResult r;
  r.detail = "f_I <= f";
  for (Element s = 0; s < t.order() && r.holds; ++s)
    for (Element u = 0; u < t.order(); ++u)
      if (t(s, u) && !f(s, u)) {
        r.holds = false;
        r.counterexample = std::make_pair(s, u);
        r.detail += " fails at (" + std::to_string(s) + "," + std::to_string(u) + ")";
        break;
      }
  return r;
}

bool all_trivial_annihilators(const AlgebraContext& ctx, const ElementSet& members) {
  return members.is_subset_of(classify_annihilators(ctx).trivial);
}

}  // namespace

std::string_view to_string(IdentityName name) {
  for (const auto& [n, s] : kNames)
    if (n == name) return s;
  return "unknown";
}

IdentityName identity_from_string(std::string_view name) {
  for (const auto& [n, s] : kNames)
    if (s == name) return n;
  throw Error(ErrorCode::parse_error, "unknown identity '" + std::string(name) + "'");
}

const std::vector<IdentityName>& all_identities() {
  static const std::vector<IdentityName> all = [] {
    std::vector<IdentityName> v;
    for (const auto& p : kNames) v.push_back(p.first);
    return v;
  }();
  return all;
}

IdentityResult check_identity(IdentityName name, const ContextPtr& ctx, const IdentityArgs& args) {
  check_context(ctx, args);
  const std::string_view label = to_string(name);
  switch (name) {
    case IdentityName::chain_break:
      return chain_break(need_chain(args, label));
    case IdentityName::waterhouse_iff:
      return waterhouse_iff(*ctx, need_chain(args, label));
    case IdentityName::leq_f:
      return leq_f(*ctx, need_chain(args, label));

    case IdentityName::sum_product: {
      const auto& base = need_base(args, label);
      need_family_in(args, base, label);
      ElementSet sum;
      std::vector<BinaryTable> factors;
      for (const auto& i : args.family) {
        sum |= i.members();
        factors.push_back(pair_table(base, i));
      }
      const auto total = MonomialIdeal::from_members(ctx, sum);
      return compare_tables(pair_table(base, total), pointwise_product(factors),
                            "f_{I, sum} vs product");
    }

    case IdentityName::intersection_vee: {
      const auto& base = need_base(args, label);
      need_family_in(args, base, label);
      ElementSet meet = base.members();
      std::vector<BinaryTable> parts;
      for (const auto& i : args.family) {
        meet &= i.members();
        parts.push_back(pair_table(base, i));
      }
      const auto total = MonomialIdeal::from_members(ctx, meet);
      return compare_tables(pair_table(base, total), vee(parts), "f_{I, meet} vs join");
    }

    case IdentityName::cap_zero: {
      if (args.family.empty()) precondition("cap_zero needs a non-empty family");
      ElementSet meet = ctx->gstar();
      std::vector<BinaryTable> parts;
      for (const auto& i : args.family) {
        meet &= i.members();
        parts.push_back(f_sub_I(i).table());
      }
      if (!meet.empty()) precondition("family intersection " + to_string(meet) + " is not zero");
      return compare_tables(ctx->cocycle().table(), vee(parts), "f vs join of f_{I_i}");
    }

    case IdentityName::fI_eq_f: {
      const auto& base = need_base(args, label);
      const bool lhs = f_sub_I(base) == ctx->cocycle();
      const bool rhs = all_trivial_annihilators(*ctx, base.members());
      IdentityResult r;
      r.holds = lhs == rhs;
      r.detail = std::string("f_I = f is ") + (lhs ? "true" : "false") +
                 ", trivial-annihilator generation is " + (rhs ? "true" : "false");
      if (!r.holds) r.counterexample = first_difference(f_sub_I(base).table(), ctx->cocycle().table());
      return r;
    }

    case IdentityName::trivial_annih_replace: {
      const auto& base = need_base(args, label);
      if (args.family.size() != 1) precondition("trivial_annih_replace needs exactly one family ideal");
      const auto& i2 = args.family.front();
      if (!i2.is_subset_of(base))
        precondition(to_string(i2.members()) + " is not contained in " + to_string(base.members()));
      if (!all_trivial_annihilators(*ctx, i2.members()))
        precondition(to_string(i2.members()) + " is not generated by trivial annihilators");
      return compare_tables(pair_table(base, i2), pair_table(base, MonomialIdeal::zero(ctx)),
                            "f_{I1,I2} vs f_{I1,0}");
    }
  }
  throw Error(ErrorCode::internal, "unhandled identity");
}

}  // namespace cocycle_forge
