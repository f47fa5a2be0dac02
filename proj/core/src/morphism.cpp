#include "cocycle_forge/decomposition.hpp"

#include "cocycle_forge/error.hpp"

namespace cocycle_forge {

MorphismReport morphism_check(const MonomialIdeal& ideal) {
  const ContextPtr& ctx = ideal.context();
  const Group& g = ctx->group();
  const std::size_t n = g.order();
  const Cocycle& f = ctx->cocycle();
  const Cocycle fi = f_sub_I(ideal);
  auto a = [&](Element s) { return ideal.contains(s) ? 0 : 1; };

  MorphismReport rep;
  auto fail = [&](bool& flag, Element s, Element t, const std::string& what) {
    if (flag) {
      flag = false;
      if (!rep.first_violation) {
        rep.first_violation = std::make_pair(s, t);
        rep.detail = what + " fails at (" + std::to_string(s) + "," + std::to_string(t) + ")";
      }
    }
  };

  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) {
      const Element st = g.mul(s, t);
      // phi(x_s x_t) = phi(x_s) phi(x_t)
      if (int(f(s, t)) * a(st) != a(s) * a(t) * int(fi(s, t))) fail(rep.multiplicative, s, t, "phi");
      // psi(y_s y_t) = psi(y_s) psi(y_t) in A_f / I
      if (int(fi(s, t)) * a(st) != int(f(s, t)) * a(st)) fail(rep.psi_multiplicative, s, t, "psi");
    }

  ElementSet ker_phi, ker_psi;
  for (Element s = 0; s < n; ++s)
    if (a(s) == 0) {
      ker_phi.insert(s);
      ker_psi.insert(s);
    }
  rep.kernel_phi = ker_phi == ideal.members();
  rep.kernel_psi = ker_psi == ideal.members();

  // theta(xbar_s) = phi(x_s); psi(theta(xbar_s)) must return xbar_s for s outside I.
  for (Element s = 0; s < n; ++s)
    if (!ideal.contains(s) && a(s) != 1) fail(rep.section, s, s, "section");

  rep.dim_total = n;
  rep.dim_ideal = ideal.size();
  rep.dim_quotient = n - ker_psi.size();
  rep.dimensions = rep.dim_total == rep.dim_quotient + rep.dim_ideal;
  if (rep.ok() && rep.detail.empty())
    rep.detail = "dimensions " + std::to_string(rep.dim_total) + " = " +
                 std::to_string(rep.dim_quotient) + " + " + std::to_string(rep.dim_ideal);
  return rep;
}

TransportCertificate quotient_transport(const MonomialIdeal& ideal, const ElementSet& p) {
  const ContextPtr& ctx = ideal.context();
  const ContextPtr quotient_ctx = AlgebraContext::make(f_sub_I(ideal));
  const MonomialIdeal pi = MonomialIdeal::from_members(quotient_ctx, p);
  MonomialIdeal lifted = ideal_closure(ctx, p | ideal.members());
  const bool tables = f_sub_I(pi) == f_sub_I(lifted);
  const bool kernel = lifted.members() == (p | ideal.members());
  return TransportCertificate{std::move(lifted), tables, kernel};
}

bool chain_transport(const DescendingChain& chain) {
  const auto& ideals = chain.ideals();
  const ContextPtr last_ctx = AlgebraContext::make(f_sub_I(ideals.back()));
  std::vector<MonomialIdeal> moved;
  for (const auto& i : ideals) moved.push_back(MonomialIdeal::from_members(last_ctx, i.members()));
  return chain_table(chain) == chain_table(DescendingChain(std::move(moved)));
}

}  // namespace cocycle_forge
