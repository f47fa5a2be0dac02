#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cocycle_forge/algebra.hpp"
#include "cocycle_forge/generators.hpp"

namespace cocycle_forge {

/// f_𝐈: 1 on H-rows and H-columns, and f(σ,τ) where σ, τ, στ share a layer
/// I_i \ I_{i+1} with i ≤ k−1; 0 elsewhere. The result is validated and
/// checked to keep the inertial group.
Cocycle cocycle_from_chain(const DescendingChain& chain);

/// Unvalidated table of f_𝐈, for identity checks that compare tables.
BinaryTable chain_table(const DescendingChain& chain);

/// f_I = f_{{J,I}}: 1 on H-rows/columns and where f(σ,τ) = 1 with στ ∉ I.
/// f_∅ = f and f_J = f₀.
Cocycle f_sub_I(const MonomialIdeal& ideal);

/// Σ {I_σ : σ ∈ G*, ρ ∉ I_σ}. Throws Error(rho_in_n1) or Error(not_in_gstar).
MonomialIdeal unique_class_ideal(const ContextPtr& ctx, Element rho);

/// Representatives (least members) of the HσH classes of non-trivial
/// annihilators of the context's cocycle.
std::vector<Element> nontrivial_annihilator_classes(const AlgebraContext& ctx);

struct DecompositionPart {
  Element rho;
  MonomialIdeal ideal;
  Cocycle cocycle;
  bool strict = false;        // f₀ < f_I < f
  bool unique_class = false;  // [ρ] is the only non-trivial annihilator class of f_I
};

struct DecompositionReport {
  std::vector<DecompositionPart> parts;
  bool recombines = false;
  /// Set when the non-trivial annihilators of f form a single HσH class;
  /// holds its least member and `parts` stays empty.
  std::optional<Element> unique_class;

  /// One line per part `rho=<i> ideal={..} strict=<bool>` then
  /// `recombines=<bool>`; the unique-class verdict prints `unique_class=<i>`.
  std::string to_text() const;
};

/// Unique-class verdict when f has one class of non-trivial annihilators.
/// Otherwise splits f into f_{I_i}, one per HσH class of J², each with a
/// unique class of non-trivial annihilators. Throws
/// Error(nothing_to_decompose) when f = f₀.
DecompositionReport decompose_by_classes(const ContextPtr& ctx);

struct BstarPart {
  Word gamma;
  MonomialIdeal ideal;  // I_γ
  Cocycle cocycle;      // f_{{J, I_γ, 0}}
};

struct BstarDecomposition {
  std::vector<BstarPart> parts;
  BinaryTable join;  // ∨ of parts, f₀ when there are none
  bool recombines = false;

  /// Groups parts with equal ideals; each line lists the words, the ideal and
  /// the generator catalog of the part.
  std::string to_text() const;
};

/// One part per word γ of a non-trivial annihilator.
BstarDecomposition decompose_by_bstar(const ContextPtr& ctx);

enum class IdentityName {
  chain_break,
  waterhouse_iff,
  sum_product,
  intersection_vee,
  cap_zero,
  fI_eq_f,
  trivial_annih_replace,
  leq_f,
};

std::string_view to_string(IdentityName name);
/// Throws Error(parse_error) for unknown names.
IdentityName identity_from_string(std::string_view name);
const std::vector<IdentityName>& all_identities();

/// Arguments by identity:
///   chain_break, waterhouse_iff, leq_f: `chain`;
///   sum_product, intersection_vee: `base` = I and `family` = I_1..I_k ⊆ I;
///   cap_zero: `family` with empty intersection;
///   fI_eq_f: `base` = I;
///   trivial_annih_replace: `base` = I_1 and `family` = {I_2}, where I_2 is a
///   sum of principal ideals of trivial annihilators lying in I_1.
struct IdentityArgs {
  std::optional<DescendingChain> chain;
  std::optional<MonomialIdeal> base;
  std::vector<MonomialIdeal> family;
};

struct IdentityResult {
  bool holds = true;
  std::optional<std::pair<Element, Element>> counterexample;
  std::string detail;
};

/// Evaluates both sides of the named identity. A failed precondition throws
/// Error(precondition), which is distinct from `holds == false`.
IdentityResult check_identity(IdentityName name, const ContextPtr& ctx, const IdentityArgs& args);

struct MorphismReport {
  bool multiplicative = true;   // f(σ,τ)a(στ) = a(σ)a(τ)f_I(σ,τ)
  bool kernel_phi = true;       // ker φ = I
  bool psi_multiplicative = true;
  bool kernel_psi = true;       // ker ψ = span{y_σ : σ ∈ I}
  bool section = true;          // ψ∘θ = id on A_f/I
  bool dimensions = true;       // n = (n − |I|) + |I|
  std::size_t dim_total = 0;
  std::size_t dim_quotient = 0;
  std::size_t dim_ideal = 0;
  std::optional<std::pair<Element, Element>> first_violation;
  std::string detail;

  bool ok() const noexcept {
    return multiplicative && kernel_phi && psi_multiplicative && kernel_psi && section &&
           dimensions;
  }
};

/// Checks the algebra maps A_f → A_{f_I} → A_f/I on basis elements.
MorphismReport morphism_check(const MonomialIdeal& ideal);

struct TransportCertificate {
  MonomialIdeal lifted;        // I_1 with I_1 / I = ψ(P)
  bool tables_equal = false;   // (f_I)_P = f_{I_1}
  bool kernel_matches = false; // I_1 = P ∪ I as sets
};

/// P is given as a member set over the f_I context. Throws
/// Error(invalid_ideal) when P is not closed there.
TransportCertificate quotient_transport(const MonomialIdeal& ideal, const ElementSet& p);

/// f_{I_1..I_k} = (f_{I_k})_{P_1..P_k} with ψ_k(P_i) = I_i / I_k.
bool chain_transport(const DescendingChain& chain);

}  // namespace cocycle_forge
