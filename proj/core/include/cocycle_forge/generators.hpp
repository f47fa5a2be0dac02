#pragma once

#include <string>
#include <vector>

#include "cocycle_forge/algebra.hpp"

namespace cocycle_forge {

/// A generator word: letters from N_1(f) whose left-to-right product never
/// vanishes.
using Word = std::vector<Element>;

/// Γ_f grouped by product. Words for each σ are sorted by length, then
/// lexicographically.
class GeneratorSet {
 public:
  GeneratorSet(ContextPtr ctx, std::vector<std::vector<Word>> by_element);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Word>& words(Element sigma) const { return by_element_.at(sigma); }
  /// Every word, ordered by product then by the per-element order.
  std::vector<Word> all_words() const;
  std::size_t total() const noexcept;
  /// Longest stored word.
  std::size_t max_length() const noexcept;

 private:
  ContextPtr ctx_;
  std::vector<std::vector<Word>> by_element_;
};

/// {σ ∈ G* : no σ₁, σ₂ ∈ G* with σ₁σ₂ = σ and f(σ₁,σ₂) = 1}.
ElementSet n1_set(const AlgebraContext& ctx);

/// Product of the letters, or nullopt when some prefix product vanishes or a
/// letter is outside N_1.
std::optional<Element> evaluate_word(const AlgebraContext& ctx, const Word& w);

/// Exhaustive depth-first enumeration of Γ_f.
GeneratorSet all_generators(const ContextPtr& ctx);

/// g₁ occurs as a contiguous block of g₂ (the empty word is part of every word).
bool is_ordered_part(const Word& part, const Word& whole);

/// Words of the non-trivial annihilators, sorted by product then word order.
std::vector<Word> bstar(const GeneratorSet& gens);
std::vector<Word> bstar(const ContextPtr& ctx);

/// I_g = Σ_{σ ∈ g} I_σ. Throws Error(invalid_word) for letters outside N_1 or
/// an empty word.
MonomialIdeal ideal_of_word(const ContextPtr& ctx, const Word& g);

/// The ideal generated by x_σ computed from generator words: τ is included
/// when some word of τ contains h₁g_σh₂ as an ordered part. Throws
/// Error(internal) if it disagrees with principal_ideal().
MonomialIdeal principal_via_generators(const GeneratorSet& gens, Element sigma);

/// Same computation without the cross-check, for oracle comparisons.
ElementSet principal_members_from_words(const GeneratorSet& gens, Element sigma);

enum class GraphKind { element, generator };

/// Undirected DOT graph. Element kind: vertices G, an edge {ρ, σρ} for
/// σ ∈ N_1 with f(σ,ρ) = 1 and {ρ, ρσ} for σ ∈ N_1 with f(ρ,σ) = 1.
/// Generator kind: Hasse diagram of Γ_f ∪ {()} under the ordered-part order.
std::string graphs_dot(const ContextPtr& ctx, GraphKind kind);

/// Undirected edges of the two graphs, as label pairs in output order.
std::vector<std::pair<std::string, std::string>> element_graph_edges(const AlgebraContext& ctx);
std::vector<std::pair<std::string, std::string>> generator_graph_edges(const GeneratorSet& gens);

/// "(s1,s2,...)" using the group's element names.
std::string format_word(const Group& g, const Word& w);
/// "{(w1),(w2)}"
std::string format_word_set(const Group& g, const std::vector<Word>& ws);
/// "{{...},{...}}" with one inner set per σ ∈ G* in index order.
std::string format_catalog(const GeneratorSet& gens);

}  // namespace cocycle_forge
