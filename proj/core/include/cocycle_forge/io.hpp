#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cocycle_forge/algebra.hpp"
#include "cocycle_forge/decomposition.hpp"
#include "cocycle_forge/generators.hpp"
#include "cocycle_forge/semilinear.hpp"

namespace cocycle_forge {

// Text formats. Lines starting with '#' are comments everywhere. Parse
// failures throw Error(parse_error) with a 1-based line number; semantic
// failures keep their own codes (invalid_table, invalid_chain, ...).

/// Reads a whole file; a missing file is a parse error.
std::string read_file(const std::string& path);

/// First line `n`, then n rows of n indices, then optionally one line
/// `names <name_0> ... <name_{n-1}>`.
GroupPtr parse_group(std::string_view text);
std::string emit_group(const Group& g);

/// n lines of n characters from {0,1}.
BinaryTable parse_table(const GroupPtr& g, std::string_view text);
/// parse_table followed by require_cocycle.
Cocycle parse_cocycle(const GroupPtr& g, std::string_view text);
std::string emit_table(const BinaryTable& t);

/// n lines, each an integer or a parenthesized tuple such as (2,2,0,0). All
/// lines share one shape; tuples of width w use the lex power ℕ^w.
SemilinearMap parse_r(const GroupPtr& g, std::string_view text);
std::string emit_r(const SemilinearMap& r);

/// Member sets "{1,2}", "1 2" or "1,2"; "{}" and the empty string are ∅.
ElementSet parse_index_set(std::string_view text);

/// One ideal per line as sorted space-separated indices; an empty line is the
/// zero ideal. Leading and trailing blank lines are ignored.
std::vector<ElementSet> parse_chain_sets(std::string_view text);
/// Validates closure (invalid_ideal) and descent (invalid_chain).
DescendingChain parse_chain(const ContextPtr& ctx, std::string_view text);
std::string emit_chain(const DescendingChain& c);

enum class Format { table, dot, report, rfile };
/// Throws Error(parse_error) for unknown names.
Format format_from_string(std::string_view s);

struct GraphArtifact {
  ContextPtr ctx;
  GraphKind kind;
};

using Artifact = std::variant<BinaryTable, Cocycle, SemilinearMap, DescendingChain, DecompositionReport,
                              BstarDecomposition, GraphArtifact>;

/// Deterministic text for the artifact. Throws Error(format_error) when the
/// artifact has no representation in `format`.
std::string emit_artifact(const Artifact& a, Format format);

}  // namespace cocycle_forge
