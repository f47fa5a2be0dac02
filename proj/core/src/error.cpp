#include "cocycle_forge/error.hpp"

namespace cocycle_forge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::invalid_table: return "invalid-table";
    case ErrorCode::invalid_subgroup: return "invalid-subgroup";
    case ErrorCode::shape_error: return "shape-error";
    case ErrorCode::domain_mismatch: return "domain-mismatch";
    case ErrorCode::not_in_gstar: return "not-in-gstar";
    case ErrorCode::trivial_radical: return "trivial-radical";
    case ErrorCode::invalid_ideal: return "invalid-ideal";
    case ErrorCode::invalid_chain: return "invalid-chain";
    case ErrorCode::chain_too_short: return "chain-too-short";
    case ErrorCode::undefined_level: return "undefined-level";
    case ErrorCode::invalid_word: return "invalid-word";
    case ErrorCode::rho_in_n1: return "rho-in-n1";
    case ErrorCode::nothing_to_decompose: return "nothing-to-decompose";
    case ErrorCode::precondition: return "precondition-error";
    case ErrorCode::invalid_r: return "invalid-r";
    case ErrorCode::context_mismatch: return "context-mismatch";
    case ErrorCode::size_error: return "size-error";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::format_error: return "format-error";
    case ErrorCode::internal: return "internal-error";
  }
  return "unknown-error";
}

}  // namespace cocycle_forge
