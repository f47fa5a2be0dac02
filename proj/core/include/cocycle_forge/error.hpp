#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cocycle_forge {

enum class ErrorCode {
  invalid_order,
  invalid_table,
  invalid_subgroup,
  shape_error,
  domain_mismatch,
  not_in_gstar,
  trivial_radical,
  invalid_ideal,
  invalid_chain,
  chain_too_short,
  undefined_level,
  invalid_word,
  rho_in_n1,
  nothing_to_decompose,
  precondition,
  invalid_r,
  context_mismatch,
  size_error,
  parse_error,
  format_error,
  internal,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported as this exception; `code()` tells
/// callers (notably the CLI exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Internal invariant guard. Throws ErrorCode::internal.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::internal, what);
}

}  // namespace cocycle_forge
