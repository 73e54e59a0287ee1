#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rds {

/// Failure categories shared by every module. The CLI maps these onto
/// "violation" (mathematically false) or "error" (bad input).
enum class Errc {
  domain,
  unfactored_residue,
  not_rds_matrix,
  mixed_field,
  not_planar,
  not_rds,
  line_is_component,
  use_inversion_first,
  irrational_reflection,
  precondition,
  hypothesis_violation,
  not_ample,
  duplicate_base,
  not_equidistant,
  invalid_argument,
  parse,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rds
