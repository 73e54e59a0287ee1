#include "rds/error.hpp"

namespace rds {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::unfactored_residue: return "unfactored_residue";
    case Errc::not_rds_matrix: return "not_rds_matrix";
    case Errc::mixed_field: return "mixed_field";
    case Errc::not_planar: return "not_planar";
    case Errc::not_rds: return "not_rds";
    case Errc::line_is_component: return "line_is_component";
    case Errc::use_inversion_first: return "use_inversion_first";
    case Errc::irrational_reflection: return "irrational_reflection";
    case Errc::precondition: return "precondition";
    case Errc::hypothesis_violation: return "hypothesis_violation";
    case Errc::not_ample: return "not_ample";
    case Errc::duplicate_base: return "duplicate_base";
    case Errc::not_equidistant: return "not_equidistant";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

}  // namespace rds
