#include "gral/error.hpp"

namespace gral {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_unit: return "NonUnit";
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::invalid_category: return "InvalidCategory";
    case ErrorCode::unknown_morphism: return "UnknownMorphism";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::field_required: return "FieldRequired";
    case ErrorCode::invalid_system: return "InvalidSystem";
    case ErrorCode::not_a_functor: return "NotAFunctor";
    case ErrorCode::no_unit: return "NoUnit";
    case ErrorCode::not_commutative: return "NotCommutative";
    case ErrorCode::not_a_homomorphism: return "NotAHomomorphism";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::unknown_entry: return "UnknownEntry";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gral
