#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gral {

enum class ErrorCode {
  non_unit,
  ring_mismatch,
  invalid_category,
  unknown_morphism,
  algebra_mismatch,
  field_required,
  invalid_system,
  not_a_functor,
  no_unit,
  not_commutative,
  not_a_homomorphism,
  too_large,
  unknown_entry,
  bad_params,
  invalid_input,
};

/// Stable name used in JSON reports, e.g. "FieldRequired".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gral
