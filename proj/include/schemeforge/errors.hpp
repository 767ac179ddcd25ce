#ifndef SCHEMEFORGE_ERRORS_HPP
#define SCHEMEFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schemeforge {

// Precondition failures are thrown; certified negative results (NotADS,
// NotDSRG, scheme violations, ...) are ordinary return values.
enum class Errc {
  not_prime,
  degree_zero,
  degree_too_small,
  field_too_large,
  division_by_zero,
  not_divisor,
  parity_condition,
  zero_element,
  singular_matrix,
  bad_congruence,
  c_not_a_subgroup,
  not_a_scheme,
  mismatched_n,
  bad_parameters,
  disconnected,
  too_large,
  asymmetric_for_graph6,
  bad_format,
  convention_mismatch,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace schemeforge

#endif
