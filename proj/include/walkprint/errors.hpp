#pragma once

#include <stdexcept>
#include <string>

namespace walkprint {

enum class errc {
  negative_probability,
  mass_exceeds_one,
  duplicate_step,
  empty_support,
  no_nonzero_step,
  parameters_not_normalizable,
  bound_needs_variance,
  quadrature_non_convergence,
  not_classifiable,
  infeasible_targets,
  non_primitive_solution,
  no_consistent_dimension,
  ambiguous_without_bound,
  io_error,
  parse_error,
  validation_error,
  cancelled,
};

// Stable PascalCase name, e.g. "MassExceedsOne". Used in CLI diagnostics.
const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace walkprint
