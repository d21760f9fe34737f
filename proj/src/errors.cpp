#include "walkprint/errors.hpp"

namespace walkprint {

const char* errc_name(errc code) {
  switch (code) {
    case errc::negative_probability: return "NegativeProbability";
    case errc::mass_exceeds_one: return "MassExceedsOne";
    case errc::duplicate_step: return "DuplicateStep";
    case errc::empty_support: return "EmptySupport";
    case errc::no_nonzero_step: return "NoNonzeroStep";
    case errc::parameters_not_normalizable: return "ParametersNotNormalizable";
    case errc::bound_needs_variance: return "BoundNeedsVariance";
    case errc::quadrature_non_convergence: return "QuadratureNonConvergence";
    case errc::not_classifiable: return "NotClassifiable";
    case errc::infeasible_targets: return "InfeasibleTargets";
    case errc::non_primitive_solution: return "NonPrimitiveSolution";
    case errc::no_consistent_dimension: return "NoConsistentDimension";
    case errc::ambiguous_without_bound: return "AmbiguousWithoutBound";
    case errc::io_error: return "IoError";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::cancelled: return "Cancelled";
  }
  return "UnknownError";
}

}  // namespace walkprint
