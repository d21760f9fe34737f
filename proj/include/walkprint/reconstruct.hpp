#pragma once

#include <optional>
#include <vector>

#include "walkprint/rational.hpp"
#include "walkprint/walk.hpp"

namespace walkprint {

struct ReconstructionProblem {
  std::vector<Rational> targets;  // c_1..c_K
  long support_bound = 1;         // m: unknowns are a_0, a_1..a_m
  double tolerance = 1e-8;        // on the per-index residuals
  bool require_primitive = false;
  // Extra deterministic starts tried only when the primary batch of 17
  // (the a_0 = c_1 seed plus 16 simplex samples) leaves nothing within
  // tolerance. Candidate screens that expect failure set this to 0.
  int fallback_starts = 64;
};

struct ReconstructionCertificate {
  bool symmetric = true;  // by construction
  bool primitive = false;
  bool proper = false;
};

struct ReconstructionResult {
  StepDistribution walk;          // exact embedding of the fitted parameters
  std::vector<double> params;     // a_0..a_m
  std::vector<double> residuals;  // |c_n(params) - target_n|
  double max_residual = 0.0;
  double objective = 0.0;         // sum of squared residuals
  ReconstructionCertificate certificate;
  bool converged = false;
  int best_start_index = -1;
  double condition_number = 0.0;  // sqrt of the J^T J spectral condition at the fit
};

// Least-squares fit of a symmetric walk on steps {0, +-1..+-m} to the target
// return probabilities, over the simplex a_k >= 0, a_0 + 2 sum a_k = 1.
// Projected Gauss-Newton with Levenberg damping, multi-started from the
// a_0 = c_1 seed plus deterministic simplex samples.
ReconstructionResult reconstruct(const ReconstructionProblem& problem);

struct VerificationReport {
  bool rounding_applied = false;  // every parameter had a small-denominator
                                  // rational within 1e-9
  bool exact_match = false;       // rounded walk reproduces all targets exactly
  std::optional<StepDistribution> rounded_walk;
  std::vector<Rational> recomputed;  // c_1..c_recheck_to of the verified walk
  std::vector<double> residuals;     // |c_n - target_n| for n <= K
  double max_residual = 0.0;
};

// Recomputes the recovered walk's return probabilities exactly up to
// recheck_to (>= K) after continued-fraction rounding of the parameters to
// denominators <= 10^6.
VerificationReport verify(const ReconstructionResult& result, const ReconstructionProblem& problem,
                          long recheck_to);

// Exact objective sum_n (c_n(walk) - target_n)^2 for a rational walk.
Rational exact_objective(const StepDistribution& walk, const std::vector<Rational>& targets);

// Forward map and analytic Jacobian in doubles, exposed for the
// finite-difference cross-checks: c[n-1] = c_n of the symmetric walk with
// parameters a_0..a_m, jac[n-1][k] = dc_n/da_k.
struct ForwardEvaluation {
  std::vector<double> c;
  std::vector<std::vector<double>> jac;
};
ForwardEvaluation forward_returns(const std::vector<double>& params, long K, bool with_jacobian);

}  // namespace walkprint
