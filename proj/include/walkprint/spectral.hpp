#pragma once

#include <utility>
#include <vector>

#include "walkprint/rational.hpp"
#include "walkprint/returns.hpp"
#include "walkprint/walk.hpp"

namespace walkprint {

// f(x) = a_0 + 2 sum_{k>=1} a_k cos(kx) of a symmetric walk, with the
// coefficients lowered to doubles once at construction.
struct CharacterFunction {
  StepDistribution source;
  double a0 = 0.0;
  std::vector<std::pair<long, double>> cos_terms;  // (k, 2 a_k), k >= 1
};

CharacterFunction character_function(const StepDistribution& w);

double eval_f(const CharacterFunction& cf, double x);

// (1/2pi) Int_{-pi}^{pi} f(x)^n dx by adaptive composite Gauss-Legendre with
// interval bisection on [0, pi]. Guarantees |result - c_n| <= tol or throws
// QuadratureNonConvergence. err_estimate, when given, receives the summed
// panel error estimate.
double quadrature_return(const CharacterFunction& cf, long n, double tol,
                         double* err_estimate = nullptr);

struct Extremum {
  double sup_abs_f;
  double arg;
};

// Supremum of |f| over the fundamental half-domain minus the exclusion
// neighborhood of the |f| = 1 lattice: [delta, pi] for walks with an even
// step size, [delta, pi/2] when all step sizes are odd. Grid scan plus
// golden-section refinement of the best cell.
Extremum extrema_scan(const CharacterFunction& cf, double exclusion_radius, long grid_points);

// Exact sum k^2 a_k of a proper walk.
Rational variance(const StepDistribution& w);

struct DecayGap {
  double measured;
  double bound;
};

// Tail mass of the return integral outside [0, epsilon]: for even-step walks
// measured = |c_n - (1/pi) Int_0^eps f^n|, bound = alpha^n with
// alpha = sup |f| on [eps, pi]; with all-odd step sizes the exponent is 2n,
// the weight 2/pi and alpha is taken on [eps, pi/2].
DecayGap decay_gap(const CharacterFunction& cf, double epsilon, long n);

// Same, with the scan supremum and the exact return probability supplied by
// the caller (bulk drivers reuse them across indices).
DecayGap decay_gap(const CharacterFunction& cf, double epsilon, long n, double alpha,
                   double exact_cn);

struct BetaRatio {
  double beta_value;  // B(x, y) via the log-gamma identity
  double asymptote;   // Gamma(y) * x^(-y)
  double ratio;       // beta_value / asymptote, -> 1 as x -> infinity
};

BetaRatio beta_asymptotic_ratio(double x, double y);

struct NearExtremum {
  double exclusion_radius;
  double x;
  double abs_f;
};

struct QuadratureCheck {
  long n;
  double value;
  double error_estimate;
};

struct DecayRecord {
  long n;
  double measured;
  double bound;
};

struct SpectralReport {
  Rational variance;
  std::vector<NearExtremum> near_extrema;
  std::vector<QuadratureCheck> quadrature_values;
  std::vector<DecayRecord> decay_gaps;
  double alpha = 0.0;    // sup |f| used by the decay bounds
  double epsilon = 0.0;
};

struct SpectralOptions {
  std::vector<double> exclusion_radii{0.05, 0.2, 0.5};
  long quad_max_n = 8;
  double quad_tol = 1e-10;
  double epsilon = 0.5;
  std::vector<long> gap_indices{2, 5, 10, 15};
  long grid_points = 4096;
};

// Aggregated report for a symmetric primitive proper walk. Asserts
// measured <= bound on every decay record.
SpectralReport spectral_report(const StepDistribution& w, const SpectralOptions& options = {});

}  // namespace walkprint
