#include "walkprint/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "walkprint/errors.hpp"

namespace walkprint {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 15-point Gauss-Legendre rule on [-1, 1], positive half (node 0 first).
constexpr double kGlNodes[8] = {
    0.0000000000000000000, 0.2011940939974345223, 0.3941513470775633699,
    0.5709721726085388475, 0.7244177313601700474, 0.8482065834104272162,
    0.9372733924007059043, 0.9879925180204854284};
constexpr double kGlWeights[8] = {
    0.2025782419255612729, 0.1984314853271115765, 0.1861610000155622110,
    0.1662692058169939336, 0.1395706779261543144, 0.1071592204671719350,
    0.0703660474881081247, 0.0307532419961172684};

double ipow(double base, long n) {
  double result = 1.0;
  double sq = base;
  unsigned long e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1UL) result *= sq;
    e >>= 1UL;
    if (e > 0) sq *= sq;
  }
  return result;
}

template <typename F>
double gl15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = kGlWeights[0] * f(mid);
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGlNodes[i];
    acc += kGlWeights[i] * (f(mid + dx) + f(mid - dx));
  }
  return acc * half;
}

struct QuadBudget {
  long panels_left;
  double err_sum = 0.0;
};

template <typename F>
double adaptive(const F& f, double a, double b, double whole, double tol, int depth,
                QuadBudget& budget) {
  if (--budget.panels_left < 0) {
    fail(errc::quadrature_non_convergence, "panel budget exhausted");
  }
  const double mid = 0.5 * (a + b);
  const double left = gl15(f, a, mid);
  const double right = gl15(f, mid, b);
  const double err = std::fabs(whole - left - right);
  if (err <= tol || depth >= 48) {
    budget.err_sum += err;
    return left + right;
  }
  return adaptive(f, a, mid, left, 0.5 * tol, depth + 1, budget) +
         adaptive(f, mid, b, right, 0.5 * tol, depth + 1, budget);
}

// Integral of f over [a, b] with summed error estimate <= tol.
template <typename F>
double integrate(const F& f, double a, double b, double tol, double* err_estimate) {
  QuadBudget budget{1L << 15};
  const double result = adaptive(f, a, b, gl15(f, a, b), tol, 0, budget);
  if (err_estimate) *err_estimate = budget.err_sum;
  return result;
}

template <typename F>
double golden_max(const F& f, double lo, double hi, int iters = 90) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-14; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

// Half-period of the scan domain: |f| = 1 only at multiples of 2 pi for
// Type 1 and of pi for Type 2, and |f| is even, so [0, pi] resp. [0, pi/2]
// is a fundamental domain.
double scan_limit(const StepDistribution& w) {
  WalkClass cls = classify(w);
  if (cls.walk_type == WalkType::kNotApplicable) {
    fail(errc::not_classifiable, "walk is not symmetric, primitive and proper");
  }
  return cls.walk_type == WalkType::kType1 ? kPi : 0.5 * kPi;
}

}  // namespace

CharacterFunction character_function(const StepDistribution& w) {
  if (!classify(w).symmetric) {
    fail(errc::validation_error, "character function needs a symmetric walk");
  }
  CharacterFunction cf;
  cf.source = w;
  cf.a0 = to_double(w.prob(0));
  for (const auto& [step, p] : w.mass()) {
    if (step > 0) cf.cos_terms.emplace_back(step, 2.0 * to_double(p));
  }
  return cf;
}

double eval_f(const CharacterFunction& cf, double x) {
  double acc = cf.a0;
  for (const auto& [k, coeff] : cf.cos_terms) acc += coeff * std::cos(k * x);
  return acc;
}

double quadrature_return(const CharacterFunction& cf, long n, double tol, double* err_estimate) {
  if (n < 0) fail(errc::validation_error, "index must be nonnegative");
  if (tol <= 0) fail(errc::validation_error, "tolerance must be positive");
  if (n == 0) {
    if (err_estimate) *err_estimate = 0.0;
    return 1.0;
  }
  auto integrand = [&](double x) { return ipow(eval_f(cf, x), n); };
  // f is even, so (1/2pi) Int_{-pi}^{pi} = (1/pi) Int_0^{pi}.
  double err = 0.0;
  const double integral = integrate(integrand, 0.0, kPi, 0.5 * tol * kPi, &err);
  if (err_estimate) *err_estimate = err / kPi;
  return integral / kPi;
}

Extremum extrema_scan(const CharacterFunction& cf, double exclusion_radius, long grid_points) {
  const double limit = scan_limit(cf.source);
  if (!(exclusion_radius > 0.0) || !(exclusion_radius < limit)) {
    fail(errc::validation_error, "exclusion radius must lie in (0, period/2)");
  }
  if (grid_points < 1) fail(errc::validation_error, "need at least one grid point");

  auto abs_f = [&](double x) { return std::fabs(eval_f(cf, x)); };

  if (grid_points == 1) return Extremum{abs_f(exclusion_radius), exclusion_radius};

  const double step = (limit - exclusion_radius) / static_cast<double>(grid_points - 1);
  double best_x = exclusion_radius;
  double best = abs_f(exclusion_radius);
  for (long i = 1; i < grid_points; ++i) {
    const double x = exclusion_radius + step * static_cast<double>(i);
    const double v = abs_f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }

  const double lo = std::max(exclusion_radius, best_x - step);
  const double hi = std::min(limit, best_x + step);
  const double refined_x = golden_max(abs_f, lo, hi);
  if (abs_f(refined_x) > best) {
    best = abs_f(refined_x);
    best_x = refined_x;
  }
  return Extremum{best, best_x};
}

Rational variance(const StepDistribution& w) {
  if (!w.proper()) fail(errc::validation_error, "variance needs a proper walk");
  Rational acc(0);
  for (const auto& [step, p] : w.mass()) acc += Rational(step * step) * p;
  return acc;
}

DecayGap decay_gap(const CharacterFunction& cf, double epsilon, long n, double alpha,
                   double exact_cn) {
  const double limit = scan_limit(cf.source);
  if (!(epsilon > 0.0) || !(epsilon < limit)) {
    fail(errc::validation_error, "epsilon must lie inside the fundamental half-period");
  }
  if (n < 1) fail(errc::validation_error, "index must be positive");

  const bool type1 = classify(cf.source).walk_type == WalkType::kType1;
  const long exponent = type1 ? n : 2 * n;
  const double weight = type1 ? 1.0 / kPi : 2.0 / kPi;

  auto integrand = [&](double x) { return ipow(eval_f(cf, x), exponent); };
  const double head = weight * integrate(integrand, 0.0, epsilon, 1e-13, nullptr);
  return DecayGap{std::fabs(exact_cn - head), ipow(alpha, exponent)};
}

DecayGap decay_gap(const CharacterFunction& cf, double epsilon, long n) {
  const bool type1 = classify(cf.source).walk_type == WalkType::kType1;  // validates
  const long exponent = type1 ? n : 2 * n;
  const double alpha = extrema_scan(cf, epsilon, 4096).sup_abs_f;
  const double exact_cn = to_double(return_sequence(cf.source, exponent).c(exponent));
  return decay_gap(cf, epsilon, n, alpha, exact_cn);
}

BetaRatio beta_asymptotic_ratio(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) fail(errc::validation_error, "beta arguments must be positive");
  const double log_beta = std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
  const double log_asym = std::lgamma(y) - y * std::log(x);
  return BetaRatio{std::exp(log_beta), std::exp(log_asym), std::exp(log_beta - log_asym)};
}

SpectralReport spectral_report(const StepDistribution& w, const SpectralOptions& options) {
  CharacterFunction cf = character_function(w);
  SpectralReport report;
  report.variance = variance(w);
  report.epsilon = options.epsilon;

  for (double delta : options.exclusion_radii) {
    Extremum ext = extrema_scan(cf, delta, options.grid_points);
    report.near_extrema.push_back(NearExtremum{delta, ext.arg, ext.sup_abs_f});
  }

  if (options.quad_max_n >= 1) {
    ReturnSequence exact = return_sequence(w, options.quad_max_n);
    for (long n = 1; n <= options.quad_max_n; ++n) {
      double err = 0.0;
      const double approx = quadrature_return(cf, n, options.quad_tol, &err);
      report.quadrature_values.push_back(QuadratureCheck{n, approx, err});
      if (std::fabs(approx - to_double(exact.c(n))) > options.quad_tol) {
        throw std::logic_error("quadrature drifted past its tolerance");
      }
    }
  }

  report.alpha = extrema_scan(cf, options.epsilon, options.grid_points).sup_abs_f;
  if (!options.gap_indices.empty()) {
    const bool type1 = classify(w).walk_type == WalkType::kType1;
    long max_exp = 0;
    for (long n : options.gap_indices) max_exp = std::max(max_exp, type1 ? n : 2 * n);
    ReturnSequence exact = return_sequence(w, max_exp);
    for (long n : options.gap_indices) {
      const long e = type1 ? n : 2 * n;
      DecayGap gap = decay_gap(cf, options.epsilon, n, report.alpha, to_double(exact.c(e)));
      if (gap.measured > gap.bound) {
        throw std::logic_error("decay gap exceeded its bound");
      }
      report.decay_gaps.push_back(DecayRecord{n, gap.measured, gap.bound});
    }
  }
  return report;
}

}  // namespace walkprint
