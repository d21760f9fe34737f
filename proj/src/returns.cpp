#include "walkprint/returns.hpp"

#include <cmath>

#include "walkprint/errors.hpp"
#include "walkprint/spectral.hpp"

namespace walkprint {

namespace {

void check_cancel(const CancelToken* cancel) {
  if (cancel && cancel->stop_requested()) fail(errc::cancelled, "computation cancelled");
}

Rational make_fraction(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

ReturnWalker::ReturnWalker(const StepDistribution& w) {
  ScaledWalk scaled = scale_to_integers(w);
  terms_ = std::move(scaled.terms);
  denom_ = std::move(scaled.denom);
  denom_pow_ = 1;
}

void ReturnWalker::advance() {
  poly_.mul_terms(terms_);
  denom_pow_ *= denom_;
  ++n_;
}

Rational ReturnWalker::return_probability() const {
  return make_fraction(poly_.coeff(0), denom_pow_);
}

Rational ReturnWalker::sum_of_squared_positions() const {
  Integer ssq(0);
  for (long k = poly_.lo(); k <= poly_.hi(); ++k) {
    const Integer& c = poly_.coeff(k);
    if (mpz_sgn(c.get_mpz_t()) != 0) mpz_addmul(ssq.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
  }
  return make_fraction(ssq, Integer(denom_pow_ * denom_pow_));
}

PositionDistribution ReturnWalker::positions() const {
  PositionDistribution dist;
  dist.n_steps = n_;
  for (long k = poly_.lo(); k <= poly_.hi(); ++k) {
    const Integer& c = poly_.coeff(k);
    if (mpz_sgn(c.get_mpz_t()) != 0) dist.mass.emplace(k, make_fraction(c, denom_pow_));
  }
  return dist;
}

PositionDistribution position_distribution(const StepDistribution& w, long n,
                                           const CancelToken* cancel) {
  if (n < 1) fail(errc::validation_error, "step count must be positive");
  check_cancel(cancel);
  ScaledWalk scaled = scale_to_integers(w);
  LaurentPoly poly = LaurentPoly::power(LaurentPoly::from_terms(scaled.terms),
                                        static_cast<unsigned long>(n));
  check_cancel(cancel);
  Integer denom_pow;
  mpz_pow_ui(denom_pow.get_mpz_t(), scaled.denom.get_mpz_t(), static_cast<unsigned long>(n));

  PositionDistribution dist;
  dist.n_steps = n;
  for (long k = poly.lo(); k <= poly.hi(); ++k) {
    const Integer& c = poly.coeff(k);
    if (mpz_sgn(c.get_mpz_t()) != 0) dist.mass.emplace(k, make_fraction(c, denom_pow));
  }
  return dist;
}

ReturnSequence return_sequence(const StepDistribution& w, long K, const CancelToken* cancel) {
  if (K < 1) fail(errc::validation_error, "sequence length must be positive");
  ReturnSequence seq;
  seq.values.reserve(static_cast<std::size_t>(K));
  seq.source = w;
  ReturnWalker walker(w);
  for (long n = 1; n <= K; ++n) {
    check_cancel(cancel);
    walker.advance();
    seq.values.push_back(walker.return_probability());
  }
  return seq;
}

ReturnSequence return_sequence_truncated(const StepDistribution& w, long K,
                                         const Rational& tail_mass, const CancelToken* cancel) {
  ReturnSequence seq = return_sequence(w, K, cancel);
  seq.exactness = Exactness::kTruncatedWithBound;
  std::vector<Rational> bounds;
  bounds.reserve(static_cast<std::size_t>(K));
  for (long n = 1; n <= K; ++n) bounds.push_back(Rational(n) * tail_mass);
  seq.per_index_bound = std::move(bounds);
  return seq;
}

GrowthDiagnostics growth_diagnostics(const ReturnSequence& seq, std::optional<Rational> sigma2) {
  if (seq.exactness != Exactness::kExact) {
    fail(errc::validation_error, "diagnostics need an exact sequence");
  }
  if (!sigma2) {
    if (!seq.source) fail(errc::bound_needs_variance, "no variance and no source walk");
    sigma2 = variance(*seq.source);  // rejects improper sources
  } else if (seq.source && !seq.source->proper()) {
    fail(errc::validation_error, "diagnostics need a proper source");
  }

  GrowthDiagnostics diag;
  const long K = seq.size();
  for (long n = 1; 2 * n <= K; ++n) {
    diag.even_roots.push_back(
        std::pow(to_double(seq.c(2 * n)), 1.0 / static_cast<double>(2 * n)));
  }
  for (long n = 1; n <= K; n += 2) {
    if (seq.c(n) != 0) diag.odd_all_zero = false;
  }
  for (long n = 1; 2 * n <= K; ++n) {
    Rational slack = 1 - *sigma2 / Rational(n * n);
    if (slack <= 0) continue;
    Rational bound = slack / Rational(2 * n * n + 1);
    diag.lower_bound_check.emplace_back(n, seq.c(2 * n) >= bound);
  }
  return diag;
}

std::optional<long> distinguishing_index(const StepDistribution& w1, const StepDistribution& w2,
                                         long K, const CancelToken* cancel) {
  if (!w1.proper() || !w2.proper()) {
    fail(errc::validation_error, "distinguishing probe needs proper walks");
  }
  ReturnWalker a(w1), b(w2);
  for (long n = 1; n <= K; ++n) {
    check_cancel(cancel);
    a.advance();
    b.advance();
    if (a.return_probability() != b.return_probability()) return n;
  }
  return std::nullopt;
}

}  // namespace walkprint
