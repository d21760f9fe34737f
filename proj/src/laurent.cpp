#include "walkprint/laurent.hpp"

#include "walkprint/errors.hpp"

namespace walkprint {

namespace {
const Integer kZero(0);
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  p.mul_terms(terms);
  return p;
}

const Integer& LaurentPoly::coeff(long k) const {
  if (k < lo_ || k > hi()) return kZero;
  return coef_[static_cast<std::size_t>(k - lo_)];
}

void LaurentPoly::mul_terms(const Terms& terms) {
  if (terms.empty()) fail(errc::validation_error, "empty term list");
  const long t_lo = terms.front().first;
  const long t_hi = terms.back().first;
  const long new_lo = lo_ + t_lo;
  const std::size_t new_size = coef_.size() + static_cast<std::size_t>(t_hi - t_lo);

  std::vector<Integer> out(new_size, Integer(0));
  for (const auto& [exp, value] : terms) {
    if (value == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(lo_ + exp - new_lo);
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (mpz_sgn(coef_[i].get_mpz_t()) == 0) continue;
      mpz_addmul(out[shift + i].get_mpz_t(), coef_[i].get_mpz_t(), value.get_mpz_t());
    }
  }
  lo_ = new_lo;
  coef_ = std::move(out);
  trim();
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out;
  out.lo_ = lo_ + other.lo_;
  out.coef_.assign(coef_.size() + other.coef_.size() - 1, Integer(0));
  for (std::size_t j = 0; j < other.coef_.size(); ++j) {
    if (mpz_sgn(other.coef_[j].get_mpz_t()) == 0) continue;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (mpz_sgn(coef_[i].get_mpz_t()) == 0) continue;
      mpz_addmul(out.coef_[i + j].get_mpz_t(), coef_[i].get_mpz_t(),
                 other.coef_[j].get_mpz_t());
    }
  }
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::power(const LaurentPoly& base, unsigned long n) {
  LaurentPoly result;
  LaurentPoly sq = base;
  while (n > 0) {
    if (n & 1UL) result = result * sq;
    n >>= 1UL;
    if (n > 0) sq = sq * sq;
  }
  return result;
}

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front + 1 < coef_.size() && mpz_sgn(coef_[front].get_mpz_t()) == 0) ++front;
  std::size_t back = coef_.size();
  while (back > front + 1 && mpz_sgn(coef_[back - 1].get_mpz_t()) == 0) --back;
  if (front > 0 || back < coef_.size()) {
    std::vector<Integer> kept(coef_.begin() + static_cast<long>(front),
                              coef_.begin() + static_cast<long>(back));
    coef_ = std::move(kept);
    lo_ += static_cast<long>(front);
  }
}

ScaledWalk scale_to_integers(const StepDistribution& w) {
  Integer denom(1);
  for (const auto& [step, p] : w.mass()) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), p.get_den().get_mpz_t());
  }
  ScaledWalk scaled;
  scaled.denom = denom;
  scaled.terms.reserve(w.mass().size());
  for (const auto& [step, p] : w.mass()) {
    scaled.terms.emplace_back(step, Integer(p.get_num() * (denom / p.get_den())));
  }
  return scaled;
}

}  // namespace walkprint
