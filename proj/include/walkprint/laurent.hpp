#pragma once

#include <utility>
#include <vector>

#include "walkprint/rational.hpp"
#include "walkprint/walk.hpp"

namespace walkprint {

// Laurent polynomial with exact integer coefficients, stored as a dense
// window [lo, hi]. Coefficients outside the window are zero.
class LaurentPoly {
 public:
  using Terms = std::vector<std::pair<long, Integer>>;  // ascending exponents

  LaurentPoly() : lo_(0), coef_(1, Integer(1)) {}  // the constant 1

  static LaurentPoly from_terms(const Terms& terms);

  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(coef_.size()) - 1; }
  const Integer& coeff(long k) const;

  // One convolution step: *this *= sum of terms. Terms must be nonempty.
  void mul_terms(const Terms& terms);

  LaurentPoly operator*(const LaurentPoly& other) const;

  // Square-and-multiply. power(p, 0) is the constant 1.
  static LaurentPoly power(const LaurentPoly& base, unsigned long n);

 private:
  void trim();

  long lo_;
  std::vector<Integer> coef_;
};

// Integer numerators of a walk over one common positive denominator.
struct ScaledWalk {
  LaurentPoly::Terms terms;  // ascending steps, all numerators > 0
  Integer denom;
};

ScaledWalk scale_to_integers(const StepDistribution& w);

}  // namespace walkprint
