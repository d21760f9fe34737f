#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkprint/cancel.hpp"
#include "walkprint/laurent.hpp"
#include "walkprint/rational.hpp"
#include "walkprint/walk.hpp"

namespace walkprint {

// Exact distribution of the n-step position sum.
struct PositionDistribution {
  long n_steps = 0;
  std::map<long, Rational> mass;  // r_{n,k}, nonzero entries only
};

enum class Exactness { kExact, kTruncatedWithBound };

// Return probabilities c_1..c_K of one walk. For subprobability sources the
// values are the truncated probabilities c_{m,n}; build them through
// return_sequence_truncated to carry the per-index bound n * tail_mass.
struct ReturnSequence {
  std::vector<Rational> values;  // values[i] = c_{i+1}
  std::optional<StepDistribution> source;
  Exactness exactness = Exactness::kExact;
  std::optional<std::vector<Rational>> per_index_bound;

  long size() const { return static_cast<long>(values.size()); }
  const Rational& c(long n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

// Full coefficient vector of (sum a_k t^k)^n, by square-and-multiply.
PositionDistribution position_distribution(const StepDistribution& w, long n,
                                           const CancelToken* cancel = nullptr);

// c_1..c_K in one incremental pass (one convolution per index).
ReturnSequence return_sequence(const StepDistribution& w, long K,
                               const CancelToken* cancel = nullptr);

// Same values for a truncated walk, tagged with bound_n = n * tail_mass.
ReturnSequence return_sequence_truncated(const StepDistribution& w, long K,
                                         const Rational& tail_mass,
                                         const CancelToken* cancel = nullptr);

// Incremental engine: after advance() the walker holds the full n-step
// position row. Shared by the sequence builders and the bulk test drivers.
class ReturnWalker {
 public:
  explicit ReturnWalker(const StepDistribution& w);

  void advance();
  long n() const { return n_; }

  Rational return_probability() const;      // c_n = r_{n,0}
  Rational sum_of_squared_positions() const;  // sum_k r_{n,k}^2
  PositionDistribution positions() const;

 private:
  LaurentPoly poly_;
  LaurentPoly::Terms terms_;
  Integer denom_;
  Integer denom_pow_;
  long n_ = 0;
};

struct GrowthDiagnostics {
  std::vector<double> even_roots;  // c_{2n}^{1/(2n)} for 2n <= K
  bool odd_all_zero = true;
  // (n, pass) for every n with 2n <= K and sigma^2/n^2 < 1:
  // pass <=> c_{2n} >= (1 - sigma^2/n^2) / (2n^2 + 1), compared exactly.
  std::vector<std::pair<long, bool>> lower_bound_check;
};

// Requires an exact sequence from a proper source. The Chebyshev bound needs
// the walk variance; pass it in, or leave it out to have it derived from the
// embedded source walk. Throws BoundNeedsVariance when neither is available.
GrowthDiagnostics growth_diagnostics(const ReturnSequence& seq,
                                     std::optional<Rational> sigma2 = std::nullopt);

// Smallest n <= K with c_n(w1) != c_n(w2), compared exactly.
std::optional<long> distinguishing_index(const StepDistribution& w1, const StepDistribution& w2,
                                         long K, const CancelToken* cancel = nullptr);

}  // namespace walkprint
