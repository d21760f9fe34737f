#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "walkprint/rational.hpp"

namespace walkprint {

// Finitely supported assignment of nonnegative rational mass to integer
// steps. `proper()` means the masses sum to exactly 1; totals below 1 are
// legal and represent truncated walks. Immutable after construction.
class StepDistribution {
 public:
  using Mass = std::map<long, Rational>;

  const Mass& mass() const { return mass_; }
  const Rational& total() const { return total_; }
  bool proper() const { return proper_; }

  // Mass at `step`; exact 0 when the step is not in the support.
  Rational prob(long step) const;

  long min_step() const { return mass_.begin()->first; }
  long max_step() const { return mass_.rbegin()->first; }
  long max_step_size() const;

  bool operator==(const StepDistribution& other) const { return mass_ == other.mass_; }
  bool operator!=(const StepDistribution& other) const { return !(*this == other); }

  // Canonical "{step:mass,...}" string, ascending steps.
  std::string key() const;

 private:
  friend StepDistribution new_walk(const std::vector<std::pair<long, Rational>>&);
  StepDistribution(Mass mass, Rational total, bool proper)
      : mass_(std::move(mass)), total_(std::move(total)), proper_(proper) {}

  Mass mass_;
  Rational total_;
  bool proper_;
};

enum class WalkType { kType1, kType2, kNotApplicable };

struct WalkClass {
  bool symmetric = false;
  bool primitive = false;
  WalkType walk_type = WalkType::kNotApplicable;
  std::set<long> step_sizes;     // {|n| : a_n != 0}, includes 0 when a_0 != 0
  long gcd_nonzero_steps = 0;    // 0 when there is no nonzero step
};

// Validates and normalizes entries. Zero-mass entries are dropped first;
// duplicates among the rest are rejected.
StepDistribution new_walk(const std::vector<std::pair<long, Rational>>& entries);

WalkClass classify(const StepDistribution& w);

// Moves the mass at step n to step c*n. Requires a proper walk and c >= 1.
StepDistribution dilate(const StepDistribution& w, long c);

struct Contraction {
  StepDistribution walk;
  long factor;  // gcd of the nonzero step sizes of the input
};

// Inverse of dilate: divides every step by the gcd of the nonzero steps.
Contraction contract(const StepDistribution& w);

struct TruncatedWalk {
  StepDistribution walk;  // subprobability: total = 1 - tail_mass
  Rational tail_mass;     // Pr[|x_1| > m] of the untruncated walk, exact
};

// Compact surrogate of the symmetric geometric-tail walk with
// a_0 = center_mass and a_{+-k} proportional to ratio^k, cut at |k| <= m.
TruncatedWalk truncate_geometric(const Rational& ratio, const Rational& center_mass, long m);

}  // namespace walkprint
