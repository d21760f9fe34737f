#include "walkprint/walk.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "walkprint/errors.hpp"

namespace walkprint {

Rational StepDistribution::prob(long step) const {
  auto it = mass_.find(step);
  return it == mass_.end() ? Rational(0) : it->second;
}

long StepDistribution::max_step_size() const {
  return std::max(std::labs(min_step()), std::labs(max_step()));
}

std::string StepDistribution::key() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [step, p] : mass_) {
    if (!first) os << ',';
    first = false;
    os << step << ':' << format_rational(p);
  }
  os << '}';
  return os.str();
}

StepDistribution new_walk(const std::vector<std::pair<long, Rational>>& entries) {
  StepDistribution::Mass mass;
  Rational total(0);
  for (const auto& [step, p] : entries) {
    if (p < 0) {
      fail(errc::negative_probability,
           "step " + std::to_string(step) + " has mass " + format_rational(p));
    }
    if (p == 0) continue;
    if (!mass.emplace(step, p).second) {
      fail(errc::duplicate_step, "step " + std::to_string(step) + " appears twice");
    }
    total += p;
  }
  if (mass.empty()) fail(errc::empty_support, "no step carries positive mass");
  if (total > 1) fail(errc::mass_exceeds_one, "masses sum to " + format_rational(total));
  return StepDistribution(std::move(mass), total, total == 1);
}

WalkClass classify(const StepDistribution& w) {
  WalkClass cls;
  cls.symmetric = true;
  long gcd = 0;
  for (const auto& [step, p] : w.mass()) {
    cls.step_sizes.insert(std::labs(step));
    if (step != 0) gcd = std::gcd(gcd, std::labs(step));
    if (w.prob(-step) != p) cls.symmetric = false;
  }
  cls.gcd_nonzero_steps = gcd;
  cls.primitive = gcd == 1;

  if (cls.symmetric && cls.primitive && w.proper()) {
    bool has_even = false;
    for (long s : cls.step_sizes) {
      if (s % 2 == 0) has_even = true;  // step size 0 counts as even
    }
    cls.walk_type = has_even ? WalkType::kType1 : WalkType::kType2;
  } else {
    cls.walk_type = WalkType::kNotApplicable;
  }
  return cls;
}

StepDistribution dilate(const StepDistribution& w, long c) {
  if (c < 1) fail(errc::validation_error, "dilation factor must be positive");
  if (!w.proper()) fail(errc::validation_error, "dilate needs a proper walk");
  std::vector<std::pair<long, Rational>> entries;
  entries.reserve(w.mass().size());
  for (const auto& [step, p] : w.mass()) entries.emplace_back(step * c, p);
  return new_walk(entries);
}

Contraction contract(const StepDistribution& w) {
  if (!w.proper()) fail(errc::validation_error, "contract needs a proper walk");
  long gcd = 0;
  for (const auto& [step, p] : w.mass()) {
    if (step != 0) gcd = std::gcd(gcd, std::labs(step));
  }
  if (gcd == 0) fail(errc::no_nonzero_step, "walk is concentrated at 0");
  std::vector<std::pair<long, Rational>> entries;
  entries.reserve(w.mass().size());
  for (const auto& [step, p] : w.mass()) entries.emplace_back(step / gcd, p);
  return Contraction{new_walk(entries), gcd};
}

TruncatedWalk truncate_geometric(const Rational& ratio, const Rational& center_mass, long m) {
  if (m < 1) fail(errc::validation_error, "truncation bound must be positive");
  if (ratio <= 0 || ratio >= 1 || center_mass < 0 || center_mass >= 1) {
    fail(errc::parameters_not_normalizable,
         "need ratio in (0,1) and center mass in [0,1), got ratio = " + format_rational(ratio) +
             ", center = " + format_rational(center_mass));
  }

  // The untruncated walk has a_{+-k} = A r^k with 2A r/(1-r) = 1 - center.
  Rational amplitude = (1 - center_mass) * (1 - ratio) / (2 * ratio);

  std::vector<std::pair<long, Rational>> entries;
  if (center_mass > 0) entries.emplace_back(0, center_mass);
  Rational rk = ratio;
  Rational tail_factor(1);
  for (long k = 1; k <= m; ++k) {
    Rational p = amplitude * rk;
    entries.emplace_back(k, p);
    entries.emplace_back(-k, p);
    rk *= ratio;
    tail_factor *= ratio;
  }
  Rational tail = (1 - center_mass) * tail_factor;  // (1 - center) r^m
  return TruncatedWalk{new_walk(entries), tail};
}

}  // namespace walkprint
