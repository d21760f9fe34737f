#include "walkprint/rep_bridge.hpp"

#include <numeric>
#include <stdexcept>

#include "walkprint/errors.hpp"
#include "walkprint/laurent.hpp"
#include "walkprint/reconstruct.hpp"
#include "walkprint/returns.hpp"

namespace walkprint {

namespace {

LaurentPoly::Terms rep_terms(const WeightDecomposition& rep) {
  LaurentPoly::Terms terms;
  terms.reserve(rep.mult.size());
  for (const auto& [weight, count] : rep.mult) terms.emplace_back(weight, count);
  return terms;
}

long weight_gcd(const WeightDecomposition& rep) {
  long gcd = 0;
  for (const auto& [weight, count] : rep.mult) {
    if (weight != 0) gcd = std::gcd(gcd, std::labs(weight));
  }
  return gcd;
}

// ceil(value^(1/k)) for value >= 1.
Integer ceil_root(const Integer& value, unsigned long k) {
  Integer root;
  const int exact = mpz_root(root.get_mpz_t(), value.get_mpz_t(), k);
  if (!exact) root += 1;
  return root;
}

// floor((num/den)^(1/k)) for num >= 0, den >= 1.
Integer floor_root_of_fraction(const Integer& num, const Integer& den, unsigned long k) {
  Integer q = num / den;
  Integer root;
  mpz_root(root.get_mpz_t(), q.get_mpz_t(), k);
  // q <= num/den, so the true root may be one higher.
  for (;;) {
    Integer next_pow;
    Integer next = root + 1;
    mpz_pow_ui(next_pow.get_mpz_t(), next.get_mpz_t(), k);
    if (next_pow * den <= num) {
      root = next;
    } else {
      break;
    }
  }
  return root;
}

}  // namespace

Integer WeightDecomposition::dim() const {
  Integer n(0);
  for (const auto& [weight, count] : mult) n += count;
  return n;
}

WeightDecomposition make_rep(const std::vector<std::pair<long, Integer>>& weights) {
  WeightDecomposition rep;
  for (const auto& [weight, count] : weights) {
    if (count < 0) fail(errc::validation_error, "negative multiplicity");
    if (count == 0) continue;
    if (!rep.mult.emplace(weight, count).second) {
      fail(errc::validation_error, "weight " + std::to_string(weight) + " appears twice");
    }
  }
  if (rep.mult.empty()) fail(errc::validation_error, "no weight carries multiplicity");
  return rep;
}

RepValidation validate_rep(const WeightDecomposition& rep) {
  RepValidation v;
  v.self_dual = true;
  for (const auto& [weight, count] : rep.mult) {
    auto it = rep.mult.find(-weight);
    if (it == rep.mult.end() || it->second != count) v.self_dual = false;
  }
  v.faithful = weight_gcd(rep) == 1;
  return v;
}

StepDistribution rep_to_walk(const WeightDecomposition& rep) {
  const Integer n = rep.dim();
  std::vector<std::pair<long, Rational>> entries;
  entries.reserve(rep.mult.size());
  for (const auto& [weight, count] : rep.mult) {
    Rational p(count, n);
    p.canonicalize();
    entries.emplace_back(weight, p);
  }
  return new_walk(entries);
}

WeightDecomposition walk_to_rep(const StepDistribution& w) {
  if (!w.proper()) fail(errc::validation_error, "only proper walks embed as representations");
  ScaledWalk scaled = scale_to_integers(w);
  std::vector<std::pair<long, Integer>> weights(scaled.terms.begin(), scaled.terms.end());
  return make_rep(weights);
}

InvariantDimensionSequence invariant_dims(const WeightDecomposition& rep, long K) {
  if (K < 1) fail(errc::validation_error, "sequence length must be positive");
  const LaurentPoly::Terms terms = rep_terms(rep);

  InvariantDimensionSequence out;
  out.dims.reserve(static_cast<std::size_t>(K));
  LaurentPoly poly;
  for (long n = 1; n <= K; ++n) {
    poly.mul_terms(terms);
    out.dims.push_back(poly.coeff(0));
  }

  // d_n = N^n c_n, with c_n recomputed through the rational walk engine.
  const Integer n_dim = rep.dim();
  ReturnSequence seq = return_sequence(rep_to_walk(rep), K);
  Integer n_pow(1);
  for (long n = 1; n <= K; ++n) {
    n_pow *= n_dim;
    Rational lhs(out.d(n), n_pow);
    lhs.canonicalize();
    if (lhs != seq.c(n)) {
      throw std::logic_error("invariant dimension identity d_n = N^n c_n failed");
    }
  }
  return out;
}

WeightDecomposition dims_to_rep(const InvariantDimensionSequence& dims, long support_bound) {
  const long K = dims.size();
  const long m = support_bound;
  if (m < 1) fail(errc::validation_error, "support bound must be positive");
  if (K < 2 * m + 4) {
    fail(errc::validation_error,
         "need at least 2 * support_bound + 4 dimensions, got " + std::to_string(K));
  }
  for (const Integer& d : dims.dims) {
    if (d < 0) fail(errc::validation_error, "invariant dimensions are nonnegative");
  }

  // Every d_n <= N^n, so N >= ceil(d_n^(1/n)).
  Integer lower(1);
  for (long n = 1; n <= K; ++n) {
    if (dims.d(n) <= 0) continue;
    Integer cand = ceil_root(dims.d(n), static_cast<unsigned long>(n));
    if (cand > lower) lower = cand;
  }

  // Chebyshev upper end: c_{2n} >= (1 - sigma^2/n^2)/(2n^2 + 1) with the
  // conservative sigma^2 <= m^2 gives
  // N^{2n} <= d_{2n} (2n^2 + 1) n^2 / (n^2 - m^2) for every n > m.
  bool have_upper = false;
  Integer upper(0);
  for (long n = m + 1; 2 * n <= K; ++n) {
    const Integer num = dims.d(2 * n) * Integer(2 * n * n + 1) * Integer(n * n);
    const Integer den(n * n - m * m);
    Integer cand = floor_root_of_fraction(num, den, static_cast<unsigned long>(2 * n));
    if (!have_upper || cand < upper) {
      upper = cand;
      have_upper = true;
    }
  }
  if (!have_upper || upper < lower) {
    fail(errc::ambiguous_without_bound, "empty dimension bracket [" + lower.get_str() + ", " +
                                            (have_upper ? upper.get_str() : "?") + "]");
  }

  bool any_converged = false;
  for (int pass = 0; pass < 2; ++pass) {
    for (Integer n_dim = lower; n_dim <= upper; ++n_dim) {
      std::vector<Rational> targets;
      targets.reserve(static_cast<std::size_t>(K));
      Integer n_pow(1);
      bool feasible = true;
      for (long n = 1; n <= K; ++n) {
        n_pow *= n_dim;
        if (dims.d(n) > n_pow) {
          feasible = false;
          break;
        }
        Rational t(dims.d(n), n_pow);
        t.canonicalize();
        targets.push_back(t);
      }
      if (!feasible) continue;

      ReconstructionProblem problem;
      problem.targets = std::move(targets);
      problem.support_bound = m;
      problem.tolerance = 1e-9;
      problem.require_primitive = true;
      problem.fallback_starts = pass == 0 ? 0 : 64;

      ReconstructionResult fit;
      try {
        fit = reconstruct(problem);
      } catch (const Error& e) {
        if (e.code() == errc::non_primitive_solution) {
          any_converged = true;  // fits exist, but none faithful
          continue;
        }
        throw;
      }
      if (!fit.converged) continue;
      any_converged = true;

      // The multiplicities must be the fitted masses scaled by N, exactly.
      const double n_double = n_dim.get_d();
      std::vector<std::pair<long, Integer>> weights;
      Integer recovered_total(0);
      bool integral = true;
      for (std::size_t k = 0; k < fit.params.size(); ++k) {
        const double scaled = fit.params[k] * n_double;
        const double nearest = std::round(scaled);
        if (std::fabs(scaled - nearest) > 1e-4 || nearest < 0) {
          integral = false;
          break;
        }
        const Integer count(static_cast<long>(nearest));
        recovered_total += (k == 0 ? count : 2 * count);
        if (count == 0) continue;
        if (k == 0) {
          weights.emplace_back(0, count);
        } else {
          weights.emplace_back(static_cast<long>(k), count);
          weights.emplace_back(-static_cast<long>(k), count);
        }
      }
      if (!integral || recovered_total != n_dim || weights.empty()) continue;

      WeightDecomposition rep = make_rep(weights);
      if (weight_gcd(rep) != 1) continue;
      if (invariant_dims(rep, K).dims == dims.dims) return rep;
    }
  }

  if (any_converged) {
    fail(errc::no_consistent_dimension,
         "no dimension in [" + lower.get_str() + ", " + upper.get_str() +
             "] reproduces the sequence exactly");
  }
  fail(errc::ambiguous_without_bound, "reconstruction failed for every candidate dimension");
}

}  // namespace walkprint
