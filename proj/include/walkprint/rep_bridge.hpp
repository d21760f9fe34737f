#pragma once

#include <map>
#include <utility>
#include <vector>

#include "walkprint/rational.hpp"
#include "walkprint/walk.hpp"

namespace walkprint {

// Multiset of integer U(1) weights: weight n carried with multiplicity
// alpha_n >= 1. dim = sum of multiplicities.
struct WeightDecomposition {
  std::map<long, Integer> mult;

  Integer dim() const;
  bool operator==(const WeightDecomposition& other) const { return mult == other.mult; }
};

// Validates multiplicities (>= 1 after dropping zeros, no duplicates).
WeightDecomposition make_rep(const std::vector<std::pair<long, Integer>>& weights);

struct RepValidation {
  bool self_dual = false;  // alpha_n = alpha_{-n} for all n
  bool faithful = false;   // nonzero weights generate Z (gcd 1)
};

RepValidation validate_rep(const WeightDecomposition& rep);

// The proper walk a_n = alpha_n / N.
StepDistribution rep_to_walk(const WeightDecomposition& rep);

// Inverse embedding: smallest N with N * a_n integral for all n.
WeightDecomposition walk_to_rep(const StepDistribution& w);

// d_n = dim(V^{tensor n})^{U(1)} for n = 1..K.
struct InvariantDimensionSequence {
  std::vector<Integer> dims;  // dims[i] = d_{i+1}

  long size() const { return static_cast<long>(dims.size()); }
  const Integer& d(long n) const { return dims.at(static_cast<std::size_t>(n - 1)); }
};

// Exact integer Laurent convolution of the multiplicities; every value is
// cross-checked against the identity d_n = N^n c_n through the walk engine.
InvariantDimensionSequence invariant_dims(const WeightDecomposition& rep, long K);

// Inverse of invariant_dims for self-dual faithful decompositions with
// weights in [-support_bound, support_bound]. Enumerates the finite integer
// bracket for N = dim V, reconstructs the walk for each candidate, and keeps
// the smallest N whose forward dims reproduce the input exactly.
WeightDecomposition dims_to_rep(const InvariantDimensionSequence& dims, long support_bound);

}  // namespace walkprint
