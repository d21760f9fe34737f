#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "walkprint/rational.hpp"
#include "walkprint/walk.hpp"

namespace walkprint {

// SplitMix64 (Steele, Lea, Flood: "Fast splittable pseudorandom number
// generators"). The whole simulator keys off this one documented generator
// so runs reproduce bit-exactly across machines and thread counts.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased uniform in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound);
};

// Derives the independent stream seed of one trial chunk.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index);

// Inverse-CDF step sampler over exact rational masses: cumulative integer
// thresholds in ascending step order against a uniform draw below the
// common denominator. No floating point is involved in the selection.
class StepSampler {
 public:
  explicit StepSampler(const StepDistribution& w);

  long sample(SplitMix64& rng) const;

 private:
  std::vector<long> steps_;
  std::vector<std::uint64_t> thresholds_u64_;  // used when the denominator fits
  std::vector<Integer> thresholds_big_;
  Integer denom_;
  std::uint64_t denom_u64_ = 0;
  bool small_ = false;
};

struct SimulationEstimate {
  long n_steps = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

// Chunked deterministic estimator of c_n. Trials are split into fixed
// 2^16-trial chunks with independently seeded streams, so the hit count is
// identical for any worker-thread count. threads = 0 means "the
// WALKPRINT_THREADS cap, else hardware concurrency".
SimulationEstimate simulate_return(const StepDistribution& w, long n, std::uint64_t trials,
                                   std::uint64_t seed, int threads = 0);

// Histogram of the n-step sums under the same chunking scheme.
std::map<long, std::uint64_t> simulate_positions(const StepDistribution& w, long n,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 int threads = 0);

struct ConsistencyResult {
  double z_score = 0.0;
  bool pass = false;
  double exact_cn = 0.0;
  SimulationEstimate estimate;
};

// z = (estimate - c_n) / stderr against the exact engine; an exact tie
// (including 0 = 0 with zero stderr) passes with z = 0.
ConsistencyResult consistency_test(const StepDistribution& w, long n, std::uint64_t trials,
                                   std::uint64_t seed, double z_max, int threads = 0);

// WALKPRINT_THREADS, clamped to [1, hardware]; hardware concurrency if unset.
int thread_cap_from_env();

}  // namespace walkprint
