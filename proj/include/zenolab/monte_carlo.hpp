#pragma once

// Stochastic oracle for the history combinatorics: samples measurement
// records as a two-state Markov chain and estimates occupation and survival
// probabilities from the same trajectory stream.
//
// Reproducibility contract: every trial draws from its own substream derived
// purely from (seed, trial index), so estimates are bit-identical for a given
// (N, trials, seed) regardless of how the trial range is partitioned or
// parallelized.

#include <cstdint>

#include "zenolab/histories.hpp"

namespace zenolab {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED2E20ull;

/// SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom mixer).
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Hashes (seed, trial_index) into the substream's starting state, so
/// neighbouring trials land at scattered positions of the SplitMix64 cycle.
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index);

/// One simulated record: each interval flips the current level with
/// probability kernel.flip_prob, starting from level 1.
TrajectoryHistory sample_trajectory(const FlipKernel& kernel, SplitMix64& rng);

struct TrialCounts {
  std::uint64_t trials = 0;
  std::uint64_t ended_in_level1 = 0;
  std::uint64_t stayed_in_level1 = 0;

  TrialCounts& operator+=(const TrialCounts& other);
};

/// Streams trials [first_trial, last_trial) without storing trajectories.
/// Counts are exact integers, so partial counts merge associatively.
TrialCounts count_trials(const FlipKernel& kernel, std::uint64_t seed,
                         std::uint64_t first_trial, std::uint64_t last_trial);

struct MCEstimate {
  int n_measurements = 1;
  std::uint64_t trials = 0;
  std::uint64_t seed = kDefaultSeed;
  double occupation_p1 = 0.0;  // fraction whose final level is 1
  double survival_p1 = 0.0;    // fraction found in level 1 at every measurement
  double stderr_occupation = 0.0;
  double stderr_survival = 0.0;
};

/// Occupation and survival estimated from one common trajectory stream, with
/// binomial standard errors sqrt(p(1-p)/M). With threads > 1 the trial range
/// is split into contiguous chunks counted concurrently; the merged result is
/// bit-identical to the single-threaded one. threads = 0 picks a hardware
/// default.
MCEstimate estimate(int n_measurements, std::uint64_t trials,
                    std::uint64_t seed = kDefaultSeed, unsigned threads = 1);

}  // namespace zenolab
