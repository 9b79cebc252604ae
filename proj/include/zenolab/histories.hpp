#pragma once

// History-resolved probabilities for the N-measurement protocol. Between
// consecutive measurements the level flips with probability sin^2(pi/2N) and
// stays with probability cos^2(pi/2N), independently of everything else, so
// a full record of measurement outcomes is a two-state Markov chain and the
// occupation probability decomposes over flip counts as a binomial sum.

#include <cstdint>
#include <vector>

#include "zenolab/bloch.hpp"

namespace zenolab {

/// Per-interval transition probabilities for N measurements across a pi
/// pulse: stay_prob = cos^2(pi/2N), flip_prob = sin^2(pi/2N).
struct FlipKernel {
  int n_measurements = 1;
  double stay_prob = 0.0;
  double flip_prob = 1.0;

  static FlipKernel for_measurements(int n_measurements);
};

/// The level (1 or 2) found at each of the N measurements.
struct TrajectoryHistory {
  std::vector<std::uint8_t> levels;

  /// Number of adjacent level changes, counting the implicit start at
  /// level 1 before the first measurement.
  int flip_count() const;
  bool stayed_in_level1() const;
};

/// Throws if any label is not 1 or 2.
void validate(const TrajectoryHistory& history);

/// Product over the N intervals of flip_prob where the level changed and
/// stay_prob where it did not, starting from level 1.
double history_probability(const TrajectoryHistory& history,
                           const FlipKernel& kernel);

struct WeightedHistory {
  TrajectoryHistory history;
  double probability;
};

inline constexpr int kDefaultEnumerationCap = 20;

/// All 2^N histories in lexicographic order (level 1 before level 2), each
/// with its probability. The cap is a resource guard; it can be raised, but
/// never beyond 30.
std::vector<WeightedHistory> enumerate_histories(
    const FlipKernel& kernel, int cap = kDefaultEnumerationCap);

/// p1 = sum over even n of C(N,n) flip^n stay^(N-n), the even-flip mass of
/// the binomial distribution concealed in the closed form; p2 = 1 - p1.
/// Coefficients use the multiplicative recurrence, which stays accurate far
/// beyond where integer factorials overflow.
LevelPopulations occupation_from_binomial(const FlipKernel& kernel);

struct SurvivalProbabilities {
  double surv1;              // found in level 1 at every measurement
  double surv2_complement;   // 1 - surv1
};

/// surv1 = cos^(2N)(pi/2N): the n = 0 term of the binomial decomposition,
/// i.e. the probability that every one of the N measurements finds level 1.
SurvivalProbabilities survival_closed_form(int n_measurements);

}  // namespace zenolab
