#include "zenolab/histories.hpp"

#include <cmath>

namespace zenolab {

namespace {
// 2^30 weighted histories would already be tens of gigabytes; refuse caps
// that could not possibly be honoured.
constexpr int kHardEnumerationCeiling = 30;
}  // namespace

FlipKernel FlipKernel::for_measurements(int n_measurements) {
  if (n_measurements < 1) {
    throw std::invalid_argument(
        "FlipKernel: need at least one measurement");
  }
  const double half_angle = kPi / (2.0 * n_measurements);
  const double s = std::sin(half_angle);
  const double c = std::cos(half_angle);
  return FlipKernel{n_measurements, c * c, s * s};
}

int TrajectoryHistory::flip_count() const {
  int flips = 0;
  std::uint8_t previous = 1;
  for (std::uint8_t level : levels) {
    if (level != previous) ++flips;
    previous = level;
  }
  return flips;
}

bool TrajectoryHistory::stayed_in_level1() const {
  for (std::uint8_t level : levels) {
    if (level != 1) return false;
  }
  return true;
}

void validate(const TrajectoryHistory& history) {
  for (std::uint8_t level : history.levels) {
    if (level != 1 && level != 2) {
      throw std::invalid_argument("TrajectoryHistory: level labels must be 1 or 2");
    }
  }
}

double history_probability(const TrajectoryHistory& history,
                           const FlipKernel& kernel) {
  if (history.levels.size() !=
      static_cast<std::size_t>(kernel.n_measurements)) {
    throw std::invalid_argument(
        "history_probability: history length differs from kernel measurement count");
  }
  validate(history);
  double probability = 1.0;
  std::uint8_t previous = 1;
  for (std::uint8_t level : history.levels) {
    probability *= (level != previous) ? kernel.flip_prob : kernel.stay_prob;
    previous = level;
  }
  return probability;
}

std::vector<WeightedHistory> enumerate_histories(const FlipKernel& kernel,
                                                 int cap) {
  const int n = kernel.n_measurements;
  if (cap > kHardEnumerationCeiling) {
    throw std::invalid_argument("enumerate_histories: cap exceeds hard ceiling");
  }
  if (n > cap) {
    throw std::invalid_argument(
        "enumerate_histories: measurement count exceeds enumeration cap");
  }

  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<WeightedHistory> all;
  all.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    TrajectoryHistory history;
    history.levels.reserve(n);
    // First measurement in the most significant bit keeps the output
    // lexicographic with level 1 ordered before level 2.
    for (int bit = n - 1; bit >= 0; --bit) {
      history.levels.push_back(
          static_cast<std::uint8_t>(1 + ((index >> bit) & 1u)));
    }
    const double probability = history_probability(history, kernel);
    all.push_back(WeightedHistory{std::move(history), probability});
  }
  return all;
}

LevelPopulations occupation_from_binomial(const FlipKernel& kernel) {
  const int n = kernel.n_measurements;
  double p1 = 0.0;
  double coefficient = 1.0;  // C(n, k), built multiplicatively
  for (int k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      p1 += coefficient * std::pow(kernel.flip_prob, k) *
            std::pow(kernel.stay_prob, n - k);
    }
    // Divide first: the peak coefficient sits within a factor ~500 of the
    // double range for N ~ 1024, so coefficient * (n - k) would overflow.
    coefficient = coefficient / (k + 1) * (n - k);
  }
  return LevelPopulations{p1, 1.0 - p1};
}

SurvivalProbabilities survival_closed_form(int n_measurements) {
  if (n_measurements < 1) {
    throw std::invalid_argument(
        "survival_closed_form: need at least one measurement");
  }
  const double surv1 =
      std::pow(std::cos(kPi / (2.0 * n_measurements)), 2 * n_measurements);
  return SurvivalProbabilities{surv1, 1.0 - surv1};
}

}  // namespace zenolab
