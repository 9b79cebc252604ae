#include "zenolab/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zenolab {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double binomial_stderr(double p_hat, std::uint64_t trials) {
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

}  // namespace

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
  return SplitMix64{mix64(seed + 0x9E3779B97F4A7C15ull * (trial_index + 1))};
}

TrajectoryHistory sample_trajectory(const FlipKernel& kernel,
                                    SplitMix64& rng) {
  TrajectoryHistory history;
  history.levels.reserve(kernel.n_measurements);
  std::uint8_t level = 1;
  for (int i = 0; i < kernel.n_measurements; ++i) {
    if (rng.next_unit() < kernel.flip_prob) {
      level = (level == 1) ? 2 : 1;
    }
    history.levels.push_back(level);
  }
  return history;
}

TrialCounts& TrialCounts::operator+=(const TrialCounts& other) {
  trials += other.trials;
  ended_in_level1 += other.ended_in_level1;
  stayed_in_level1 += other.stayed_in_level1;
  return *this;
}

TrialCounts count_trials(const FlipKernel& kernel, std::uint64_t seed,
                         std::uint64_t first_trial, std::uint64_t last_trial) {
  if (first_trial > last_trial) {
    throw std::invalid_argument("count_trials: invalid trial range");
  }
  TrialCounts counts;
  counts.trials = last_trial - first_trial;
  for (std::uint64_t trial = first_trial; trial < last_trial; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    std::uint8_t level = 1;
    bool stayed = true;
    for (int i = 0; i < kernel.n_measurements; ++i) {
      if (rng.next_unit() < kernel.flip_prob) {
        level = (level == 1) ? 2 : 1;
      }
      if (level != 1) stayed = false;
    }
    if (level == 1) ++counts.ended_in_level1;
    if (stayed) ++counts.stayed_in_level1;
  }
  return counts;
}

MCEstimate estimate(int n_measurements, std::uint64_t trials,
                    std::uint64_t seed, unsigned threads) {
  if (trials == 0) {
    throw std::invalid_argument("estimate: need at least one trial");
  }
  const FlipKernel kernel = FlipKernel::for_measurements(n_measurements);

  if (threads == 0) {
    threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads > 8) threads = 8;
  }
  if (static_cast<std::uint64_t>(threads) > trials) {
    threads = static_cast<unsigned>(trials);
  }

  TrialCounts total;
  if (threads == 1) {
    total = count_trials(kernel, seed, 0, trials);
  } else {
    // Contiguous chunks; any partition merges to the same exact counts.
    std::vector<TrialCounts> partials(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = trials / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t first = w * chunk;
      const std::uint64_t last = (w + 1 == threads) ? trials : first + chunk;
      workers.emplace_back([&, w, first, last] {
        partials[w] = count_trials(kernel, seed, first, last);
      });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& part : partials) total += part;
  }

  MCEstimate result;
  result.n_measurements = n_measurements;
  result.trials = trials;
  result.seed = seed;
  result.occupation_p1 = static_cast<double>(total.ended_in_level1) /
                         static_cast<double>(trials);
  result.survival_p1 = static_cast<double>(total.stayed_in_level1) /
                       static_cast<double>(trials);
  result.stderr_occupation = binomial_stderr(result.occupation_p1, trials);
  result.stderr_survival = binomial_stderr(result.survival_p1, trials);
  return result;
}

}  // namespace zenolab
