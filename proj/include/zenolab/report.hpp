#pragma once

// Report building and rendering for the CLI: the reference probability
// table, the model-comparison document (CSV/JSON), and history-tree dumps.
// All output is locale-independent and byte-identical across invocations
// with the same arguments.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zenolab/monte_carlo.hpp"

namespace zenolab {

enum class OutputFormat { csv, json };

/// One row of the comparison document. The p2_* columns are closed-form
/// level-2 probabilities at time T; the mc_* columns are level-1 estimates
/// (occupation_p1, survival_p1) from a common sample, with mc_stderr the
/// larger of the two binomial standard errors.
struct ComparisonRow {
  int n_measurements = 1;
  double p2_occupation = 0.0;
  double p2_survival_complement = 0.0;
  double p2_cook = 0.0;
  double p2_cook_ode = 0.0;
  std::optional<double> mc_occupation;
  std::optional<double> mc_survival;
  std::optional<double> mc_stderr;
};

inline constexpr int kMaxCompareN = 4096;
inline constexpr std::uint64_t kMaxTrials = 100000000ull;
inline constexpr int kMaxHistoriesN = 12;

struct CompareOptions {
  int n_min = 1;
  int n_max = 64;
  std::optional<std::uint64_t> mc_trials;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;  // 0 = hardware default; result is thread-count independent
};

/// Rounds at `decimals` digits with ties away from zero.
double round_half_away(double value, int decimals);

/// Occupation/survival probability table for the given N values, formatted
/// at `decimals` digits (ties away from zero).
std::string render_table1(const std::vector<int>& n_values, int decimals);

/// One ComparisonRow per N in [n_min, n_max].
std::vector<ComparisonRow> build_comparison(const CompareOptions& options);

std::string render_comparison(const std::vector<ComparisonRow>& rows,
                              OutputFormat format);

/// Every history of N measurements with its flip count and probability.
/// N is capped at kMaxHistoriesN (4096 rows).
std::string render_histories(int n_measurements, OutputFormat format);

}  // namespace zenolab
