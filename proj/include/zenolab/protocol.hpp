#pragma once

// The pulsed-measurement protocol: free evolution for an interval tau = T/N,
// then an ideal projective measurement that erases the coherences, repeated
// N times starting from level 1.

#include <vector>

#include "zenolab/bloch.hpp"

namespace zenolab {

/// State with only level 1 populated, the protocol's fixed starting point.
inline constexpr BlochVector kLevelOneState{0.0, 0.0, -1.0};

/// Ideal projective measurement: zeroes the coherences (r1, r2), leaves the
/// populations untouched.
BlochVector project(const BlochVector& r);

struct ProtocolResult {
  PulseProtocol protocol;
  std::vector<BlochVector> bloch_after_each;  // post-measurement states
  std::vector<double> p2_after_each;
  double p1_final = 1.0;
  double p2_final = 0.0;
};

/// Alternates evolve_bloch(., omega, tau) and project, N times, from
/// kLevelOneState. The final third component is -cos^N(pi/N).
ProtocolResult run_pulsed_protocol(const PulseProtocol& protocol);

/// p2 = [1 - cos^N(pi/N)]/2 and p1 = [1 + cos^N(pi/N)]/2: the level
/// occupations at time T after N measurements, history ignored.
LevelPopulations occupation_closed_form(int n_measurements);

struct StepwiseEntry {
  double r3;
  double p1;
  double p2;
};

/// Entry n (1-based) holds r3 = -cos^n(pi/N) with the matching populations.
/// Computed from powers, so it is an independent route to the trace that
/// run_pulsed_protocol produces by iteration.
std::vector<StepwiseEntry> stepwise_record(int n_measurements);

}  // namespace zenolab
