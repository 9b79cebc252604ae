#pragma once

// Incoherent rate-equation model of the measurement-interrupted drive:
// P1' = k (P2 - P1), P2' = k (P1 - P2) with k = omega^2 tau / 2.
//
// Two readings of this model are exposed side by side. The customary closed
// form is P2(T) = [1 - exp(-pi^2/2N)]/2, while integrating the rate equations
// with k = omega^2 tau / 2 over T = pi/omega gives exponent pi^2/N instead.
// The large-N limit of the exact dynamics, cos^N(pi/N) -> exp(-pi^2/2N),
// singles out the first exponent. Both are reported; neither is silently
// corrected.

#include "zenolab/bloch.hpp"

namespace zenolab {

class CookModel {
 public:
  /// rate is derived as omega^2 * interval / 2.
  CookModel(double omega, double interval);

  static CookModel for_protocol(const PulseProtocol& protocol);

  double omega() const { return omega_; }
  double interval() const { return interval_; }
  double rate() const { return rate_; }

 private:
  double omega_;
  double interval_;
  double rate_;
};

/// P2(T) = [1 - exp(-pi^2/2N)]/2, the customary closed form.
double cook_closed_form(int n_measurements);

/// Fixed-step 4th-order integration of the rate equations from (P1, P2) =
/// (1, 0); matches [1 - exp(-2kt)]/2 within 1e-9 for steps >= 1000.
LevelPopulations integrate_rate_equations(const CookModel& model,
                                          double total_time, int steps);

}  // namespace zenolab
