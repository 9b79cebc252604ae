#include "zenolab/protocol.hpp"

#include <cmath>

namespace zenolab {

BlochVector project(const BlochVector& r) {
  validate(r);
  return BlochVector{0.0, 0.0, r.r3};
}

ProtocolResult run_pulsed_protocol(const PulseProtocol& protocol) {
  ProtocolResult result{protocol, {}, {}, 1.0, 0.0};
  const int n = protocol.n_measurements();
  result.bloch_after_each.reserve(n);
  result.p2_after_each.reserve(n);

  BlochVector r = kLevelOneState;
  const double tau = protocol.interval();
  for (int step = 0; step < n; ++step) {
    r = project(evolve_bloch(r, protocol.omega(), tau));
    result.bloch_after_each.push_back(r);
    result.p2_after_each.push_back(level_populations(r).p2);
  }

  const LevelPopulations final_pops = level_populations(r);
  result.p1_final = final_pops.p1;
  result.p2_final = final_pops.p2;
  return result;
}

LevelPopulations occupation_closed_form(int n_measurements) {
  if (n_measurements < 1) {
    throw std::invalid_argument(
        "occupation_closed_form: need at least one measurement");
  }
  const double cn = std::pow(std::cos(kPi / n_measurements), n_measurements);
  return LevelPopulations{0.5 * (1.0 + cn), 0.5 * (1.0 - cn)};
}

std::vector<StepwiseEntry> stepwise_record(int n_measurements) {
  if (n_measurements < 1) {
    throw std::invalid_argument(
        "stepwise_record: need at least one measurement");
  }
  const double c = std::cos(kPi / n_measurements);
  std::vector<StepwiseEntry> record;
  record.reserve(n_measurements);
  for (int step = 1; step <= n_measurements; ++step) {
    const double r3 = -std::pow(c, step);
    const double p2 = 0.5 * (1.0 + r3);
    record.push_back(StepwiseEntry{r3, 1.0 - p2, p2});
  }
  return record;
}

}  // namespace zenolab
