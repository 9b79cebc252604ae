#include "zenolab/cook.hpp"

#include <array>
#include <cmath>

#include "zenolab/rk4.hpp"

namespace zenolab {

CookModel::CookModel(double omega, double interval)
    : omega_(omega), interval_(interval), rate_(0.5 * omega * omega * interval) {
  if (!(omega > 0.0) || !(interval > 0.0)) {
    throw std::invalid_argument("CookModel: omega and interval must be positive");
  }
}

CookModel CookModel::for_protocol(const PulseProtocol& protocol) {
  return CookModel(protocol.omega(), protocol.interval());
}

double cook_closed_form(int n_measurements) {
  if (n_measurements < 1) {
    throw std::invalid_argument(
        "cook_closed_form: need at least one measurement");
  }
  return 0.5 * (1.0 - std::exp(-kPi * kPi / (2.0 * n_measurements)));
}

LevelPopulations integrate_rate_equations(const CookModel& model,
                                          double total_time, int steps) {
  if (steps < 1) {
    throw std::invalid_argument(
        "integrate_rate_equations: steps must be >= 1");
  }
  if (!(total_time >= 0.0)) {
    throw std::invalid_argument(
        "integrate_rate_equations: total_time must be >= 0");
  }
  const double k = model.rate();
  auto deriv = [k](const std::array<double, 2>& p) {
    return std::array<double, 2>{k * (p[1] - p[0]), k * (p[0] - p[1])};
  };
  const std::array<double, 2> populations =
      rk4_integrate(std::array<double, 2>{1.0, 0.0}, total_time, steps, deriv);
  return LevelPopulations{populations[0], populations[1]};
}

}  // namespace zenolab
