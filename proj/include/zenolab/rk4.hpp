#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace zenolab {

/// Classical fixed-step 4th-order Runge-Kutta for an autonomous system
/// y' = f(y), advanced over [0, duration] in `steps` equal steps.
/// T may be double or std::complex<double>.
template <typename T, std::size_t K, typename F>
std::array<T, K> rk4_integrate(std::array<T, K> y, double duration, int steps,
                               F&& deriv) {
  if (steps < 1) {
    throw std::invalid_argument("rk4_integrate: steps must be >= 1");
  }
  const double h = duration / steps;
  std::array<T, K> stage;
  for (int step = 0; step < steps; ++step) {
    const std::array<T, K> k1 = deriv(y);
    for (std::size_t i = 0; i < K; ++i) stage[i] = y[i] + (0.5 * h) * k1[i];
    const std::array<T, K> k2 = deriv(stage);
    for (std::size_t i = 0; i < K; ++i) stage[i] = y[i] + (0.5 * h) * k2[i];
    const std::array<T, K> k3 = deriv(stage);
    for (std::size_t i = 0; i < K; ++i) stage[i] = y[i] + h * k3[i];
    const std::array<T, K> k4 = deriv(stage);
    for (std::size_t i = 0; i < K; ++i) {
      y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
  return y;
}

}  // namespace zenolab
