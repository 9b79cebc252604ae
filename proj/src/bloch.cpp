#include "zenolab/bloch.hpp"

#include <array>
#include <cmath>

#include "zenolab/rk4.hpp"

namespace zenolab {

double norm(const BlochVector& r) {
  return std::sqrt(r.r1 * r.r1 + r.r2 * r.r2 + r.r3 * r.r3);
}

void validate(const BlochVector& r) {
  // Negated comparisons so NaN fields also trip the checks.
  if (!(norm(r) <= 1.0 + kStateTol)) {
    throw std::invalid_argument("BlochVector: norm exceeds 1");
  }
  if (!(r.r3 >= -1.0 - kStateTol && r.r3 <= 1.0 + kStateTol)) {
    throw std::invalid_argument("BlochVector: r3 outside [-1, 1]");
  }
}

void validate(const DensityMatrix& rho) {
  if (!(std::abs(rho.rho11 + rho.rho22 - 1.0) <= kStateTol)) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
  if (!(rho.rho11 >= -kStateTol && rho.rho11 <= 1.0 + kStateTol) ||
      !(rho.rho22 >= -kStateTol && rho.rho22 <= 1.0 + kStateTol)) {
    throw std::invalid_argument("DensityMatrix: population outside [0, 1]");
  }
  if (!(std::abs(rho.rho21 - std::conj(rho.rho12)) <= kStateTol)) {
    throw std::invalid_argument("DensityMatrix: not hermitian");
  }
  if (!(std::norm(rho.rho12) <= rho.rho11 * rho.rho22 + kStateTol)) {
    throw std::invalid_argument("DensityMatrix: positivity violated");
  }
}

PulseProtocol::PulseProtocol(double omega, int n_measurements)
    : omega_(omega), n_measurements_(n_measurements) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("PulseProtocol: omega must be positive");
  }
  if (n_measurements < 1) {
    throw std::invalid_argument("PulseProtocol: need at least one measurement");
  }
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  validate(rho);
  const std::complex<double> i_unit(0.0, 1.0);
  return BlochVector{(rho.rho21 + rho.rho12).real(),
                     (i_unit * (rho.rho12 - rho.rho21)).real(),
                     rho.rho22 - rho.rho11};
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  validate(r);
  const std::complex<double> off(0.5 * r.r1, -0.5 * r.r2);
  return DensityMatrix{0.5 * (1.0 - r.r3), 0.5 * (1.0 + r.r3), off,
                       std::conj(off)};
}

BlochVector evolve_bloch(const BlochVector& r, double omega, double dt) {
  validate(r);
  if (!(dt >= 0.0)) {
    throw std::invalid_argument("evolve_bloch: dt must be >= 0");
  }
  const double angle = omega * dt;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return BlochVector{r.r1, r.r2 * c - r.r3 * s, r.r3 * c + r.r2 * s};
}

DensityMatrix evolve_density_ode(const DensityMatrix& rho, double omega,
                                 double dt, int steps) {
  validate(rho);
  if (steps < 1) {
    throw std::invalid_argument("evolve_density_ode: steps must be >= 1");
  }
  if (!(dt >= 0.0)) {
    throw std::invalid_argument("evolve_density_ode: dt must be >= 0");
  }

  using C = std::complex<double>;
  const C coupling(0.0, 0.5 * omega);  // i omega / 2
  // State order: rho11, rho12, rho21, rho22. The rho21 equation is the
  // conjugate of the rho12 one, which keeps hermiticity a conserved quantity
  // of the integration rather than an afterthought.
  std::array<C, 4> y{C(rho.rho11), rho.rho12, rho.rho21, C(rho.rho22)};
  auto deriv = [coupling](const std::array<C, 4>& s4) {
    return std::array<C, 4>{coupling * (s4[2] - s4[1]),
                            coupling * (s4[3] - s4[0]),
                            -coupling * (s4[3] - s4[0]),
                            coupling * (s4[1] - s4[2])};
  };
  y = rk4_integrate(y, dt, steps, deriv);
  return DensityMatrix{y[0].real(), y[3].real(), y[1], y[2]};
}

LevelPopulations level_populations(const BlochVector& r) {
  validate(r);
  const double p2 = 0.5 * (1.0 + r.r3);
  return LevelPopulations{1.0 - p2, p2};
}

}  // namespace zenolab
