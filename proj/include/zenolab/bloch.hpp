#pragma once

// Two-level state representations (density matrix / coherence vector) and
// their resonant-drive evolution, both as an exact rotation and as a
// fixed-step integration of the equations of motion.

#include <complex>
#include <stdexcept>

namespace zenolab {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Tolerance used when validating physical-state invariants.
inline constexpr double kStateTol = 1e-12;

/// Coherence vector R = (r1, r2, r3) of a two-level state.
/// r3 = p2 - p1; valid states satisfy |R| <= 1.
struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
};

double norm(const BlochVector& r);

/// 2x2 density operator. Both off-diagonals are stored so hermiticity is a
/// checked invariant, not an encoding assumption.
struct DensityMatrix {
  double rho11 = 1.0;
  double rho22 = 0.0;
  std::complex<double> rho12{0.0, 0.0};
  std::complex<double> rho21{0.0, 0.0};
};

/// Throws std::invalid_argument if the state violates physical invariants
/// (norm bound for vectors; trace, hermiticity, bounds, positivity for
/// density matrices).
void validate(const BlochVector& r);
void validate(const DensityMatrix& rho);

/// Resonant pulse description: drive frequency omega, N equally spaced
/// measurement times across a total duration T = pi/omega.
class PulseProtocol {
 public:
  PulseProtocol(double omega, int n_measurements);

  double omega() const { return omega_; }
  int n_measurements() const { return n_measurements_; }
  double total_time() const { return kPi / omega_; }
  double interval() const { return total_time() / n_measurements_; }

 private:
  double omega_;
  int n_measurements_;
};

struct LevelPopulations {
  double p1 = 1.0;
  double p2 = 0.0;
};

/// r1 = rho21 + rho12, r2 = i(rho12 - rho21), r3 = rho22 - rho11.
BlochVector bloch_from_density(const DensityMatrix& rho);

/// Inverse map; round trips with bloch_from_density to machine precision.
DensityMatrix density_from_bloch(const BlochVector& r);

/// Exact propagator of Rdot = (omega, 0, 0) x R: rotation about the first
/// axis by angle omega*dt.
BlochVector evolve_bloch(const BlochVector& r, double omega, double dt);

/// Integrates the density-matrix equations of motion with a classical
/// fixed-step 4th-order scheme. Exists as an independent cross-check of the
/// analytic rotation; steps >= 1000 gives <= 1e-9 per-component error over a
/// pi pulse.
DensityMatrix evolve_density_ode(const DensityMatrix& rho, double omega,
                                 double dt, int steps);

/// p2 = (1 + r3)/2, p1 = 1 - p2. The sum is exactly 1 as computed.
LevelPopulations level_populations(const BlochVector& r);

}  // namespace zenolab
