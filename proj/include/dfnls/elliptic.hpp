#pragma once

#include "dfnls/wave.hpp"

namespace dfnls {

// Parameters of the closed-form s = 1 profile eta * sn(2 K(k) x / pi, k).
struct EllipticParams {
    double k = 0.0;      // elliptic modulus in [0, 1)
    double big_k = 0.0;  // complete elliptic integral K(k)
    double eta = 0.0;    // amplitude 2 sqrt(2) k K(k) / pi
    double omega = 0.0;  // frequency 4 (1 + k^2) K(k)^2 / pi^2
};

// Complete elliptic integral of the first kind via the arithmetic-geometric
// mean, K = pi / (2 agm(1, sqrt(1 - k^2))). Requires k in [0, 1).
double complete_k(double k);

// Jacobi elliptic sine via the descending Landen ladder; exact 4K(k)
// periodicity in u up to the ladder cutoff. Requires k in [0, 1).
double jacobi_sn(double u, double k);

// Frequency of the closed-form profile as a function of the modulus;
// strictly increasing from 1 at k = 0.
double omega_of_k(double k);

// Inverse of omega_of_k by bisection. Requires omega > 1 (and small enough
// that the modulus stays representably below 1).
double modulus_for_omega(double omega);

EllipticParams elliptic_params(double omega);

// Closed-form standing wave for s = 1 sampled on the grid, with its measured
// stationary residual (machine-level discretization error).
WaveProfile exact_profile(double omega, GridPtr grid);

}  // namespace dfnls
