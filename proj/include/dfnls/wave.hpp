#pragma once

#include "dfnls/errors.hpp"
#include "dfnls/spectral.hpp"

#include <vector>

namespace dfnls {

// An odd standing-wave profile solving (-Delta)^s phi - omega phi + phi^3 = 0.
struct WaveProfile {
    RealField field;
    double s = 0.0;
    double omega = 0.0;
    double residual_norm = 0.0;  // max-norm of the stationary residual
    int newton_iters = 0;
};

struct SolverConfig {
    double newton_tol = 1e-6;       // stop when the residual max-norm falls below this
    int max_newton_iters = 50;
    double gmres_tol = 1e-8;        // relative tolerance of the linear inner solve
    int gmres_restart = 60;
    // Evaluate cubic terms with 2x zero padding. Aliased products deposit
    // roundoff-level junk in the top modes, which the fractional multiplier
    // amplifies by (N/2)^{2s}; at N = 4096, s = 1 that floor sits above the
    // default tolerance, so padding stays on unless a caller opts out.
    bool dealias = true;
    double seed_trust_omega = 1.2;  // largest omega the polynomial seed is trusted at
    double seed_step = 0.2;         // ladder step used when walking omega upward
    int max_step_halvings = 6;
};

struct ContinuationRun {
    double s = 0.0;
    std::vector<double> omegas;
    std::vector<WaveProfile> profiles;
    std::vector<double> norms_sq;  // squared L2 norm of each profile
    bool norms_strictly_increasing() const;
};

struct LobeCertificate {
    bool certified = false;
    int critical_points = 0;  // sign changes of the grid derivative
    double x_max = 0.0;
    double x_min = 0.0;
};

// Small-amplitude two-term approximation a sin x + a^3 sin(3x) / (4 (3^{2s} - 1))
// with a = sqrt(4 (omega - 1) / 3). Requires omega > 1 and s in (1/4, 1].
RealField stokes_seed(double omega, double s, GridPtr grid);

// Stationary residual (-Delta)^s phi - omega phi + phi^3.
RealField residual(const RealField& phi, double omega, double s, bool dealias = true);

// Newton iteration restricted to the odd sector, where the linearization is
// invertible; the update is computed by matrix-free preconditioned GMRES.
// Throws ConvergenceError / TrivialSolutionError on failure.
WaveProfile newton_solve(const RealField& seed, double omega, double s,
                         const SolverConfig& cfg = {});

// Walk omega through the given increasing targets, seeding each solve with the
// previous profile (the first with stokes_seed) and halving steps on failure.
ContinuationRun continue_in_omega(double s, const std::vector<double>& omega_targets,
                                  GridPtr grid, const SolverConfig& cfg = {});

// Solve at a single omega, building a seed ladder when omega lies beyond the
// trust region of the polynomial seed.
WaveProfile solve_wave(double s, double omega, GridPtr grid, const SolverConfig& cfg = {});

// Certify the odd two-lobe shape: exactly two interior critical points, with
// the maximum near +pi/2 and the minimum near -pi/2. Never throws.
LobeCertificate lobe_check(const WaveProfile& wave);

}  // namespace dfnls
