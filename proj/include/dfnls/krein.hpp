#pragma once

#include "dfnls/linops.hpp"

#include <limits>
#include <optional>

namespace dfnls {

enum class Verdict { SpectrallyUnstable, Inconclusive, StableCandidate };

const char* verdict_name(Verdict v);

// Inverse-operator quadratic form (A^{-1} b, b) evaluated in a parity sector.
struct SectorProduct {
    double value = 0.0;
    double solve_residual = 0.0;  // ||A x - b|| / ||b|| in the sector basis
    double rcond = 0.0;           // reciprocal condition estimate of the factorization
};

// (L1^{-1} phi, phi) over the odd (sine) sector, where L1 is positive
// definite along the branch; Cholesky factorization. Along the branch this
// equals half the derivative of ||phi||^2 with respect to omega.
SectorProduct v_odd(const WaveProfile& wave, Eigen::Index m_max = 0);

// (L2^{-1} phi', phi') over the even (cosine) sector, which carries exactly
// one negative direction; fully pivoted LU factorization.
SectorProduct v_even(const WaveProfile& wave, Eigen::Index m_max = 0);

// Centered finite-difference value of (1/2) d/domega ||phi||^2, the quantity
// v_odd equals along the branch. Both endpoint solves are seeded from the
// given wave. Requires h <= (omega - 1)/5 so both endpoints stay on the
// nontrivial branch.
double dnorm_domega(const WaveProfile& wave, double h, const SolverConfig& cfg = {});

struct KreinProvenance {
    Eigen::Index n_modes = 0;
    Eigen::Index basis_cutoff = 0;
    double newton_tol = 0.0;
    double gmres_tol = 0.0;
    double kernel_tol = 0.0;
    double fd_step = 0.0;
    int newton_iters = 0;
};

struct KreinReport {
    double s = 0.0;
    double omega = 0.0;
    double v_odd = 0.0;
    double v_even = 0.0;
    int n_l_odd = 0, n_l_even = 0, n_l_full = 0;
    int n_v_odd = 0, n_v_even = 0, n_v_full = 0;
    Verdict verdict = Verdict::Inconclusive;
    double dnorm_domega = std::numeric_limits<double>::quiet_NaN();
    KreinProvenance provenance;
};

// Index-count verdict. n(L) in a sector is the negative count of L1 plus
// that of L2; n(V) counts negative entries of the constraint matrix
// diag(v_even, v_odd). An odd difference n(L) - n(V) in either sector or
// overall forces a real unstable eigenvalue; a vanishing full difference
// leaves no room for instability. If an independently computed full-space
// negative count is supplied it must equal the sector sum (logic_error).
KreinReport krein_verdict(const WaveProfile& wave,
                          const SpectrumReport& l1_odd, const SpectrumReport& l1_even,
                          const SpectrumReport& l2_odd, const SpectrumReport& l2_even,
                          const SectorProduct& vodd, const SectorProduct& veven,
                          std::optional<int> n_l_full_check = std::nullopt);

// Everything the pipeline computed on the way to a verdict, for callers that
// also want the sector spectra (tables, sweep columns).
struct KreinAnalysis {
    KreinReport report;
    SpectrumReport l1_odd, l1_even, l2_odd, l2_even;
    SectorProduct vodd, veven;
};

// Full pipeline at a converged wave: sector spectra, quadratic forms, verdict
// and (when fd_step > 0) the finite-difference cross-check of v_odd.
KreinAnalysis analyze_wave_full(const WaveProfile& wave, const SolverConfig& cfg = {},
                                Eigen::Index m_max = 0, double kernel_tol = 0.0,
                                double fd_step = 0.0);

KreinReport analyze_wave(const WaveProfile& wave, const SolverConfig& cfg = {},
                         Eigen::Index m_max = 0, double kernel_tol = 0.0,
                         double fd_step = 0.0);

}  // namespace dfnls
