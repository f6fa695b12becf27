#include "dfnls/wave.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

namespace dfnls {

namespace {

constexpr double kTrivialThreshold = 1e-8;  // iterate max-norm below this means collapse

void validate_s(double s) {
    if (!(s > 0.25 && s <= 1.0))
        throw std::domain_error("wave solver: s must lie in (1/4, 1]");
}

using ArrayOp = std::function<Eigen::ArrayXd(const Eigen::ArrayXd&)>;

// Right-preconditioned restarted GMRES with modified Gram-Schmidt Arnoldi and
// Givens rotations. noise_floor is the absolute accuracy of one application
// of the preconditioned operator on a unit vector; the preconditioner cancels
// the multiplier's amplification of transform roundoff, so the floor sits a
// few decades above machine epsilon rather than at eps * (N/2)^{2s}.
//
// Once the system is resolved down to that noise, further Arnoldi steps make
// the triangular least-squares system nearly singular: its solution norm
// explodes and multiplies the backward error of the operator applications
// into the returned iterate while the rotated estimate keeps reporting
// progress. Three guards keep the solve honest. The coordinate solution is
// recomputed each step and rolled back to the last dimension with a sane
// norm; the cycle ends early when the estimate stops improving; and a restart
// cycle that failed to reduce the true residual hands back the best iterate
// seen instead of the poisoned one. Returns the best iterate even if the
// tolerance was not met; the outer Newton loop judges overall progress.
Eigen::ArrayXd gmres(const ArrayOp& apply_op, const ArrayOp& precond,
                     const Eigen::ArrayXd& rhs, double rel_tol, int restart,
                     int max_cycles, double noise_floor) {
    const Eigen::Index n = rhs.size();
    Eigen::ArrayXd x = Eigen::ArrayXd::Zero(n);
    const double rhs_norm = rhs.matrix().norm();
    if (rhs_norm == 0.0) return x;
    const double target = rel_tol * rhs_norm;
    // Coordinate norms are bounded by cond(op) * beta; anything past this is
    // the least-squares blow-up, not a legitimate stiff solve.
    const double y_limit = 1e6 * rhs_norm;

    Eigen::ArrayXd x_best = x;
    double beta_best = std::numeric_limits<double>::infinity();
    for (int cycle = 0; cycle < max_cycles; ++cycle) {
        Eigen::ArrayXd r = rhs - apply_op(x);
        const double beta = r.matrix().norm();
        const double prev_best = beta_best;
        if (beta < beta_best) {
            beta_best = beta;
            x_best = x;
        }
        // Stop on success, or once a whole cycle failed to halve the true
        // residual: more Krylov steps would only resolve noise.
        if (beta <= target || beta > 0.5 * prev_best) return x_best;

        const int m = restart;
        Eigen::MatrixXd basis(n, m + 1);
        Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(m + 1, m);
        Eigen::VectorXd g = Eigen::VectorXd::Zero(m + 1);
        Eigen::VectorXd cs(m), sn(m);
        basis.col(0) = (r / beta).matrix();
        g[0] = beta;

        int k_good = 0;              // largest dimension with a sane solution
        double est_checkpoint = beta;  // estimate at the last stagnation check
        for (int k = 0; k < m; ++k) {
            Eigen::ArrayXd w = apply_op(precond(basis.col(k).array()));
            const double w_pre = w.matrix().norm();
            for (int i = 0; i <= k; ++i) {
                hess(i, k) = basis.col(i).dot(w.matrix());
                w -= hess(i, k) * basis.col(i).array();
            }
            // One reorthogonalization pass keeps the basis orthonormal, which
            // keeps the rotated residual estimate honest.
            for (int i = 0; i <= k; ++i) {
                const double c = basis.col(i).dot(w.matrix());
                hess(i, k) += c;
                w -= c * basis.col(i).array();
            }
            hess(k + 1, k) = w.matrix().norm();
            const bool breakdown =
                hess(k + 1, k) < std::max(noise_floor, 1e-14 * w_pre);
            if (!breakdown) basis.col(k + 1) = (w / hess(k + 1, k)).matrix();

            for (int i = 0; i < k; ++i) {
                const double t = cs[i] * hess(i, k) + sn[i] * hess(i + 1, k);
                hess(i + 1, k) = -sn[i] * hess(i, k) + cs[i] * hess(i + 1, k);
                hess(i, k) = t;
            }
            const double denom = std::hypot(hess(k, k), hess(k + 1, k));
            cs[k] = hess(k, k) / denom;
            sn[k] = hess(k + 1, k) / denom;
            hess(k, k) = denom;
            hess(k + 1, k) = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] = cs[k] * g[k];

            const double y_norm = hess.topLeftCorner(k + 1, k + 1)
                                      .triangularView<Eigen::Upper>()
                                      .solve(g.head(k + 1))
                                      .norm();
            const bool sane = y_norm <= y_limit;
            if (sane) k_good = k + 1;
            if (breakdown || !sane || std::abs(g[k + 1]) <= target) break;
            if (k % 6 == 5) {
                if (std::abs(g[k + 1]) > 0.95 * est_checkpoint) break;
                est_checkpoint = std::abs(g[k + 1]);
            }
        }

        if (k_good == 0) return x_best;
        Eigen::VectorXd y = hess.topLeftCorner(k_good, k_good)
                                .triangularView<Eigen::Upper>()
                                .solve(g.head(k_good));
        Eigen::ArrayXd update = (basis.leftCols(k_good) * y).array();
        x += precond(update);
    }
    // Out of cycles: hand back the best update and let the Newton loop
    // either still contract or report non-convergence.
    Eigen::ArrayXd r = rhs - apply_op(x);
    return r.matrix().norm() < beta_best ? x : x_best;
}

}  // namespace

bool ContinuationRun::norms_strictly_increasing() const {
    for (std::size_t i = 1; i < norms_sq.size(); ++i)
        if (!(norms_sq[i] > norms_sq[i - 1])) return false;
    return true;
}

RealField stokes_seed(double omega, double s, GridPtr grid) {
    validate_s(s);
    if (!(omega > 1.0))
        throw std::domain_error("stokes_seed: omega must exceed 1");
    const double a = std::sqrt(4.0 * (omega - 1.0) / 3.0);
    const double c3 = a * a * a / (4.0 * (std::pow(3.0, 2.0 * s) - 1.0));
    return sample(grid, [a, c3](double x) { return a * std::sin(x) + c3 * std::sin(3.0 * x); });
}

RealField residual(const RealField& phi, double omega, double s, bool dealias) {
    RealField out = frac_laplacian(phi, s);
    if (dealias) {
        out.values += dealiased_cube(phi).values - omega * phi.values;
    } else {
        out.values += phi.values.cube() - omega * phi.values;
    }
    return out;
}

WaveProfile newton_solve(const RealField& seed, double omega, double s,
                         const SolverConfig& cfg) {
    validate_s(s);
    if (!(omega > 1.0))
        throw std::domain_error("newton_solve: omega must exceed 1");

    GridPtr grid = seed.grid;
    RealField phi = parity_project(seed, Parity::Odd);
    std::vector<double> history;

    for (int iter = 0;; ++iter) {
        if (max_norm(phi) < kTrivialThreshold)
            throw TrivialSolutionError(
                "newton_solve: iterate collapsed onto the zero solution");

        RealField res = residual(phi, omega, s, cfg.dealias);
        const double res_norm = max_norm(res);
        history.push_back(res_norm);
        if (res_norm <= cfg.newton_tol)
            return WaveProfile{std::move(phi), s, omega, res_norm, iter};
        if (iter >= cfg.max_newton_iters) break;

        // Frechet derivative at phi: (-Delta)^s - omega + 3 phi^2, restricted
        // to the odd sector where it is invertible along the branch. Both the
        // input and the output are projected: even-parity roundoff must stay
        // out of the Krylov basis, or the normalization of small Arnoldi
        // vectors inflates it into null directions of the projected operator.
        RealField phi_sq = cfg.dealias ? dealiased_product(phi, phi)
                                       : RealField{grid, phi.values.square()};
        auto apply_op = [&](const Eigen::ArrayXd& q_raw) {
            RealField qf = parity_project(RealField{grid, q_raw}, Parity::Odd);
            RealField out = frac_laplacian(qf, s);
            RealField vq = cfg.dealias ? dealiased_product(phi_sq, qf)
                                       : RealField{grid, phi_sq.values * qf.values};
            out.values += 3.0 * vq.values - omega * qf.values;
            return parity_project(out, Parity::Odd).values;
        };
        // Diagonal preconditioner 1 / (|xi|^{2s} + 1 + omega): positive symbol,
        // parity preserving, captures the stiff multiplier part.
        auto precond = [&](const Eigen::ArrayXd& q) {
            Eigen::VectorXcd c = spectrum(RealField{grid, q});
            const Eigen::ArrayXd& xi = grid->wavenumbers();
            for (Eigen::Index k = 0; k < c.size(); ++k)
                c[k] /= std::pow(std::abs(xi[k]), 2.0 * s) + 1.0 + omega;
            return from_spectrum(grid, c).values;
        };

        // The right-hand side is projected too: the residual of an odd
        // iterate is odd up to transform roundoff, and that even-parity junk
        // is invisible to the projected operator, so leaving it in floors the
        // linear solve far above the requested tolerance. The floor passed to
        // GMRES is the accuracy of one preconditioned operator application on
        // a unit vector; the preconditioner's decay cancels the multiplier's
        // roundoff amplification, leaving a few hundred eps of transform
        // noise that grows like sqrt(N).
        const Eigen::ArrayXd rhs = parity_project(res, Parity::Odd).values;
        const double noise_floor =
            1e3 * std::numeric_limits<double>::epsilon() *
            std::sqrt(static_cast<double>(grid->points().size()));
        Eigen::ArrayXd delta = gmres(apply_op, precond, rhs, cfg.gmres_tol,
                                     cfg.gmres_restart, 10, noise_floor);

        // Backtracking damping: accept the largest step fraction that reduces
        // the residual, so the cubic term cannot throw the iterate across the
        // zero solution or onto the mirrored branch.
        bool accepted = false;
        double lambda = 1.0;
        for (int bt = 0; bt <= 8; ++bt, lambda *= 0.5) {
            RealField cand = parity_project(
                RealField{grid, phi.values - lambda * delta}, Parity::Odd);
            if (max_norm(residual(cand, omega, s, cfg.dealias)) < res_norm) {
                phi = std::move(cand);
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            std::ostringstream msg;
            msg << "newton_solve: stalled at residual " << res_norm
                << " (omega=" << omega << ", s=" << s << ")";
            throw ConvergenceError(msg.str(), history);
        }
    }

    std::ostringstream msg;
    msg << "newton_solve: no convergence after " << cfg.max_newton_iters
        << " iterations at omega=" << omega << ", s=" << s
        << " (last residual " << history.back() << ")";
    throw ConvergenceError(msg.str(), history);
}

namespace {

// One guarded continuation solve. Besides outright failure, a solve that
// converged onto the mirrored branch (negative overlap with its seed; the
// half-period translate of the same orbit) counts as leaving the basin.
std::optional<WaveProfile> attempt(const RealField& seed, double omega, double s,
                                   const SolverConfig& cfg) {
    try {
        WaveProfile wave = newton_solve(seed, omega, s, cfg);
        if (inner_product(wave.field, seed) > 0.0) return wave;
    } catch (const ConvergenceError&) {
    } catch (const TrivialSolutionError&) {
    }
    return std::nullopt;
}

WaveProfile advance(const WaveProfile& from, double target, GridPtr grid,
                    const SolverConfig& cfg, int depth);

// First solve of a chain: seeded by the polynomial approximation, retreating
// toward omega = 1 (where the seed is asymptotically exact) on failure.
WaveProfile solve_from_seed(double omega, double s, GridPtr grid,
                            const SolverConfig& cfg, int depth) {
    if (auto wave = attempt(stokes_seed(omega, s, grid), omega, s, cfg)) return *wave;
    if (depth >= cfg.max_step_halvings)
        throw ContinuationError("continuation: seed solve failed", omega);
    WaveProfile mid = solve_from_seed(0.5 * (1.0 + omega), s, grid, cfg, depth + 1);
    return advance(mid, omega, grid, cfg, depth + 1);
}

WaveProfile advance(const WaveProfile& from, double target, GridPtr grid,
                    const SolverConfig& cfg, int depth) {
    if (auto wave = attempt(from.field, target, from.s, cfg)) return *wave;
    if (depth >= cfg.max_step_halvings)
        throw ContinuationError("continuation: step failed", target);
    WaveProfile mid = advance(from, 0.5 * (from.omega + target), grid, cfg, depth + 1);
    return advance(mid, target, grid, cfg, depth + 1);
}

}  // namespace

ContinuationRun continue_in_omega(double s, const std::vector<double>& omega_targets,
                                  GridPtr grid, const SolverConfig& cfg) {
    validate_s(s);
    if (omega_targets.empty())
        throw std::invalid_argument("continue_in_omega: no targets given");
    for (std::size_t i = 0; i < omega_targets.size(); ++i) {
        if (!(omega_targets[i] > 1.0))
            throw std::invalid_argument("continue_in_omega: targets must exceed 1");
        if (i > 0 && !(omega_targets[i] > omega_targets[i - 1]))
            throw std::invalid_argument("continue_in_omega: targets must increase");
    }
    if (!(omega_targets.front() <= cfg.seed_trust_omega))
        throw std::invalid_argument(
            "continue_in_omega: first target outside the seed trust region");

    ContinuationRun run;
    run.s = s;
    WaveProfile current;
    for (std::size_t i = 0; i < omega_targets.size(); ++i) {
        current = (i == 0)
                      ? solve_from_seed(omega_targets[i], s, grid, cfg, 0)
                      : advance(current, omega_targets[i], grid, cfg, 0);
        run.omegas.push_back(omega_targets[i]);
        run.norms_sq.push_back(inner_product(current.field, current.field));
        run.profiles.push_back(current);
    }
    return run;
}

WaveProfile solve_wave(double s, double omega, GridPtr grid, const SolverConfig& cfg) {
    validate_s(s);
    if (!(omega > 1.0))
        throw std::domain_error("solve_wave: omega must exceed 1");
    if (omega <= cfg.seed_trust_omega)
        return solve_from_seed(omega, s, grid, cfg, 0);

    std::vector<double> ladder;
    double w = std::min(1.1, cfg.seed_trust_omega);
    while (w < omega - 0.5 * cfg.seed_step) {
        ladder.push_back(w);
        w += cfg.seed_step;
    }
    ladder.push_back(omega);
    return continue_in_omega(s, ladder, grid, cfg).profiles.back();
}

LobeCertificate lobe_check(const WaveProfile& wave) {
    LobeCertificate cert;
    const Eigen::ArrayXd& v = wave.field.values;
    RealField deriv = derivative(wave.field);
    const double scale = max_norm(deriv);
    if (scale == 0.0) return cert;

    // Count cyclic sign changes of phi', skipping samples that sit on a
    // critical point to within roundoff.
    const double threshold = 1e-5 * scale;
    std::vector<int> signs;
    for (Eigen::Index j = 0; j < deriv.values.size(); ++j)
        if (std::abs(deriv.values[j]) > threshold)
            signs.push_back(deriv.values[j] > 0.0 ? 1 : -1);
    int flips = 0;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] != signs[(i + 1) % signs.size()]) ++flips;

    Eigen::Index arg_max = 0, arg_min = 0;
    v.maxCoeff(&arg_max);
    v.minCoeff(&arg_min);
    cert.critical_points = flips;
    cert.x_max = wave.field.grid->points()[arg_max];
    cert.x_min = wave.field.grid->points()[arg_min];
    cert.certified = flips == 2 && std::abs(cert.x_max - pi / 2.0) <= 0.1 &&
                     std::abs(cert.x_min + pi / 2.0) <= 0.1;
    return cert;
}

}  // namespace dfnls
