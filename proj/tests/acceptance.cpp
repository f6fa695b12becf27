// Acceptance gate: one pass/fail line per numbered criterion, exit code =
// number of failed criteria. Every line carries the measured numbers next to
// their budgets so a failure can be judged from the output alone. Criteria are
// guarded individually: an exception in one is reported as its failure and
// the rest still run.

#include "dfnls/elliptic.hpp"
#include "dfnls/krein.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace dfnls;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

double l2_norm(const RealField& f) {
    return std::sqrt(inner_product(f, f));
}

// One converged sweep cell with everything criteria 2-5 consume.
struct SweepCell {
    double s = 0.0;
    double omega = 0.0;
    WaveProfile wave;
    KreinAnalysis analysis;      // basis cutoff 250, FD step 1e-3
    KreinReport doubled;         // basis cutoff 500
    double kernel_res_l1 = 0.0;  // ||L1 phi'|| / ||phi'||
    double kernel_res_l2 = 0.0;  // ||L2 phi|| / ||phi||
};

constexpr double kSweepS[] = {0.5, 0.7, 0.9, 1.0};
constexpr double kSweepOmega[] = {1.2, 1.5, 2.0, 3.0};

std::vector<SweepCell> run_sweep() {
    auto grid = PeriodicGrid::make(1024);
    SolverConfig cfg;
    cfg.newton_tol = 1e-7;
    std::vector<SweepCell> cells;
    for (double s : kSweepS) {
        for (double omega : kSweepOmega) {
            SweepCell cell;
            cell.s = s;
            cell.omega = omega;
            cell.wave = solve_wave(s, omega, grid, cfg);
            cell.analysis = analyze_wave_full(cell.wave, cfg, 250, 0.0, 1e-3);
            cell.doubled = analyze_wave(cell.wave, cfg, 500);
            const RealField dphi = derivative(cell.wave.field);
            const RealField k1 =
                apply({OperatorKind::L1, cell.wave, Parity::Even}, dphi);
            const RealField k2 =
                apply({OperatorKind::L2, cell.wave, Parity::Odd}, cell.wave.field);
            cell.kernel_res_l1 = l2_norm(k1) / l2_norm(dphi);
            cell.kernel_res_l2 = l2_norm(k2) / l2_norm(cell.wave.field);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    int failures = 0;
    auto guarded = [&failures](
                       int index,
                       const std::function<std::pair<bool, std::string>()>& body) {
        bool ok = false;
        std::string detail;
        try {
            std::tie(ok, detail) = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", index,
                    detail.c_str());
        if (!ok) ++failures;
    };

    // 1. The closed-form elliptic profile is reproduced at production
    //    resolution within the time budget.
    guarded(1, []() -> std::pair<bool, std::string> {
        const auto t0 = std::chrono::steady_clock::now();
        auto grid = PeriodicGrid::make(4096);
        const WaveProfile wave = solve_wave(1.0, 1.5, grid, SolverConfig{});
        const double elapsed = seconds_since(t0);
        const WaveProfile exact = exact_profile(1.5, grid);
        const double dist =
            max_norm({grid, wave.field.values - exact.field.values});
        std::ostringstream msg;
        msg << "s=1 omega=1.5 N=4096: max distance to elliptic profile " << dist
            << " (budget 1e-05), solve took " << elapsed << " s (budget 30 s)";
        return {dist <= 1e-5 && elapsed <= 30.0, msg.str()};
    });

    // Criteria 2-5 all read off the same 16-cell sweep.
    std::vector<SweepCell> cells;
    std::string sweep_error;
    try {
        cells = run_sweep();
    } catch (const std::exception& e) {
        sweep_error = e.what();
    }
    auto sweep_guarded =
        [&](int index,
            const std::function<std::pair<bool, std::string>()>& body) {
            if (!sweep_error.empty()) {
                std::printf("[FAIL] criterion %d: sweep failed: %s\n", index,
                            sweep_error.c_str());
                ++failures;
                return;
            }
            guarded(index, body);
        };

    // 2. Negative/kernel counts of both linearized operators, per sector,
    //    identical at basis cutoffs 250 and 500.
    sweep_guarded(2, [&cells]() -> std::pair<bool, std::string> {
        int good = 0;
        bool doubling_ok = true;
        for (const SweepCell& cell : cells) {
            const KreinAnalysis& a = cell.analysis;
            const bool counts_ok =
                a.l1_odd.n_neg + a.l1_even.n_neg == 1 &&
                a.l1_odd.n_zero + a.l1_even.n_zero == 1 &&
                a.l1_even.n_zero == 1 &&  // L1 kernel sits in the even sector
                a.l2_odd.n_neg + a.l2_even.n_neg == 2 &&
                a.l2_odd.n_zero + a.l2_even.n_zero == 1 &&
                a.l2_odd.n_zero == 1;  // L2 kernel sits in the odd sector
            if (counts_ok) ++good;
            doubling_ok = doubling_ok &&
                          cell.doubled.n_l_odd == a.report.n_l_odd &&
                          cell.doubled.n_l_even == a.report.n_l_even &&
                          cell.doubled.n_v_odd == a.report.n_v_odd &&
                          cell.doubled.n_v_even == a.report.n_v_even;
        }
        std::ostringstream msg;
        msg << good << "/16 cells report n(L1)=1 z(L1)=1 (even kernel), "
            << "n(L2)=2 z(L2)=1 (odd kernel); counts "
            << (doubling_ok ? "unchanged" : "CHANGED")
            << " under cutoff doubling 250 -> 500";
        return {good == 16 && doubling_ok, msg.str()};
    });

    // 3. Signs of the quadratic forms, the resulting verdicts, and strict
    //    growth of the squared norm along every s-chain.
    sweep_guarded(3, [&cells]() -> std::pair<bool, std::string> {
        double min_vodd = std::numeric_limits<double>::infinity();
        double max_veven = -std::numeric_limits<double>::infinity();
        int unstable = 0;
        bool monotone = true;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const KreinReport& r = cells[i].analysis.report;
            min_vodd = std::min(min_vodd, r.v_odd);
            max_veven = std::max(max_veven, r.v_even);
            if (r.verdict == Verdict::SpectrallyUnstable) ++unstable;
            if (i % 4 != 0) {  // same s-chain as the previous cell
                monotone = monotone &&
                           inner_product(cells[i].wave.field, cells[i].wave.field) >
                               inner_product(cells[i - 1].wave.field,
                                             cells[i - 1].wave.field);
            }
        }
        const bool signs_ok = min_vodd > 0.0 && max_veven < 0.0;
        std::ostringstream msg;
        msg << "min v_odd " << min_vodd << " > 0, max v_even " << max_veven
            << " < 0, ||phi||^2 " << (monotone ? "strictly increasing" : "NOT monotone")
            << " along each s-chain; " << unstable
            << "/16 verdicts spectrally_unstable (counts give an even index "
               "difference in every sector, so the verdict stays inconclusive)";
        return {signs_ok && monotone && unstable == 16, msg.str()};
    });

    // 4. The quadratic form v_odd against the finite-difference derivative of
    //    the squared norm, relative agreement at h = 1e-3.
    sweep_guarded(4, [&cells]() -> std::pair<bool, std::string> {
        double worst = 0.0;
        for (const SweepCell& cell : cells) {
            const KreinReport& r = cell.analysis.report;
            worst = std::max(worst,
                             std::abs(r.v_odd - r.dnorm_domega) / std::abs(r.v_odd));
        }
        std::ostringstream msg;
        msg << "max |v_odd - dnorm_domega| / |v_odd| = " << worst
            << " over 16 cells (budget 1e-03, FD step 1e-3)";
        return {worst <= 1e-3, msg.str()};
    });

    // 5. Kernel residuals of both operators at every converged wave.
    sweep_guarded(5, [&cells]() -> std::pair<bool, std::string> {
        double worst1 = 0.0, worst2 = 0.0;
        for (const SweepCell& cell : cells) {
            worst1 = std::max(worst1, cell.kernel_res_l1);
            worst2 = std::max(worst2, cell.kernel_res_l2);
        }
        std::ostringstream msg;
        msg << "max ||L1 phi'||/||phi'|| = " << worst1
            << ", max ||L2 phi||/||phi|| = " << worst2
            << " over 16 cells (budget 1e-05 each)";
        return {worst1 <= 1e-5 && worst2 <= 1e-5, msg.str()};
    });

    // 6. Distance to the two-term small-amplitude expansion near the
    //    bifurcation: bounded by 5 a^5, with an error/a^5 ratio that must not
    //    grow as omega -> 1.
    guarded(6, []() -> std::pair<bool, std::string> {
        auto grid = PeriodicGrid::make(1024);
        SolverConfig cfg;
        cfg.newton_tol = 1e-9;
        bool bound_ok = true;
        bool growth_ok = true;
        std::ostringstream chains;
        for (double s : {0.5, 1.0}) {
            double prev_ratio = 0.0;
            chains << (s == 0.5 ? " s=0.5 ratios:" : "; s=1 ratios:");
            for (double omega : {1.04, 1.02, 1.01}) {  // marching toward onset
                const double a = std::sqrt(4.0 * (omega - 1.0) / 3.0);
                const double a5 = std::pow(a, 5);
                const WaveProfile wave = solve_wave(s, omega, grid, cfg);
                const RealField expansion = stokes_seed(omega, s, grid);
                const double err = max_norm(
                    {grid, wave.field.values - expansion.values});
                const double ratio = err / a5;
                bound_ok = bound_ok && err <= 5.0 * a5;
                if (prev_ratio > 0.0 && ratio > 1.1 * prev_ratio) growth_ok = false;
                prev_ratio = ratio;
                chains << ' ' << ratio;
            }
        }
        std::ostringstream msg;
        msg << "error <= 5 a^5 " << (bound_ok ? "holds" : "VIOLATED")
            << " at all six cells, but the error/a^5 ratio "
            << (growth_ok ? "does not grow" : "grows") << " as omega -> 1 ("
            << chains.str()
            << "); the two-term expansion carries an O(a^3) first-harmonic "
               "correction, so the measured error is Theta(a^3)";
        return {bound_ok && growth_ok, msg.str()};
    });

    // 7. Special functions against an independent series oracle, plus the
    //    defining identities of the elliptic sine.
    guarded(7, []() -> std::pair<bool, std::string> {
        double worst_k = 0.0;
        double worst_sn = 0.0;
        for (int i = 0; i <= 9; ++i) {
            const double k = 0.1 * i;
            const double ours = complete_k(k);
            const double oracle = oracles::series_complete_k(k);
            worst_k = std::max(worst_k, std::abs(ours - oracle) / oracle);
            const double big_k = complete_k(k);
            worst_sn = std::max(worst_sn, std::abs(jacobi_sn(big_k, k) - 1.0));
            for (double u : {0.3, 1.1, 2.5}) {
                worst_sn = std::max(worst_sn, std::abs(jacobi_sn(u + 4.0 * big_k, k) -
                                                       jacobi_sn(u, k)));
            }
        }
        std::ostringstream msg;
        msg << "max relative K(k) error vs series oracle " << worst_k
            << " (budget 1e-12); max |sn(K,k)-1| and 4K-periodicity defect "
            << worst_sn << " (budget 1e-10)";
        return {worst_k <= 1e-12 && worst_sn <= 1e-10, msg.str()};
    });

    // 8. Structural property suite, timed: projections, operator symmetry,
    //    Parseval, cross-sector couplings, verdict stability under grid
    //    refinement.
    guarded(8, []() -> std::pair<bool, std::string> {
        const auto t0 = std::chrono::steady_clock::now();
        auto grid = PeriodicGrid::make(256);
        const RealField f{grid, oracles::random_values(256, 7)};
        const RealField g{grid, oracles::random_values(256, 11)};

        // Parity projections are idempotent and resolve the identity.
        const RealField odd = parity_project(f, Parity::Odd);
        const RealField even = parity_project(f, Parity::Even);
        const double idem =
            max_norm({grid, parity_project(odd, Parity::Odd).values - odd.values});
        const double resolve =
            max_norm({grid, odd.values + even.values - f.values});
        const bool parity_ok =
            idem <= 1e-14 * max_norm(f) && resolve <= 1e-14 * max_norm(f);

        // The fractional Laplacian is symmetric for the grid inner product.
        const double lhs = inner_product(frac_laplacian(f, 0.63), g);
        const double rhs = inner_product(f, frac_laplacian(g, 0.63));
        const bool sym_ok = std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs);

        // Parseval: grid inner product equals 2 pi times the coefficient sum.
        const double phys = inner_product(f, f);
        const double spec = 2.0 * pi * spectrum(f).squaredNorm();
        const bool parseval_ok = std::abs(phys - spec) <= 1e-12 * phys;

        // Cross-sector couplings of the inverse-operator generators vanish.
        auto grid512 = PeriodicGrid::make(512);
        SolverConfig cfg;
        cfg.newton_tol = 1e-8;
        const WaveProfile wave = solve_wave(0.7, 1.5, grid512, cfg);
        const Eigen::Index m = 128;
        const Eigen::MatrixXd a1 = assemble({OperatorKind::L1, wave, Parity::Odd}, m);
        const RealField chi = field_from_sine_coeffs(
            grid512, a1.llt().solve(sine_coeffs(wave.field, m)));
        const RealField dphi = derivative(wave.field);
        const Eigen::MatrixXd a2 = assemble({OperatorKind::L2, wave, Parity::Even}, m);
        const RealField beta = field_from_cosine_coeffs(
            grid512, a2.fullPivLu().solve(cosine_coeffs(dphi, m)));
        const double off1 = std::abs(inner_product(chi, dphi));
        const double off2 = std::abs(inner_product(beta, wave.field));
        const bool offdiag_ok =
            off1 <= 1e-8 * l2_norm(chi) * l2_norm(dphi) &&
            off2 <= 1e-8 * l2_norm(beta) * l2_norm(wave.field);

        // The verdict and every count survive doubling the grid.
        const WaveProfile fine = solve_wave(0.7, 1.5, PeriodicGrid::make(1024), cfg);
        const KreinReport coarse_report = analyze_wave(wave, cfg, m);
        const KreinReport fine_report = analyze_wave(fine, cfg, m);
        const bool refine_ok =
            coarse_report.verdict == fine_report.verdict &&
            coarse_report.n_l_odd == fine_report.n_l_odd &&
            coarse_report.n_l_even == fine_report.n_l_even &&
            coarse_report.n_v_odd == fine_report.n_v_odd &&
            coarse_report.n_v_even == fine_report.n_v_even;

        const double elapsed = seconds_since(t0);
        std::ostringstream msg;
        msg << "parity " << (parity_ok ? "ok" : "BAD") << ", symmetry "
            << (sym_ok ? "ok" : "BAD") << ", Parseval "
            << (parseval_ok ? "ok" : "BAD") << ", off-diagonal couplings "
            << (offdiag_ok ? "ok" : "BAD") << ", verdict under N -> 2N "
            << (refine_ok ? "unchanged" : "CHANGED") << "; " << elapsed
            << " s (budget 300 s)";
        return {parity_ok && sym_ok && parseval_ok && offdiag_ok && refine_ok &&
                    elapsed <= 300.0,
                msg.str()};
    });

    if (failures == 0) {
        std::printf("all acceptance criteria met\n");
    } else {
        std::printf("%d acceptance criteri%s not met\n", failures,
                    failures == 1 ? "on" : "a");
    }
    return failures;
}
