#include "dfnls/krein.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <cmath>
#include <sstream>

namespace dfnls {

namespace {

constexpr double kRcondFloor = 1e-12;

SectorProduct finish(const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& b, double rcond) {
    SectorProduct out;
    out.value = x.dot(b);
    out.solve_residual = (a * x - b).norm() / b.norm();
    out.rcond = rcond;
    return out;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SpectrallyUnstable: return "spectrally_unstable";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::StableCandidate: return "stable_candidate";
    }
    return "?";
}

SectorProduct v_odd(const WaveProfile& wave, Eigen::Index m_max) {
    if (m_max == 0) m_max = wave.field.grid->n_modes() / 4;
    const LinearizedOperator op{OperatorKind::L1, wave, Parity::Odd};
    const Eigen::MatrixXd a = assemble(op, m_max);
    const Eigen::VectorXd b = sine_coeffs(wave.field, m_max);

    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success)
        throw SingularSectorError(
            "v_odd: odd-sector L1 is not positive definite "
            "(kernel or negative direction leaked into the sector)", 0.0);
    const double rcond = llt.rcond();
    if (rcond < kRcondFloor)
        throw SingularSectorError("v_odd: odd-sector L1 numerically singular", rcond);
    return finish(a, llt.solve(b), b, rcond);
}

SectorProduct v_even(const WaveProfile& wave, Eigen::Index m_max) {
    if (m_max == 0) m_max = wave.field.grid->n_modes() / 4;
    const LinearizedOperator op{OperatorKind::L2, wave, Parity::Even};
    const Eigen::MatrixXd a = assemble(op, m_max);
    const Eigen::VectorXd b = cosine_coeffs(derivative(wave.field), m_max);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    const double rcond = lu.rcond();
    if (!lu.isInvertible() || rcond < kRcondFloor)
        throw SingularSectorError("v_even: even-sector L2 numerically singular", rcond);
    return finish(a, lu.solve(b), b, rcond);
}

double dnorm_domega(const WaveProfile& wave, double h, const SolverConfig& cfg) {
    if (!(h > 0.0))
        throw std::invalid_argument("dnorm_domega: step must be positive");
    if (!(h <= (wave.omega - 1.0) / 5.0))
        throw std::invalid_argument(
            "dnorm_domega: step too large relative to omega - 1");

    const WaveProfile plus = newton_solve(wave.field, wave.omega + h, wave.s, cfg);
    const WaveProfile minus = newton_solve(wave.field, wave.omega - h, wave.s, cfg);
    const double n_plus = inner_product(plus.field, plus.field);
    const double n_minus = inner_product(minus.field, minus.field);
    return (n_plus - n_minus) / (4.0 * h);
}

KreinReport krein_verdict(const WaveProfile& wave,
                          const SpectrumReport& l1_odd, const SpectrumReport& l1_even,
                          const SpectrumReport& l2_odd, const SpectrumReport& l2_even,
                          const SectorProduct& vodd, const SectorProduct& veven,
                          std::optional<int> n_l_full_check) {
    KreinReport report;
    report.s = wave.s;
    report.omega = wave.omega;
    report.v_odd = vodd.value;
    report.v_even = veven.value;
    report.n_l_odd = l1_odd.n_neg + l2_odd.n_neg;
    report.n_l_even = l1_even.n_neg + l2_even.n_neg;
    report.n_l_full = report.n_l_odd + report.n_l_even;
    if (n_l_full_check && *n_l_full_check != report.n_l_full) {
        std::ostringstream msg;
        msg << "krein_verdict: full-space negative count " << *n_l_full_check
            << " does not match the sector sum " << report.n_l_full;
        throw std::logic_error(msg.str());
    }

    report.n_v_odd = vodd.value < 0.0 ? 1 : 0;
    report.n_v_even = veven.value < 0.0 ? 1 : 0;
    report.n_v_full = report.n_v_odd + report.n_v_even;

    const int d_odd = report.n_l_odd - report.n_v_odd;
    const int d_even = report.n_l_even - report.n_v_even;
    const int d_full = report.n_l_full - report.n_v_full;
    const auto is_odd = [](int d) { return std::abs(d) % 2 == 1; };
    if (is_odd(d_odd) || is_odd(d_even) || is_odd(d_full))
        report.verdict = Verdict::SpectrallyUnstable;
    else if (d_full == 0)
        report.verdict = Verdict::StableCandidate;
    else
        report.verdict = Verdict::Inconclusive;
    return report;
}

KreinAnalysis analyze_wave_full(const WaveProfile& wave, const SolverConfig& cfg,
                                Eigen::Index m_max, double kernel_tol, double fd_step) {
    if (m_max == 0) m_max = wave.field.grid->n_modes() / 4;
    KreinAnalysis a;
    a.l1_odd = eig_counts({OperatorKind::L1, wave, Parity::Odd}, kernel_tol, m_max);
    a.l1_even = eig_counts({OperatorKind::L1, wave, Parity::Even}, kernel_tol, m_max);
    a.l2_odd = eig_counts({OperatorKind::L2, wave, Parity::Odd}, kernel_tol, m_max);
    a.l2_even = eig_counts({OperatorKind::L2, wave, Parity::Even}, kernel_tol, m_max);
    a.vodd = v_odd(wave, m_max);
    a.veven = v_even(wave, m_max);

    a.report = krein_verdict(wave, a.l1_odd, a.l1_even, a.l2_odd, a.l2_even,
                             a.vodd, a.veven);
    if (fd_step > 0.0) a.report.dnorm_domega = dnorm_domega(wave, fd_step, cfg);

    a.report.provenance.n_modes = wave.field.grid->n_modes();
    a.report.provenance.basis_cutoff = m_max;
    a.report.provenance.newton_tol = cfg.newton_tol;
    a.report.provenance.gmres_tol = cfg.gmres_tol;
    a.report.provenance.kernel_tol = a.l1_odd.kernel_tol;
    a.report.provenance.fd_step = fd_step;
    a.report.provenance.newton_iters = wave.newton_iters;
    return a;
}

KreinReport analyze_wave(const WaveProfile& wave, const SolverConfig& cfg,
                         Eigen::Index m_max, double kernel_tol, double fd_step) {
    return analyze_wave_full(wave, cfg, m_max, kernel_tol, fd_step).report;
}

}  // namespace dfnls
