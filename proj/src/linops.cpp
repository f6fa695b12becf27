#include "dfnls/linops.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfnls {

namespace {

// Fourier coefficients Vhat(j), j = 0..j_max, of the (even, real) potential,
// computed exactly: phi is band-limited, so squaring on a 2x grid introduces
// no aliasing and resolves wavenumbers up to N.
Eigen::VectorXd potential_coeffs(const LinearizedOperator& op, Eigen::Index j_max) {
    const Eigen::Index n = op.wave.field.grid->n_modes();
    if (j_max > n)
        throw std::invalid_argument("assemble: basis cutoff too large for the grid");

    RealField phi_fine = upsample2x(op.wave.field);
    const double factor = op.kind == OperatorKind::L1 ? 3.0 : 1.0;
    RealField pot_fine{phi_fine.grid, factor * phi_fine.values.square()};
    const Eigen::VectorXcd cpot = spectrum(pot_fine);

    Eigen::VectorXd vhat(j_max + 1);
    for (Eigen::Index j = 0; j <= j_max; ++j)
        vhat[j] = fourier_coeff(cpot, j).real();
    return vhat;
}

}  // namespace

const char* operator_kind_name(OperatorKind kind) {
    return kind == OperatorKind::L1 ? "L1" : "L2";
}

Eigen::ArrayXd potential(const LinearizedOperator& op) {
    const double factor = op.kind == OperatorKind::L1 ? 3.0 : 1.0;
    return factor * op.wave.field.values.square();
}

RealField apply(const LinearizedOperator& op, const RealField& f) {
    require_same_grid(op.wave.field, f);
    const double scale = max_norm(f);
    if (op.parity != Parity::Full && scale > 0.0 &&
        parity_defect(f, op.parity) > 1e-8 * scale)
        throw std::invalid_argument("apply: field violates the declared parity sector");

    RealField out = frac_laplacian(f, op.wave.s);
    out.values += (potential(op) - op.wave.omega) * f.values;
    return parity_project(out, op.parity);
}

Eigen::MatrixXd assemble(const LinearizedOperator& op, Eigen::Index m_max) {
    if (op.parity == Parity::Full)
        throw std::invalid_argument("assemble: pick a parity sector (odd or even)");
    const Eigen::Index n = op.wave.field.grid->n_modes();
    if (m_max == 0) m_max = n / 4;
    if (m_max < 1 || m_max > n / 2)
        throw std::invalid_argument("assemble: basis cutoff must lie in [1, N/2]");

    const Eigen::VectorXd vhat = potential_coeffs(op, 2 * m_max);
    const double s = op.wave.s;
    const double omega = op.wave.omega;
    auto multiplier = [s](Eigen::Index m) {
        return std::pow(static_cast<double>(m), 2.0 * s);
    };

    if (op.parity == Parity::Odd) {
        Eigen::MatrixXd a(m_max, m_max);
        for (Eigen::Index m = 1; m <= m_max; ++m)
            for (Eigen::Index l = 1; l <= m_max; ++l)
                a(m - 1, l - 1) = vhat[std::abs(m - l)] - vhat[m + l] +
                                  (m == l ? multiplier(m) - omega : 0.0);
        return a;
    }

    Eigen::MatrixXd a(m_max + 1, m_max + 1);
    a(0, 0) = vhat[0] - omega;
    for (Eigen::Index m = 1; m <= m_max; ++m) {
        a(0, m) = std::sqrt(2.0) * vhat[m];
        a(m, 0) = a(0, m);
        for (Eigen::Index l = 1; l <= m_max; ++l)
            a(m, l) = vhat[std::abs(m - l)] + vhat[m + l] +
                      (m == l ? multiplier(m) - omega : 0.0);
    }
    return a;
}

double default_kernel_tol(const LinearizedOperator& op) {
    return 1e-4 * (1.0 + std::abs(op.wave.omega) + potential(op).abs().maxCoeff());
}

SpectrumReport eig_counts(const LinearizedOperator& op, double kernel_tol,
                          Eigen::Index m_max) {
    SpectrumReport report;
    report.kind = op.kind;
    report.parity = op.parity;
    report.s = op.wave.s;
    report.omega = op.wave.omega;

    if (op.parity == Parity::Full) {
        LinearizedOperator odd{op.kind, op.wave, Parity::Odd};
        LinearizedOperator even{op.kind, op.wave, Parity::Even};
        const SpectrumReport ro = eig_counts(odd, kernel_tol, m_max);
        const SpectrumReport re = eig_counts(even, kernel_tol, m_max);
        report.kernel_tol = ro.kernel_tol;
        report.basis_dim = ro.basis_dim + re.basis_dim;
        report.n_neg = ro.n_neg + re.n_neg;
        report.n_zero = ro.n_zero + re.n_zero;
        report.ambiguous = ro.ambiguous || re.ambiguous;
        report.eigenvalues.resize(report.basis_dim);
        report.eigenvalues << ro.eigenvalues, re.eigenvalues;
        std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
        return report;
    }

    if (kernel_tol <= 0.0) kernel_tol = default_kernel_tol(op);
    const Eigen::MatrixXd a = assemble(op, m_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_counts: eigensolver failed to converge");

    report.kernel_tol = kernel_tol;
    report.eigenvalues = solver.eigenvalues();
    report.basis_dim = a.rows();
    for (double lambda : report.eigenvalues) {
        if (lambda < -kernel_tol)
            ++report.n_neg;
        else if (lambda <= kernel_tol)
            ++report.n_zero;
        const double mag = std::abs(lambda);
        if (mag > 0.1 * kernel_tol && mag < 10.0 * kernel_tol) report.ambiguous = true;
    }
    return report;
}

}  // namespace dfnls
