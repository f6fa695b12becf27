#pragma once

#include "dfnls/wave.hpp"

namespace dfnls {

// Self-adjoint blocks of the linearization about a standing wave:
//   L1 = (-Delta)^s - omega + 3 phi^2   (acts on the real part)
//   L2 = (-Delta)^s - omega + phi^2     (acts on the imaginary part)
// Both commute with the reflection x -> -x and so preserve parity sectors.
enum class OperatorKind { L1, L2 };

const char* operator_kind_name(OperatorKind kind);

struct LinearizedOperator {
    OperatorKind kind = OperatorKind::L1;
    WaveProfile wave;
    Parity parity = Parity::Full;
};

// The multiplication part of the operator (3 phi^2 or phi^2) on the grid.
Eigen::ArrayXd potential(const LinearizedOperator& op);

// Matrix-free application. The input must respect the declared parity sector
// to within 1e-8 relative (invalid_argument otherwise); the output is
// projected back onto it.
RealField apply(const LinearizedOperator& op, const RealField& f);

// Dense symmetric sector matrix in the orthonormal basis sin(m x)/sqrt(pi)
// (odd, m = 1..m_max) or {1/sqrt(2 pi), cos(m x)/sqrt(pi)} (even,
// m = 0..m_max). m_max = 0 selects the default N/4; values up to N/2 are
// allowed because the potential coefficients are computed exactly on a
// doubled grid. Parity::Full cannot be assembled into one matrix.
Eigen::MatrixXd assemble(const LinearizedOperator& op, Eigen::Index m_max = 0);

struct SpectrumReport {
    OperatorKind kind = OperatorKind::L1;
    Parity parity = Parity::Full;
    double s = 0.0;
    double omega = 0.0;
    double kernel_tol = 0.0;      // threshold actually used for classification
    Eigen::VectorXd eigenvalues;  // ascending; Full merges both sectors
    int n_neg = 0;                // eigenvalues below -kernel_tol
    int n_zero = 0;               // eigenvalues within [-kernel_tol, +kernel_tol]
    Eigen::Index basis_dim = 0;
    bool ambiguous = false;       // some |eigenvalue| within a decade of kernel_tol
};

// Kernel-classification threshold 1e-4 * (1 + |omega| + max |potential|).
// The factor in parentheses bounds the magnitude of every negative
// eigenvalue, so the threshold is tied to the low-lying spectrum rather than
// to the (much larger) multiplier growth at the basis cutoff.
double default_kernel_tol(const LinearizedOperator& op);

// Eigenvalue counts of the assembled sector matrix; kernel_tol = 0 selects
// the default threshold. Parity::Full assembles both sectors and merges.
SpectrumReport eig_counts(const LinearizedOperator& op, double kernel_tol = 0.0,
                          Eigen::Index m_max = 0);

}  // namespace dfnls
