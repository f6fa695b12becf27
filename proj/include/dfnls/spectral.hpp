#pragma once

#include "dfnls/grid.hpp"

#include <Eigen/Dense>

namespace dfnls {

// Parity sectors of 2*pi-periodic functions about x = 0. Full means "no
// symmetry imposed"; projections are only defined for Odd and Even.
enum class Parity { Odd, Even, Full };

const char* parity_name(Parity p);

// Normalized discrete Fourier coefficients in bin order:
//   spectrum(f)[k] = (1/N) * sum_j f_j exp(-i*2*pi*j*k/N).
// For a trigonometric polynomial f(x) = sum_xi c(xi) e^{i xi x} with
// |xi| < N/2 this equals c(xi_k) * exp(i*pi*xi_k) because x_0 = -pi; the
// phase cancels in any multiplier round trip, and fourier_coeff() below
// returns the phased (physical) coefficient when it matters.
Eigen::VectorXcd spectrum(const RealField& f);

// Inverse of spectrum(): rebuild samples from bin-ordered coefficients,
// discarding the (roundoff-level) imaginary part.
RealField from_spectrum(GridPtr grid, const Eigen::VectorXcd& coeffs);

// Physical Fourier coefficient f_hat(xi) = (1/2pi) * integral f e^{-i xi x} dx
// for |xi| <= N/2, computed from a bin-ordered spectrum.
std::complex<double> fourier_coeff(const Eigen::VectorXcd& coeffs, Eigen::Index xi);

// Fractional Laplacian (-Delta)^s as the Fourier multiplier |xi|^{2s}.
// Requires s in (0, 1]. The mean mode is annihilated; the Nyquist mode is
// retained with multiplier (N/2)^{2s}.
RealField frac_laplacian(const RealField& f, double s);

// Spectral first derivative (multiplier i*xi). The Nyquist mode is zeroed,
// the standard choice for odd-order derivatives on real data.
RealField derivative(const RealField& f);

// Trapezoidal L2 inner product (f, g) = (2*pi/N) * sum_j f_j g_j, exact for
// trigonometric polynomials of degree < N. Symmetric and bilinear.
double inner_product(const RealField& f, const RealField& g);

double max_norm(const RealField& f);

// Projection onto the odd/even sector: (f(x) -+ f(-x))/2 using the exact
// grid reflection x_j -> x_{(N-j) mod N}. Idempotent; odd + even = identity.
// Parity::Full returns f unchanged.
RealField parity_project(const RealField& f, Parity p);

// max-norm distance between f and its projection onto the given sector.
double parity_defect(const RealField& f, Parity p);

// Coefficients of f in the orthonormal sine basis e_m = sin(m x)/sqrt(pi),
// m = 1..m_max (requires m_max <= N/2 - 1). Exact for band-limited f.
Eigen::VectorXd sine_coeffs(const RealField& f, Eigen::Index m_max);

// Coefficients in the orthonormal cosine basis e_0 = 1/sqrt(2*pi),
// e_m = cos(m x)/sqrt(pi), m = 1..m_max; returns m_max + 1 values.
Eigen::VectorXd cosine_coeffs(const RealField& f, Eigen::Index m_max);

// Rebuild sum_m b[m-1] * sin(m x)/sqrt(pi) on the grid.
RealField field_from_sine_coeffs(GridPtr grid, const Eigen::VectorXd& b);

// Rebuild b[0]/sqrt(2*pi) + sum_m b[m] * cos(m x)/sqrt(pi) on the grid.
RealField field_from_cosine_coeffs(GridPtr grid, const Eigen::VectorXd& b);

// Pointwise products evaluated on a 2x zero-padded grid and truncated back,
// which removes aliasing from quadratic and cubic nonlinearities.
RealField dealiased_product(const RealField& f, const RealField& g);
RealField dealiased_cube(const RealField& f);

// Trigonometric interpolation of f onto a grid with twice as many points.
RealField upsample2x(const RealField& f);

}  // namespace dfnls
