#include "dfnls/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace dfnls {

namespace {

using Complex = std::complex<double>;

// Transform plans are cached per thread; concurrent transforms on distinct
// fields from different workers are safe.
Eigen::VectorXcd fft_forward(const Eigen::ArrayXd& values) {
    thread_local Eigen::FFT<double> fft;
    Eigen::VectorXcd in = values.matrix().cast<Complex>();
    Eigen::VectorXcd out(in.size());
    fft.fwd(out, in);
    out /= static_cast<double>(in.size());
    return out;
}

Eigen::ArrayXd fft_inverse(const Eigen::VectorXcd& coeffs) {
    thread_local Eigen::FFT<double> fft;
    Eigen::VectorXcd scaled = coeffs * static_cast<double>(coeffs.size());
    Eigen::VectorXcd out(coeffs.size());
    fft.inv(out, scaled);
    return out.real().array();
}

// Embed an N-bin spectrum into 2N bins (zero padding). The single Nyquist
// coefficient is split evenly between +N/2 and -N/2 to keep the field real.
Eigen::VectorXcd pad_spectrum(const Eigen::VectorXcd& c) {
    const Eigen::Index n = c.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(2 * n);
    out.head(n / 2) = c.head(n / 2);
    out.segment(3 * n / 2 + 1, n / 2 - 1) = c.segment(n / 2 + 1, n / 2 - 1);
    out[n / 2] = 0.5 * c[n / 2];
    out[3 * n / 2] = 0.5 * c[n / 2];
    return out;
}

// Keep only wavenumbers representable on the coarse grid; +-N/2 fold onto
// the single coarse Nyquist bin.
Eigen::VectorXcd truncate_spectrum(const Eigen::VectorXcd& cf) {
    const Eigen::Index n = cf.size() / 2;
    Eigen::VectorXcd out(n);
    out.head(n / 2) = cf.head(n / 2);
    out[n / 2] = cf[n / 2] + cf[3 * n / 2];
    out.segment(n / 2 + 1, n / 2 - 1) = cf.segment(3 * n / 2 + 1, n / 2 - 1);
    return out;
}

}  // namespace

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Odd: return "odd";
        case Parity::Even: return "even";
        case Parity::Full: return "full";
    }
    return "?";
}

Eigen::VectorXcd spectrum(const RealField& f) {
    return fft_forward(f.values);
}

RealField from_spectrum(GridPtr grid, const Eigen::VectorXcd& coeffs) {
    if (coeffs.size() != grid->n_modes())
        throw std::invalid_argument("from_spectrum: coefficient count does not match grid");
    return RealField{grid, fft_inverse(coeffs)};
}

std::complex<double> fourier_coeff(const Eigen::VectorXcd& coeffs, Eigen::Index xi) {
    const Eigen::Index n = coeffs.size();
    if (xi < -n / 2 || xi > n / 2)
        throw std::invalid_argument("fourier_coeff: wavenumber outside transform band");
    const Eigen::Index bin = xi >= 0 ? (xi == n / 2 ? n / 2 : xi) : xi + n;
    // x_0 = -pi shifts bin k by exp(i*pi*xi): a sign flip for odd wavenumbers.
    const double phase = (xi % 2 == 0) ? 1.0 : -1.0;
    return phase * coeffs[bin];
}

RealField frac_laplacian(const RealField& f, double s) {
    if (!(s > 0.0 && s <= 1.0))
        throw std::domain_error("frac_laplacian: s must lie in (0, 1]");
    Eigen::VectorXcd c = spectrum(f);
    const Eigen::ArrayXd& xi = f.grid->wavenumbers();
    for (Eigen::Index k = 0; k < c.size(); ++k)
        c[k] *= std::pow(std::abs(xi[k]), 2.0 * s);
    return from_spectrum(f.grid, c);
}

RealField derivative(const RealField& f) {
    Eigen::VectorXcd c = spectrum(f);
    const Eigen::ArrayXd& xi = f.grid->wavenumbers();
    for (Eigen::Index k = 0; k < c.size(); ++k)
        c[k] *= Complex(0.0, xi[k]);
    c[f.grid->n_modes() / 2] = 0.0;
    return from_spectrum(f.grid, c);
}

double inner_product(const RealField& f, const RealField& g) {
    require_same_grid(f, g);
    return f.grid->spacing() * (f.values * g.values).sum();
}

double max_norm(const RealField& f) {
    return f.values.abs().maxCoeff();
}

RealField parity_project(const RealField& f, Parity p) {
    if (p == Parity::Full) return f;
    const Eigen::Index n = f.grid->n_modes();
    Eigen::ArrayXd out(n);
    const double sign = (p == Parity::Odd) ? -1.0 : 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index jr = (n - j) % n;  // grid point at -x_j
        out[j] = 0.5 * (f.values[j] + sign * f.values[jr]);
    }
    return RealField{f.grid, std::move(out)};
}

double parity_defect(const RealField& f, Parity p) {
    RealField proj = parity_project(f, p);
    return (f.values - proj.values).abs().maxCoeff();
}

Eigen::VectorXd sine_coeffs(const RealField& f, Eigen::Index m_max) {
    const Eigen::Index n = f.grid->n_modes();
    if (m_max < 1 || m_max > n / 2 - 1)
        throw std::invalid_argument("sine_coeffs: m_max must lie in [1, N/2 - 1]");
    const Eigen::VectorXcd c = spectrum(f);
    Eigen::VectorXd b(m_max);
    for (Eigen::Index m = 1; m <= m_max; ++m)
        b[m - 1] = -2.0 * std::sqrt(pi) * fourier_coeff(c, m).imag();
    return b;
}

Eigen::VectorXd cosine_coeffs(const RealField& f, Eigen::Index m_max) {
    const Eigen::Index n = f.grid->n_modes();
    if (m_max < 0 || m_max > n / 2 - 1)
        throw std::invalid_argument("cosine_coeffs: m_max must lie in [0, N/2 - 1]");
    const Eigen::VectorXcd c = spectrum(f);
    Eigen::VectorXd b(m_max + 1);
    b[0] = std::sqrt(2.0 * pi) * c[0].real();
    for (Eigen::Index m = 1; m <= m_max; ++m)
        b[m] = 2.0 * std::sqrt(pi) * fourier_coeff(c, m).real();
    return b;
}

RealField field_from_sine_coeffs(GridPtr grid, const Eigen::VectorXd& b) {
    const Eigen::Index n = grid->n_modes();
    if (b.size() > n / 2 - 1)
        throw std::invalid_argument("field_from_sine_coeffs: too many coefficients for grid");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
    for (Eigen::Index m = 1; m <= b.size(); ++m) {
        const double phase = (m % 2 == 0) ? 1.0 : -1.0;
        const Complex cm = phase * Complex(0.0, -b[m - 1] / (2.0 * std::sqrt(pi)));
        c[m] = cm;
        c[n - m] = std::conj(cm);
    }
    return from_spectrum(grid, c);
}

RealField field_from_cosine_coeffs(GridPtr grid, const Eigen::VectorXd& b) {
    const Eigen::Index n = grid->n_modes();
    if (b.size() < 1 || b.size() > n / 2)
        throw std::invalid_argument("field_from_cosine_coeffs: bad coefficient count");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
    c[0] = b[0] / std::sqrt(2.0 * pi);
    for (Eigen::Index m = 1; m < b.size(); ++m) {
        const double phase = (m % 2 == 0) ? 1.0 : -1.0;
        const Complex cm = phase * Complex(b[m] / (2.0 * std::sqrt(pi)), 0.0);
        c[m] = cm;
        c[n - m] = std::conj(cm);
    }
    return from_spectrum(grid, c);
}

RealField dealiased_product(const RealField& f, const RealField& g) {
    require_same_grid(f, g);
    const Eigen::ArrayXd f_fine = fft_inverse(pad_spectrum(spectrum(f)));
    const Eigen::ArrayXd g_fine = fft_inverse(pad_spectrum(spectrum(g)));
    Eigen::VectorXcd c = fft_forward(f_fine * g_fine);
    return from_spectrum(f.grid, truncate_spectrum(c));
}

RealField dealiased_cube(const RealField& f) {
    const Eigen::ArrayXd f_fine = fft_inverse(pad_spectrum(spectrum(f)));
    Eigen::VectorXcd c = fft_forward(f_fine * f_fine * f_fine);
    return from_spectrum(f.grid, truncate_spectrum(c));
}

RealField upsample2x(const RealField& f) {
    GridPtr fine = PeriodicGrid::make(2 * f.grid->n_modes());
    return RealField{fine, fft_inverse(pad_spectrum(spectrum(f)))};
}

}  // namespace dfnls
