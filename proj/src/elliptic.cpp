#include "dfnls/elliptic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dfnls {

namespace {

void validate_modulus(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("elliptic: modulus must lie in [0, 1)");
}

// Descending Landen ladder k -> (1 - k') / (1 + k') until the modulus is
// negligible; quadratic convergence keeps the ladder short even for k
// close to 1.
std::vector<double> landen_ladder(double k) {
    std::vector<double> ladder;
    while (k > 1e-14 && ladder.size() < 64) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        k = (1.0 - kp) / (1.0 + kp);
        ladder.push_back(k);
    }
    return ladder;
}

}  // namespace

double complete_k(double k) {
    validate_modulus(k);
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

double jacobi_sn(double u, double k) {
    validate_modulus(k);
    const std::vector<double> ladder = landen_ladder(k);
    double u_small = u;
    for (double ki : ladder) u_small /= 1.0 + ki;
    double w = std::sin(u_small);
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it)
        w = (1.0 + *it) * w / (1.0 + *it * w * w);
    return w;
}

double omega_of_k(double k) {
    validate_modulus(k);
    const double big_k = complete_k(k);
    return 4.0 * (1.0 + k * k) * big_k * big_k / (pi * pi);
}

double modulus_for_omega(double omega) {
    if (!(omega > 1.0))
        throw std::domain_error("modulus_for_omega: omega must exceed 1");
    double lo = 0.0;
    double hi = 1.0 - 1e-12;
    if (omega >= omega_of_k(hi))
        throw std::domain_error("modulus_for_omega: omega beyond representable moduli");
    for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
        const double mid = 0.5 * (lo + hi);
        (omega_of_k(mid) < omega ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

EllipticParams elliptic_params(double omega) {
    EllipticParams p;
    p.k = modulus_for_omega(omega);
    p.big_k = complete_k(p.k);
    p.eta = 2.0 * std::sqrt(2.0) * p.k * p.big_k / pi;
    p.omega = omega;
    return p;
}

WaveProfile exact_profile(double omega, GridPtr grid) {
    const EllipticParams p = elliptic_params(omega);
    RealField field = sample(grid, [&p](double x) {
        return p.eta * jacobi_sn(2.0 * p.big_k * x / pi, p.k);
    });
    WaveProfile wave{std::move(field), 1.0, omega, 0.0, 0};
    wave.residual_norm = max_norm(residual(wave.field, omega, 1.0));
    return wave;
}

}  // namespace dfnls
