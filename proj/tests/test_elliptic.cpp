#include <doctest.h>

#include "dfnls/elliptic.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace dfnls;

TEST_SUITE_BEGIN("elliptic");

TEST_SUITE("elliptic") {

TEST_CASE("complete_k against frozen series-oracle values") {
    CHECK(complete_k(0.0) == doctest::Approx(pi / 2.0).epsilon(1e-15));
    // Values computed with the Maclaurin-series oracle in oracles.hpp.
    CHECK(complete_k(0.5) == doctest::Approx(1.6857503548125960).epsilon(1e-14));
    CHECK(complete_k(0.999) == doctest::Approx(4.4955963958421442).epsilon(1e-10));

    CHECK_THROWS_AS(complete_k(1.0), std::domain_error);
    CHECK_THROWS_AS(complete_k(-0.1), std::domain_error);
    CHECK_THROWS_AS(complete_k(1.5), std::domain_error);
}

TEST_CASE("complete_k matches the series oracle across moduli") {
    for (int i = 0; i <= 9; ++i) {
        const double k = 0.1 * i;
        const double agm = complete_k(k);
        const double series = oracles::series_complete_k(k);
        CHECK(std::abs(agm - series) <= 1e-12 * series);
    }
}

TEST_CASE("jacobi_sn special values and identities") {
    // Degenerate modulus: sn(u, 0) = sin(u).
    for (double u : {-2.0, -0.3, 0.0, 0.5, 1.7, 3.9})
        CHECK(jacobi_sn(u, 0.0) == doctest::Approx(std::sin(u)).epsilon(1e-14));

    for (double k : {0.3, 0.7, 0.95, 0.999}) {
        const double big_k = complete_k(k);
        CHECK(jacobi_sn(0.0, k) == 0.0);
        // Quarter period: sn(K, k) = 1.
        CHECK(jacobi_sn(big_k, k) == doctest::Approx(1.0).epsilon(1e-12));
        // Half argument: sn(K/2, k) = 1 / sqrt(1 + k').
        const double kp = std::sqrt(1.0 - k * k);
        CHECK(jacobi_sn(big_k / 2.0, k) ==
              doctest::Approx(1.0 / std::sqrt(1.0 + kp)).epsilon(1e-12));
        // Oddness and 4K periodicity.
        for (double u = -3.0; u <= 3.0; u += 0.37) {
            CHECK(jacobi_sn(-u, k) == doctest::Approx(-jacobi_sn(u, k)).epsilon(1e-12));
            CHECK(std::abs(jacobi_sn(u + 4.0 * big_k, k) - jacobi_sn(u, k)) < 1e-10);
            CHECK(std::abs(jacobi_sn(u, k)) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("jacobi_sn satisfies the defining differential identity") {
    // (sn')^2 = (1 - sn^2)(1 - k^2 sn^2), checked with a central difference.
    const double k = 0.8;
    const double h = 1e-5;
    for (double u = -2.0; u <= 2.0; u += 0.29) {
        const double sn = jacobi_sn(u, k);
        const double dsn = (jacobi_sn(u + h, k) - jacobi_sn(u - h, k)) / (2.0 * h);
        const double rhs = (1.0 - sn * sn) * (1.0 - k * k * sn * sn);
        CHECK(dsn * dsn == doctest::Approx(rhs).epsilon(1e-7));
    }
}

TEST_CASE("omega_of_k and its bisection inverse") {
    CHECK(omega_of_k(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // Frozen oracle value: 4 (1 + 1/4) K(1/2)^2 / pi^2 with the series K.
    CHECK(omega_of_k(0.5) == doctest::Approx(1.4396495255864230).epsilon(1e-14));

    // Strictly increasing on a sample grid.
    double prev = omega_of_k(0.0);
    for (double k = 0.05; k < 1.0 - 1e-6; k += 0.05) {
        const double cur = omega_of_k(k);
        CHECK(cur > prev);
        prev = cur;
    }

    // Round trip k -> omega -> k.
    for (double k : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99})
        CHECK(modulus_for_omega(omega_of_k(k)) == doctest::Approx(k).epsilon(1e-12));

    // Frozen oracle value for the paper-scale frequency.
    CHECK(modulus_for_omega(1.5) == doctest::Approx(0.52766130497175693).epsilon(1e-12));

    CHECK_THROWS_AS(modulus_for_omega(1.0), std::domain_error);
    CHECK_THROWS_AS(modulus_for_omega(0.5), std::domain_error);
    CHECK_THROWS_AS(modulus_for_omega(1e9), std::domain_error);
}

TEST_CASE("elliptic_params at omega = 1.5 (frozen oracle values)") {
    const EllipticParams p = elliptic_params(1.5);
    CHECK(p.k == doctest::Approx(0.52766130497175693).epsilon(1e-12));
    CHECK(p.big_k == doctest::Approx(1.7014830708961891).epsilon(1e-12));
    CHECK(p.eta == doctest::Approx(0.80831009060849878).epsilon(1e-12));
    CHECK(p.omega == 1.5);
}

TEST_CASE("exact_profile solves the stationary equation to machine accuracy") {
    auto g = PeriodicGrid::make(4096);
    const WaveProfile wave = exact_profile(1.5, g);
    CHECK(wave.s == 1.0);
    CHECK(wave.omega == 1.5);
    CHECK(wave.residual_norm <= 1e-8);

    // Odd, with the positive lobe peaking at x = pi/2 with value eta.
    CHECK(parity_defect(wave.field, Parity::Odd) < 1e-13);
    const EllipticParams p = elliptic_params(1.5);
    CHECK(wave.field.values[3 * 4096 / 4] == doctest::Approx(p.eta).epsilon(1e-13));

    // Leading Fourier-sine amplitude against the theta-series oracle value
    // 4 sqrt(2) sqrt(q) / (1 - q) for the nome q at omega = 1.5.
    const Eigen::VectorXd b = sine_coeffs(wave.field, 4);
    CHECK(b[0] / std::sqrt(pi) == doctest::Approx(0.82444408013348534).epsilon(1e-12));
    // Even sine harmonics vanish for the two-lobe profile.
    CHECK(std::abs(b[1]) < 1e-14);
    CHECK(std::abs(b[3]) < 1e-14);
}

TEST_CASE("exact_profile residual stays small across omega") {
    auto g = PeriodicGrid::make(2048);
    for (double omega : {1.1, 1.5, 2.0, 3.0, 5.0})
        CHECK(exact_profile(omega, g).residual_norm <= 1e-8);
}

}  // TEST_SUITE
