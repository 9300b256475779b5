#include <stdexcept>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tauprec/coefficients.hpp"

using tauprec::frac_centered_coeffs;
using tauprec::grunwald_coeffs;
using tauprec::log_gamma;

namespace {

// Direct Gamma-formula oracles. Both need the reflection formula for the
// negative arguments that appear once the index passes alpha:
// Gamma(z) Gamma(1-z) = pi / sin(pi z).
double signed_log_gamma(double x, double& sign) {
    sign = 1.0;
    if (x > 0.0) return log_gamma(x);
    const double s = std::sin(std::numbers::pi * x);
    if (s < 0.0) sign = -1.0;
    return std::log(std::numbers::pi / std::abs(s)) - log_gamma(1.0 - x);
}

double grunwald_direct(double alpha, int k) {
    // (-1)^k binom(alpha, k) = (-1)^k Gamma(a+1) / (Gamma(k+1) Gamma(a-k+1))
    if (k == 0) return 1.0;
    double s1, s2;
    const double lg = log_gamma(alpha + 1.0) - log_gamma(static_cast<double>(k) + 1.0);
    const double lg3 = signed_log_gamma(alpha - k + 1.0, s1);
    s2 = (k % 2 == 0) ? 1.0 : -1.0;
    return s2 * s1 * std::exp(lg - lg3);
}

double rho_direct(double alpha, int j) {
    // (-1)^j Gamma(a+1) / (Gamma(a/2 - j + 1) Gamma(a/2 + j + 1))
    double s1;
    const double num = log_gamma(alpha + 1.0);
    const double la = signed_log_gamma(alpha / 2.0 - j + 1.0, s1);
    const double lb = log_gamma(alpha / 2.0 + j + 1.0);
    const double s2 = (j % 2 == 0) ? 1.0 : -1.0;
    return s2 * s1 * std::exp(num - la - lb);
}

}  // namespace

TEST_CASE("log_gamma closed forms and accuracy") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
    for (double x = 0.5; x <= 50.0; x += 0.37) {
        const double want = std::lgamma(x);
        CHECK(std::abs(log_gamma(x) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("grunwald coefficient values") {
    const auto g2 = grunwald_coeffs(2.0, 4).values;
    CHECK(g2[0] == doctest::Approx(1.0));
    CHECK(g2[1] == doctest::Approx(-2.0));
    CHECK(g2[2] == doctest::Approx(1.0));
    CHECK(g2[3] == doctest::Approx(0.0));

    const auto g15 = grunwald_coeffs(1.5, 3).values;
    CHECK(g15[0] == doctest::Approx(1.0));
    CHECK(g15[1] == doctest::Approx(-1.5));
    CHECK(g15[2] == doctest::Approx(0.375));

    for (double alpha : {1.1, 1.5, 1.9}) {
        const auto g = grunwald_coeffs(alpha, 64).values;
        CHECK(g[1] == doctest::Approx(-alpha).epsilon(1e-15));
        // sign pattern for alpha in (1,2)
        CHECK(g[1] < 0.0);
        for (int k = 2; k < 64; ++k) CHECK(g[static_cast<std::size_t>(k)] > 0.0);
        // direct Gamma-formula match for k <= 50
        for (int k = 0; k <= 50; ++k) {
            const double want = grunwald_direct(alpha, k);
            CHECK(std::abs(g[static_cast<std::size_t>(k)] - want) <=
                  1e-12 * std::max(std::abs(want), 1e-30));
        }
    }
    CHECK_THROWS_AS(grunwald_coeffs(0.0, 3), std::domain_error);
    CHECK_THROWS_AS(grunwald_coeffs(2.5, 3), std::domain_error);
}

TEST_CASE("grunwald partial sums shrink monotonically toward 0") {
    // S_0 = 1, S_1 = 1 - alpha < 0, then the positive tail pulls S_K back up
    // to 0 from below: |S_K| is nonincreasing and tends to 0.
    for (double alpha : {1.1, 1.5, 1.9}) {
        const std::size_t K = 10000;
        const auto g = grunwald_coeffs(alpha, K + 1).values;
        double sum = g[0];
        double prev_abs = std::abs(sum);
        for (std::size_t k = 1; k <= K; ++k) {
            sum += g[k];
            CHECK(std::abs(sum) <= prev_abs + 1e-15);
            prev_abs = std::abs(sum);
        }
        CHECK(std::abs(sum) <= 1e-2);
    }
}

TEST_CASE("fractional centered coefficient values") {
    const auto r2 = frac_centered_coeffs(2.0, 4).values;
    CHECK(r2[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r2[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r2[2] == doctest::Approx(0.0));
    CHECK(r2[3] == doctest::Approx(0.0));

    const auto r15 = frac_centered_coeffs(1.5, 2).values;
    CHECK(r15[1] / r15[0] == doctest::Approx(-3.0 / 7.0).epsilon(1e-14));

    for (double alpha : {1.1, 1.5, 1.9}) {
        const auto r = frac_centered_coeffs(alpha, 64).values;
        CHECK(r[0] > 0.0);
        for (std::size_t j = 1; j < 64; ++j) CHECK(r[j] <= 0.0);
        for (int j = 0; j <= 50; ++j) {
            const double want = rho_direct(alpha, j);
            CHECK(std::abs(r[static_cast<std::size_t>(j)] - want) <=
                  1e-12 * std::max(std::abs(want), 1e-30));
        }
    }
    CHECK_THROWS_AS(frac_centered_coeffs(1.0, 3), std::domain_error);
    CHECK_THROWS_AS(frac_centered_coeffs(2.1, 3), std::domain_error);
}

TEST_CASE("rho partial sums are nonnegative and decreasing") {
    for (double alpha : {1.1, 1.5, 1.9}) {
        const std::size_t K = 10000;
        const auto r = frac_centered_coeffs(alpha, K + 1).values;
        double sum = r[0];
        for (std::size_t j = 1; j <= K; ++j) {
            const double prev = sum;
            sum += 2.0 * r[j];
            CHECK(sum <= prev);
            CHECK(sum >= 0.0);
        }
        CHECK(sum <= 5e-2);  // tends to zero
    }
}
