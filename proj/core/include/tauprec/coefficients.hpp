#pragma once

#include <vector>

namespace tauprec {

/// ln Gamma(x) for x > 0, Lanczos approximation evaluated in log space.
/// Relative error below 1e-13 on [0.5, 50]. Throws std::domain_error for
/// non-positive arguments.
double log_gamma(double x);

/// Grunwald-Letnikov binomial coefficients w_k = (-1)^k C(alpha, k).
struct GrunwaldSeq {
    double alpha;
    std::vector<double> values;  // w_0 .. w_{count-1}
};

/// Fractional centered-difference coefficients, the Fourier coefficients of
/// |2 sin(theta/2)|^alpha: rho_j = (-1)^j Gamma(a+1) / (Gamma(a/2-j+1) Gamma(a/2+j+1)).
struct FracCenteredSeq {
    double alpha;
    std::vector<double> values;  // rho_0 .. rho_{count-1}
};

/// w_0 = 1, w_k = w_{k-1} (1 - (alpha+1)/k). Requires alpha in (0, 2], count >= 1.
GrunwaldSeq grunwald_coeffs(double alpha, std::size_t count);

/// rho_0 = Gamma(a+1)/Gamma(a/2+1)^2, rho_{j+1} = rho_j (j - a/2)/(j + 1 + a/2).
/// Requires alpha in (1, 2], count >= 1. The recurrence avoids the Gamma-ratio
/// overflow that the closed form hits for j in the thousands.
FracCenteredSeq frac_centered_coeffs(double alpha, std::size_t count);

}  // namespace tauprec
