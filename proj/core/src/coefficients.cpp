#include "tauprec/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tauprec {

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    // Lanczos, g = 7, 9 terms (Godfrey coefficients).
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    double s = c[0];
    for (int k = 1; k < 9; ++k) s += c[k] / (z + k);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(s);
}

GrunwaldSeq grunwald_coeffs(double alpha, std::size_t count) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::domain_error("grunwald_coeffs: alpha must be in (0, 2]");
    if (count < 1) throw std::domain_error("grunwald_coeffs: count must be >= 1");
    GrunwaldSeq seq{alpha, std::vector<double>(count)};
    seq.values[0] = 1.0;
    for (std::size_t k = 1; k < count; ++k)
        seq.values[k] = seq.values[k - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(k));
    return seq;
}

FracCenteredSeq frac_centered_coeffs(double alpha, std::size_t count) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::domain_error("frac_centered_coeffs: alpha must be in (1, 2]");
    if (count < 1) throw std::domain_error("frac_centered_coeffs: count must be >= 1");
    FracCenteredSeq seq{alpha, std::vector<double>(count)};
    seq.values[0] = std::exp(log_gamma(alpha + 1.0) - 2.0 * log_gamma(alpha / 2.0 + 1.0));
    for (std::size_t j = 0; j + 1 < count; ++j) {
        const double dj = static_cast<double>(j);
        seq.values[j + 1] = seq.values[j] * (dj - alpha / 2.0) / (dj + 1.0 + alpha / 2.0);
    }
    return seq;
}

}  // namespace tauprec
