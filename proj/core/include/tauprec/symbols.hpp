#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "tauprec/coefficients.hpp"

namespace tauprec {

using cplx = std::complex<double>;
using Dims = std::vector<int>;  // n_1 .. n_k, level 1 first

std::size_t total_size(const Dims& n);

/// Fractional finite-difference scheme selector. grunwald1 is the shifted
/// Grunwald operator (first order in space), wsgd2 the weighted-shifted
/// variant with weights (alpha/2, (2-alpha)/2) on shifts (1, 0).
enum class Scheme { grunwald1, wsgd2 };

/// k-dimensional tensor of Fourier coefficients, index j_i in
/// [-(n_i - 1), n_i - 1] per level, stored with level 1 fastest.
struct CoeffTensor {
    Dims dims;
    std::vector<cplx> entries;

    explicit CoeffTensor(Dims n);
    CoeffTensor() = default;

    int levels() const { return static_cast<int>(dims.size()); }
    std::size_t span(int level) const { return 2 * static_cast<std::size_t>(dims[level]) - 1; }
    cplx& at(const std::vector<int>& j);
    const cplx& at(const std::vector<int>& j) const;
    /// Largest imaginary part relative to the largest entry magnitude.
    double imag_residual() const;
    std::vector<double> real_entries() const;  // throws if imag_residual() > 1e-10
};

/// Generating-function evaluator over [-pi, pi]^k with the metadata needed by
/// coefficient extraction. When `separable` is nonempty the symbol equals
/// sum_t coef_t * prod_i f_{t,i}(theta_i) (an absent factor means the constant
/// 1) and numeric coefficients are assembled from 1D quadratures per term.
struct Symbol {
    struct Term {
        double coef = 1.0;
        std::vector<std::function<double(double)>> factors;  // size k, may hold nullptr
    };

    int levels = 1;
    std::function<cplx(const std::vector<double>&)> eval;
    bool real_coeffs = true;
    bool even = false;
    std::vector<Term> separable;
};

/// v_alpha(theta) = -e^{-i theta} (1 - e^{i theta})^alpha, principal branch,
/// with v_alpha(0) = 0.
cplx eval_v_alpha(double alpha, double theta);

/// Second-order (weighted-shifted) counterpart:
/// -[(alpha/2) e^{-i theta} + (2-alpha)/2] (1 - e^{i theta})^alpha.
cplx eval_v_alpha2(double alpha, double theta);

/// g(theta) = nu + d+ v_alpha(theta) + d- conj(v_alpha(theta)).
cplx eval_g_1d(double nu, double d_plus, double d_minus, double alpha, double theta);

/// |g(theta)| computed from the expanded square
/// nu^2 + nu (d+ + d-)(v + conj v) + (d+ - d-)^2 (2 - 2 cos)^alpha + d+ d- (v + conj v)^2.
double eval_abs_g_1d(double nu, double d_plus, double d_minus, double alpha, double theta);

struct FdeAxis {
    double alpha = 1.5;
    double d_plus = 0.0;
    double d_minus = 0.0;
    double h = 1.0;
};

/// 1 + w_1(theta_1) + w_2(theta_2) with w_i = (tau/h_i^{a_i})(d+ v + d- conj v).
cplx eval_g_2d(const FdeAxis& ax1, const FdeAxis& ax2, double tau_time,
               double theta1, double theta2);

/// p_a(t) = |t|^a for |t| < pi/2, 1 otherwise.
double eval_p_piecewise(double a, double t);

/// p_alpha(theta) = p_a1(theta1) + p_a2(theta2) - p_1(theta1) p_1(theta2).
double eval_example4_symbol(double alpha1, double alpha2, double theta1, double theta2);

// ---- coefficient extraction ----

enum class ClosedSymbol { v_alpha, g_1d, g_2d, r_alpha, laplacian };

struct ClosedParams {
    double alpha = 1.5;
    double nu = 0.0;
    double d_plus = 0.0;
    double d_minus = 0.0;
    FdeAxis ax1, ax2;        // g_2d only
    double tau_time = 0.0;   // g_2d only
    Scheme scheme = Scheme::grunwald1;
};

/// Exact coefficients assembled from the Grunwald / fractional-centered
/// sequences (no quadrature).
CoeffTensor fourier_coeffs_closed(ClosedSymbol kind, const ClosedParams& p, const Dims& n);

/// Quadrature coefficients: FFT of uniform symbol samples, grid size
/// next_pow2(max(oversample * 2 * n_i, 2^14)) per axis in 1D (2D separable
/// sums reduce to 1D quadratures per term; full 2D sampling uses a 2^9 floor).
CoeffTensor fourier_coeffs_numeric(const Symbol& s, const Dims& n, int oversample = 16);

/// 1D helper used by the separable path: coefficients c_{-(n-1)..n-1} of f.
std::vector<cplx> fourier_coeffs_numeric_1d(const std::function<cplx(double)>& f,
                                            int n, int oversample);

// Ready-made symbols for the benchmark problems.
Symbol symbol_example4(double alpha1, double alpha2);
Symbol symbol_q_alpha(double alpha1, double alpha2, double l1 = 1.0, double l2 = 1.0);
Symbol symbol_abs_theta_pow(double alpha);  // |theta|^alpha, 1 level

/// Coefficients of (2 - 2 cos theta)(1 + i theta); real because theta has
/// purely imaginary Fourier coefficients.
CoeffTensor example1_coeffs(int n);

}  // namespace tauprec
