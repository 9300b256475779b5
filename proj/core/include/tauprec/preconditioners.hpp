#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tauprec/tau.hpp"
#include "tauprec/toeplitz.hpp"

namespace tauprec {

/// 1D fractional diffusion discretization constants. nu = h^alpha / tau_time.
struct FdeParams1D {
    int n = 0;
    double alpha = 1.5;
    double d_plus = 0.0;
    double d_minus = 0.0;
    double nu = 1.0;
    double h = 1.0;
    double tau_time = 1.0;
    Scheme scheme = Scheme::grunwald1;
};

struct FdeParams2D {
    int n1 = 0, n2 = 0;
    double alpha1 = 1.5, alpha2 = 1.5;
    double d1_plus = 0.0, d1_minus = 0.0;
    double d2_plus = 0.0, d2_minus = 0.0;
    double h1 = 1.0, h2 = 1.0;
    double tau_time = 1.0;
    Scheme scheme = Scheme::grunwald1;
    /// Scaling of the spatial operator inside one solve; 0.5 for the
    /// Crank-Nicolson half step, 1 for backward Euler.
    double step_weight = 1.0;
};

/// Symmetric positive definite preconditioner behind a single apply-inverse
/// contract. Tau-backed preconditioners store sine-basis eigenvalues;
/// circulant ones store the (nonnegative) Fourier-basis spectrum.
class Preconditioner {
public:
    enum class Kind { identity, tau, circulant };

    static Preconditioner identity(std::size_t size);
    static Preconditioner from_tau(TauOperator op);
    static Preconditioner from_circulant(Dims dims, std::vector<double> fourier_eigs);

    Kind kind() const { return kind_; }
    std::size_t size() const { return size_; }
    const std::vector<double>& eigenvalues() const { return eigs_; }
    double min_eigenvalue() const;

    void apply_inverse(const Vector& r, Vector& z) const;
    Vector apply_inverse(const Vector& r) const;
    /// M x (for tests and residual checks).
    Vector apply(const Vector& x) const;

private:
    Preconditioner() = default;

    Kind kind_ = Kind::identity;
    std::size_t size_ = 0;
    Dims dims_;
    std::vector<double> eigs_;
    std::shared_ptr<const SineTransformPlan> sine_;     // tau kind
    std::shared_ptr<const std::vector<FftPlan>> fft_;   // circulant kind
    std::vector<std::size_t> fdims_;
};

/// Eigenvalues mu_j of tau(T(v_alpha) + T(v_alpha)^T) together with
/// s_j = 2 - 2 cos(j pi/(n+1)); shared by the P_n builders.
struct SymbolTauParts {
    std::vector<double> s;       // Laplacian tau eigenvalues
    std::vector<double> mu;      // symmetric-part projection eigenvalues
    std::vector<double> theta;   // sine grid j pi/(n+1)
};
SymbolTauParts symbol_tau_parts(double alpha, int n, Scheme scheme);

/// P_n = [nu^2 I + nu(d+ + d-) tau(T(v)+T(v)^T) + (d+ - d-)^2 (T(2-2cos))^alpha
///        + d+ d- tau(T(v)+T(v)^T)^2]^{1/2}, built in the shared sine
/// eigenbasis (all four terms commute, so the square root is exact).
Preconditioner build_P_1d(const FdeParams1D& p);

/// P_n = I + I x R_{n1} + R_{n2} x I with R_i the tau square-root factor of
/// |w_i|. For the wsgd2 scheme the |v|^2 term carries the trigonometric
/// modulus factor of the weighted shift.
Preconditioner build_P_2d(const FdeParams2D& p);

/// Eigenvalues of the 1D factor R_n for one axis (used by build_P_2d and the
/// spectrum tool).
std::vector<double> symbol_tau_axis_eigs(double alpha, int n, double d_plus, double d_minus,
                                         double scale, Scheme scheme);

/// tau(R_n), R_n = sum_i I x l_i T(r_{alpha_i}) x I. Throws if any eigenvalue
/// is nonpositive.
Preconditioner build_tauR(const Dims& dims, const std::vector<double>& alphas,
                          const std::vector<double>& weights);

/// Per-level Hankel-correction projection of a symmetric multilevel Toeplitz
/// operator (coefficients even per level).
Preconditioner build_natural_tau(const ToeplitzOperator& T);

/// |C_n| = sqrt(C_n^T C_n) of the T. Chan optimal circulant, per level.
/// Zero Fourier eigenvalues are floored at 1e-14 * max|lambda| (reported via
/// the return's min_eigenvalue).
Preconditioner build_abs_circulant(const ToeplitzOperator& T);

/// Strang circulant (first half of the symbol coefficients, per level);
/// eigenvalues floored like build_abs_circulant when nonpositive.
Preconditioner build_strang_circulant(const ToeplitzOperator& T);

}  // namespace tauprec
