#pragma once

#include <memory>
#include <vector>

#include "tauprec/fft.hpp"
#include "tauprec/toeplitz.hpp"

namespace tauprec {

/// Multilevel orthonormal DST-I, Q_n = Q_{n_1} x ... x Q_{n_k} with
/// (Q_n)_{ij} = sqrt(2/(n+1)) sin(pi i j/(n+1)). Q is symmetric and orthogonal,
/// so the plan is its own inverse. Each level runs through a complex FFT of
/// length 2(n_i + 1) on the odd extension; the benchmark sizes 2^m - 1 make
/// that a power of two, anything else takes the Bluestein path.
class SineTransformPlan {
public:
    explicit SineTransformPlan(Dims n);

    const Dims& dims() const { return n_; }
    std::size_t size() const { return size_; }

    void apply(Vector& x) const;
    Vector apply_copy(const Vector& x) const;

private:
    void apply_level(double* data, std::size_t level, std::size_t inner, std::size_t outer) const;

    Dims n_;
    std::size_t size_ = 0;
    std::vector<FftPlan> plans_;  // per level, length 2(n_i + 1)
};

/// Multilevel tau matrix stored as its eigenvalue tensor in the sine basis
/// (level 1 fastest). Applying or inverting is DST -> diagonal -> DST.
struct TauOperator {
    Dims dims;
    std::vector<double> eigs;

    std::size_t size() const { return eigs.size(); }
};

/// Q_n x.
Vector dst1_apply(const SineTransformPlan& plan, const Vector& x);

/// Eigenvalues of tau(T) = T - H(T) for a symmetric 1-level Toeplitz first row
/// t_0..t_{n-1}; the identity eigs = (Q . firstcol(tau(T))) / (Q e_1) is exact
/// for any matrix diagonalized by Q.
std::vector<double> tau_project_eigs(const std::vector<double>& first_row);

/// tau projection of a symmetric 1-level Toeplitz operator.
TauOperator tau_project(const ToeplitzOperator& T);

/// Entrywise eigenvalue power. Exponent 0.5 is the principal square root.
/// Negative eigenvalues within -1e-12 * max|eig| are clamped to zero; anything
/// more negative with a non-integer exponent throws.
TauOperator tau_pow(const TauOperator& op, double exponent);

/// Eigenvalue-wise linear combination sum_i coef_i op_i.
TauOperator tau_combine(const std::vector<std::pair<double, const TauOperator*>>& terms);

/// I x ... x D x ... x I in eigenvalue space: broadcast the 1D eigenvalues
/// along the other levels.
TauOperator tau_kron_embed(const TauOperator& op1d, int level, const Dims& dims);

Vector tau_apply(const TauOperator& op, const SineTransformPlan& plan, const Vector& x);
Vector tau_solve(const TauOperator& op, const SineTransformPlan& plan, const Vector& r);

}  // namespace tauprec
