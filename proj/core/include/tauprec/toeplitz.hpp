#pragma once

#include <vector>

#include "tauprec/fft.hpp"
#include "tauprec/symbols.hpp"

namespace tauprec {

using Vector = std::vector<double>;

/// Reverse a vector end-to-end (the multilevel anti-identity Y_n equals the
/// full-length reversal).
Vector flip(const Vector& x);
void flip_inplace(Vector& x);

/// Multilevel real Toeplitz matrix in operator form. The coefficient tensor is
/// embedded in a circulant whose per-level size is the next power of two >= 2 n_i
/// and the embedding spectrum is precomputed, so matvec costs O(N log N).
/// Operators are immutable after construction; matvec is reentrant.
class ToeplitzOperator {
public:
    ToeplitzOperator() = default;  // empty; fill via build()

    static ToeplitzOperator build(const CoeffTensor& coeffs);

    const Dims& dims() const { return n_; }
    std::size_t size() const { return size_; }
    bool symmetric() const { return symmetric_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    /// Coefficient at multilevel index difference j.
    double coeff_at(const std::vector<int>& j) const;
    /// 1-level first row t_0..t_{n-1}; requires a symmetric 1-level operator.
    std::vector<double> symmetric_first_row() const;

    Vector matvec(const Vector& x) const;
    void matvec(const Vector& x, Vector& y) const;

    /// T(f(theta))^T = T(f(-theta)): reflect the coefficient tensor per level.
    ToeplitzOperator transpose() const;

private:
    void finalize();

    Dims n_;
    std::size_t size_ = 0;
    std::vector<double> coeffs_;             // size prod(2 n_i - 1), level 1 fastest
    std::vector<std::size_t> emb_;           // embedding dims
    std::vector<cplx> spectrum_;             // FFT of the embedded tensor
    std::vector<FftPlan> plans_;
    bool symmetric_ = false;
};

/// I x ... x T x ... x I with the 1-level operator at `level` (0-based) of a
/// k-level operator with the given dims.
ToeplitzOperator kron_identity_embed(const ToeplitzOperator& op1d, int level, const Dims& dims);

}  // namespace tauprec
