#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tauprec {

using cplx = std::complex<double>;

/// Precomputed plan for a complex DFT of a fixed length.
///
/// Power-of-two lengths run through an iterative radix-2 transform with a
/// precomputed twiddle table; every other length falls back to Bluestein's
/// chirp-z algorithm on a padded power-of-two convolution. Plans are immutable
/// after construction and applying them is reentrant (scratch is per call), so
/// a plan can be shared across threads.
class FftPlan {
public:
    explicit FftPlan(std::size_t n);

    std::size_t size() const { return n_; }

    /// In-place forward DFT: X_k = sum_j x_j e^{-2 pi i jk/n}.
    void forward(cplx* a) const;
    /// In-place inverse DFT (includes the 1/n factor).
    void inverse(cplx* a) const;

    static bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
    static std::size_t next_pow2(std::size_t n);

private:
    void radix2(cplx* a, const std::vector<cplx>& tw, std::size_t n) const;
    void bluestein(cplx* a) const;

    std::size_t n_;
    std::vector<cplx> tw_;      // e^{-2 pi i k / n_}, k < n_/2 (pow2 path)
    // Bluestein state (empty when n_ is a power of two)
    std::size_t m_ = 0;
    std::vector<cplx> chirp_;   // w_j = e^{-i pi j^2 / n_}
    std::vector<cplx> bspec_;   // forward FFT of the conjugate-chirp kernel
    std::vector<cplx> twm_;     // twiddles for length m_
};

/// Separable in-place DFT over a k-dimensional array stored with the first
/// dimension fastest-varying. `plans[i]` must match `dims[i]`.
void fft_nd(std::vector<cplx>& a, const std::vector<std::size_t>& dims,
            const std::vector<FftPlan>& plans, bool inverse);

}  // namespace tauprec
