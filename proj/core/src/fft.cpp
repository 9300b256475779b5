#include "tauprec/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tauprec {

namespace {

constexpr double kPi = std::numbers::pi;

// Twiddle table e^{-2 pi i k/n} for k < n/2. Runs of incremental complex
// multiplications drift at ~k*eps, so the phase is re-anchored with polar()
// every 64 entries.
std::vector<cplx> make_twiddles(std::size_t n) {
    std::vector<cplx> tw(n / 2);
    if (n < 2) return tw;
    const cplx step = std::polar(1.0, -2.0 * kPi / static_cast<double>(n));
    for (std::size_t k = 0; k < n / 2; ++k) {
        if (k % 64 == 0)
            tw[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
        else
            tw[k] = tw[k - 1] * step;
    }
    return tw;
}

}  // namespace

std::size_t FftPlan::next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("FftPlan: zero length");
    if (is_pow2(n)) {
        tw_ = make_twiddles(n);
        return;
    }
    // Bluestein: X_k = w_k * (a (*) b)_k with a_j = x_j w_j, b_j = conj(w_{|j|}),
    // w_j = e^{-i pi j^2 / n}. j^2 is reduced mod 2n in exact integer arithmetic.
    m_ = next_pow2(2 * n - 1);
    twm_ = make_twiddles(m_);
    chirp_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t q = (j * j) % (2 * n);
        chirp_[j] = std::polar(1.0, -kPi * static_cast<double>(q) / static_cast<double>(n));
    }
    std::vector<cplx> b(m_, cplx(0.0, 0.0));
    b[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n; ++j) {
        b[j] = std::conj(chirp_[j]);
        b[m_ - j] = std::conj(chirp_[j]);
    }
    radix2(b.data(), twm_, m_);
    bspec_ = std::move(b);
}

void FftPlan::radix2(cplx* a, const std::vector<cplx>& tw, std::size_t n) const {
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            const cplx* w = tw.data();
            for (std::size_t j = 0; j < half; ++j, w += step) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + half] * (*w);
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
}

void FftPlan::bluestein(cplx* a) const {
    std::vector<cplx> buf(m_, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n_; ++j) buf[j] = a[j] * chirp_[j];
    radix2(buf.data(), twm_, m_);
    for (std::size_t j = 0; j < m_; ++j) buf[j] *= bspec_[j];
    // inverse FFT of length m_ via conjugation
    for (auto& z : buf) z = std::conj(z);
    radix2(buf.data(), twm_, m_);
    const double inv_m = 1.0 / static_cast<double>(m_);
    for (std::size_t k = 0; k < n_; ++k)
        a[k] = std::conj(buf[k]) * inv_m * chirp_[k];
}

void FftPlan::forward(cplx* a) const {
    if (m_ == 0)
        radix2(a, tw_, n_);
    else
        bluestein(a);
}

void FftPlan::inverse(cplx* a) const {
    for (std::size_t j = 0; j < n_; ++j) a[j] = std::conj(a[j]);
    forward(a);
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (std::size_t j = 0; j < n_; ++j) a[j] = std::conj(a[j]) * inv_n;
}

void fft_nd(std::vector<cplx>& a, const std::vector<std::size_t>& dims,
            const std::vector<FftPlan>& plans, bool inverse) {
    if (dims.size() != plans.size())
        throw std::invalid_argument("fft_nd: dims/plans mismatch");
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (a.size() != total) throw std::invalid_argument("fft_nd: array size mismatch");

    std::size_t inner = 1;  // product of dims before the current axis
    for (std::size_t ax = 0; ax < dims.size(); ++ax) {
        const std::size_t n = dims[ax];
        const FftPlan& plan = plans[ax];
        const std::size_t outer = total / (inner * n);
        if (inner == 1) {
            for (std::size_t o = 0; o < outer; ++o) {
                cplx* slice = a.data() + o * n;
                if (inverse) plan.inverse(slice); else plan.forward(slice);
            }
        } else {
            std::vector<cplx> line(n);
            for (std::size_t o = 0; o < outer; ++o) {
                for (std::size_t i = 0; i < inner; ++i) {
                    cplx* base = a.data() + o * inner * n + i;
                    for (std::size_t j = 0; j < n; ++j) line[j] = base[j * inner];
                    if (inverse) plan.inverse(line.data()); else plan.forward(line.data());
                    for (std::size_t j = 0; j < n; ++j) base[j * inner] = line[j];
                }
            }
        }
        inner *= n;
    }
}

}  // namespace tauprec
