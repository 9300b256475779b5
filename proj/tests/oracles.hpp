// Test-only dense oracles, kept independent of the fast paths they check.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "tauprec/symbols.hpp"
#include "tauprec/toeplitz.hpp"

namespace oracle {

using tauprec::CoeffTensor;
using tauprec::Dims;
using tauprec::Vector;

// Row-major dense matrix as a plain vector.
struct Mat {
    std::size_t n = 0;
    std::vector<double> a;
    Mat() = default;
    explicit Mat(std::size_t size) : n(size), a(size * size, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline Mat identity(std::size_t n) {
    Mat I(n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

// Dense multilevel Toeplitz matrix straight from the coefficient tensor
// (entry = coefficient at the per-level index difference).
inline Mat dense_toeplitz(const CoeffTensor& c) {
    const Dims& dims = c.dims;
    std::size_t N = 1;
    for (int d : dims) N *= static_cast<std::size_t>(d);
    Mat D(N);
    std::vector<int> diff(dims.size());
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t ri = i, rj = j;
            bool inside = true;
            for (std::size_t l = 0; l < dims.size(); ++l) {
                const std::size_t nl = static_cast<std::size_t>(dims[l]);
                diff[l] = static_cast<int>(ri % nl) - static_cast<int>(rj % nl);
                ri /= nl;
                rj /= nl;
            }
            (void)inside;
            D(i, j) = c.at(diff).real();
        }
    return D;
}

// Direct O(N^2) multilevel Toeplitz matvec (independent of any FFT path).
inline Vector dense_matvec(const CoeffTensor& c, const Vector& x) {
    const Mat D = dense_toeplitz(c);
    Vector y(D.n, 0.0);
    for (std::size_t i = 0; i < D.n; ++i)
        for (std::size_t j = 0; j < D.n; ++j) y[i] += D(i, j) * x[j];
    return y;
}

inline Vector matvec(const Mat& A, const Vector& x) {
    Vector y(A.n, 0.0);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) y[i] += A(i, j) * x[j];
    return y;
}

inline Mat multiply(const Mat& A, const Mat& B) {
    Mat C(A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t k = 0; k < A.n; ++k)
            for (std::size_t j = 0; j < A.n; ++j) C(i, j) += A(i, k) * B(k, j);
    return C;
}

inline Mat transpose(const Mat& A) {
    Mat T(A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) T(j, i) = A(i, j);
    return T;
}

// kron(A, B)[i2*nb+i1, j2*nb+j1] = A(i2,j2) B(i1,j1), matching the level-1
// fastest flattening with A acting on the slow level.
inline Mat kron(const Mat& A, const Mat& B) {
    Mat K(A.n * B.n);
    for (std::size_t i2 = 0; i2 < A.n; ++i2)
        for (std::size_t j2 = 0; j2 < A.n; ++j2)
            for (std::size_t i1 = 0; i1 < B.n; ++i1)
                for (std::size_t j1 = 0; j1 < B.n; ++j1)
                    K(i2 * B.n + i1, j2 * B.n + j1) = A(i2, j2) * B(i1, j1);
    return K;
}

// Orthonormal DST-I matrix.
inline Mat sine_matrix(std::size_t n) {
    Mat Q(n);
    const double pi = 3.14159265358979323846;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            Q(i - 1, j - 1) = std::sqrt(2.0 / (n + 1)) *
                              std::sin(pi * static_cast<double>(i * j) / (n + 1));
    return Q;
}

// Dense tau projection T - H(T) from the antidiagonal rule: antidiagonals of
// H are t_2,...,t_{n-1},0,0,0,t_{n-1},...,t_2.
inline Mat dense_tau_projection(const std::vector<double>& t) {
    const std::size_t n = t.size();
    Mat M(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double v = t[static_cast<std::size_t>(std::abs(static_cast<int>(i) - static_cast<int>(j)))];
            const std::size_t s = i + j + 2;  // 1-based antidiagonal index i+j
            if (s <= n - 1)
                v -= t[s];
            else if (s >= n + 3)
                v -= t[2 * n + 2 - s];
            M(i, j) = v;
        }
    return M;
}

// Gaussian elimination with partial pivoting.
inline Vector lu_solve(Mat A, Vector b) {
    const std::size_t n = A.n;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A(r, col)) > std::abs(A(piv, col))) piv = r;
        if (A(piv, col) == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(A(piv, c), A(col, c));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = A(r, col) / A(col, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) A(r, c) -= f * A(col, c);
            b[r] -= f * b[col];
        }
    }
    Vector x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
        x[i] = s / A(i, i);
    }
    return x;
}

inline double max_abs(const Mat& A) {
    double m = 0.0;
    for (double v : A.a) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const Mat& A, const Mat& B) {
    double m = 0.0;
    for (std::size_t i = 0; i < A.a.size(); ++i) m = std::max(m, std::abs(A.a[i] - B.a[i]));
    return m;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double norm2(const Vector& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

inline CoeffTensor random_coeffs(const Dims& dims, std::mt19937_64& rng, bool symmetric = false) {
    CoeffTensor c(dims);
    std::normal_distribution<double> dist;
    for (auto& z : c.entries) z = dist(rng);
    if (symmetric) {
        const std::size_t sz = c.entries.size();
        for (std::size_t i = 0; i < sz / 2; ++i) {
            const tauprec::cplx v = 0.5 * (c.entries[i] + c.entries[sz - 1 - i]);
            c.entries[i] = c.entries[sz - 1 - i] = v;
        }
    }
    return c;
}

inline Vector random_vector(std::size_t n, std::mt19937_64& rng) {
    Vector x(n);
    std::normal_distribution<double> dist;
    for (double& v : x) v = dist(rng);
    return x;
}

}  // namespace oracle
