#include "tauprec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tauprec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kDenseGuard = 4096;

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction of a symmetric matrix to tridiagonal form (d, e) with
// optional accumulation of the orthogonal transform in z. Classical tred2.
void tridiagonalize(std::vector<double>& z, std::size_t n, std::vector<double>& d,
                    std::vector<double>& e, bool want_vectors) {
    auto Z = [&](std::size_t i, std::size_t j) -> double& { return z[i * n + j]; };
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(Z(i, k));
            if (scale == 0.0) {
                e[i] = Z(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    Z(i, k) /= scale;
                    h += Z(i, k) * Z(i, k);
                }
                double f = Z(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                Z(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    if (want_vectors) Z(j, i) = Z(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += Z(j, k) * Z(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += Z(k, j) * Z(i, k);
                    e[j] = g / h;
                    f += e[j] * Z(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = Z(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k)
                        Z(j, k) -= f * e[k] + g * Z(i, k);
                }
            }
        } else {
            e[i] = Z(i, l);
        }
        d[i] = h;
    }
    if (want_vectors) d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (want_vectors) {
            if (d[i] != 0.0) {
                const std::size_t li = i;  // columns 0..i-1
                for (std::size_t j = 0; j < li; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k < li; ++k) g += Z(i, k) * Z(k, j);
                    for (std::size_t k = 0; k < li; ++k) Z(k, j) -= g * Z(k, i);
                }
            }
            d[i] = Z(i, i);
            Z(i, i) = 1.0;
            for (std::size_t j = 0; j < i; ++j) Z(j, i) = Z(i, j) = 0.0;
        } else {
            d[i] = Z(i, i);
        }
    }
}

// Implicit-shift QL on a tridiagonal (d, e); rotations go into z when
// want_vectors is set. Classical tqli.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z,
                std::size_t n, bool want_vectors) {
    auto Z = [&](std::size_t i, std::size_t j) -> double& { return z[i * n + j]; };
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("sym_eigs: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (want_vectors) {
                        for (std::size_t k = 0; k < n; ++k) {
                            f = Z(k, i + 1);
                            Z(k, i + 1) = s * Z(k, i) + c * f;
                            Z(k, i) = c * Z(k, i) - s * f;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t size) : n(size) {
    if (size == 0 || size > kDenseGuard)
        throw std::invalid_argument("DenseMatrix: size outside (0, 4096]");
    a.assign(size * size, 0.0);
}

bool DenseMatrix::is_symmetric(double tol) const {
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol * std::max(1.0, scale)) return false;
    return true;
}

DenseMatrix dense_from_toeplitz(const ToeplitzOperator& op) {
    const std::size_t N = op.size();
    DenseMatrix D(N);
    const Dims& dims = op.dims();
    const std::size_t k = dims.size();
    std::vector<int> diff(k);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t ri = i, rj = j;
            for (std::size_t l = 0; l < k; ++l) {
                const std::size_t nl = static_cast<std::size_t>(dims[l]);
                diff[l] = static_cast<int>(ri % nl) - static_cast<int>(rj % nl);
                ri /= nl;
                rj /= nl;
            }
            D.at(i, j) = op.coeff_at(diff);
        }
    }
    return D;
}

DenseMatrix dense_identity(std::size_t n) {
    DenseMatrix D(n);
    for (std::size_t i = 0; i < n; ++i) D.at(i, i) = 1.0;
    return D;
}

DenseMatrix dense_multiply(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.n != B.n) throw std::invalid_argument("dense_multiply: size mismatch");
    DenseMatrix C(A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t k = 0; k < A.n; ++k) {
            const double aik = A.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < A.n; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

std::vector<double> sym_eigs(const DenseMatrix& A, DenseMatrix* vectors) {
    if (!A.is_symmetric())
        throw std::invalid_argument("sym_eigs: matrix is not symmetric");
    const std::size_t n = A.n;
    std::vector<double> z = A.a;
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        if (vectors) { *vectors = dense_identity(1); }
        return {A.at(0, 0)};
    }
    const bool want_vectors = vectors != nullptr;
    tridiagonalize(z, n, d, e, want_vectors);
    tridiag_ql(d, e, z, n, want_vectors);
    // sort ascending, permuting vectors along
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a_, std::size_t b_) { return d[a_] < d[b_]; });
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d[perm[i]];
    if (vectors) {
        *vectors = DenseMatrix(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                vectors->at(i, j) = z[i * n + perm[j]];
    }
    return out;
}

int cluster_count(const std::vector<double>& eigs, const std::vector<double>& centers,
                  double eps) {
    int count = 0;
    for (double v : eigs) {
        bool near = false;
        for (double c : centers)
            if (std::abs(v - c) <= eps) { near = true; break; }
        if (!near) ++count;
    }
    return count;
}

double distribution_distance(const std::vector<double>& eigs,
                             const std::function<double(double)>& absf) {
    const std::size_t N = eigs.size();
    if (N == 0) return 0.0;
    auto wrap = [](double th) {
        double w = std::fmod(th + kPi, 2.0 * kPi);
        if (w < 0.0) w += 2.0 * kPi;
        return w - kPi;
    };
    std::vector<double> samples(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double th = -2.0 * kPi + (static_cast<double>(i) + 0.5) * 4.0 * kPi / static_cast<double>(N);
        samples[i] = th >= 0.0 ? absf(wrap(th)) : -absf(wrap(-th));
    }
    std::sort(samples.begin(), samples.end());
    std::vector<double> sorted = eigs;
    std::sort(sorted.begin(), sorted.end());
    double dist = 0.0;
    for (std::size_t i = 0; i < N; ++i) dist = std::max(dist, std::abs(sorted[i] - samples[i]));
    return dist;
}

DenseMatrix symmetrized_pencil(const DenseMatrix& B, const DenseMatrix& M) {
    if (B.n != M.n) throw std::invalid_argument("symmetrized_pencil: size mismatch");
    DenseMatrix V;
    const std::vector<double> w = sym_eigs(M, &V);
    if (w.front() <= 0.0)
        throw std::invalid_argument("symmetrized_pencil: M is not positive definite");
    const std::size_t n = M.n;
    DenseMatrix Ms(n);  // M^{-1/2} = V diag(w^{-1/2}) V^T
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += V.at(i, k) * V.at(j, k) / std::sqrt(w[k]);
            Ms.at(i, j) = s;
        }
    DenseMatrix S = dense_multiply(dense_multiply(Ms, B), Ms);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (S.at(i, j) + S.at(j, i));
            S.at(i, j) = S.at(j, i) = v;
        }
    return S;
}

std::pair<double, double> check_rayleigh_bounds(const DenseMatrix& B, const DenseMatrix& M) {
    const std::vector<double> eigs = sym_eigs(symmetrized_pencil(B, M));
    return {eigs.front(), eigs.back()};
}

}  // namespace tauprec
