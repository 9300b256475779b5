#include "tauprec/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tauprec {

Vector flip(const Vector& x) {
    return Vector(x.rbegin(), x.rend());
}

void flip_inplace(Vector& x) {
    std::reverse(x.begin(), x.end());
}

ToeplitzOperator ToeplitzOperator::build(const CoeffTensor& coeffs) {
    if (coeffs.dims.empty()) throw std::invalid_argument("ToeplitzOperator: empty dims");
    ToeplitzOperator op;
    op.n_ = coeffs.dims;
    op.size_ = total_size(op.n_);
    op.coeffs_ = coeffs.real_entries();
    op.finalize();
    return op;
}

void ToeplitzOperator::finalize() {
    const std::size_t k = n_.size();
    emb_.resize(k);
    plans_.clear();
    plans_.reserve(k);
    std::size_t etotal = 1;
    for (std::size_t l = 0; l < k; ++l) {
        emb_[l] = FftPlan::next_pow2(2 * static_cast<std::size_t>(n_[l]));
        plans_.emplace_back(emb_[l]);
        etotal *= emb_[l];
    }
    // Scatter c_j to the circulant position (j_i mod m_i) per level.
    spectrum_.assign(etotal, cplx(0.0, 0.0));
    std::vector<int> j(k, 0);
    const std::size_t csize = coeffs_.size();
    for (std::size_t ci = 0; ci < csize; ++ci) {
        std::size_t rem = ci;
        std::size_t pos = 0, stride = 1;
        for (std::size_t l = 0; l < k; ++l) {
            const std::size_t span = 2 * static_cast<std::size_t>(n_[l]) - 1;
            const int jl = static_cast<int>(rem % span) - (n_[l] - 1);
            rem /= span;
            const std::size_t m = emb_[l];
            const std::size_t wrapped = static_cast<std::size_t>((jl + static_cast<int>(m)) % static_cast<int>(m));
            pos += stride * wrapped;
            stride *= m;
        }
        spectrum_[pos] = coeffs_[ci];
    }
    fft_nd(spectrum_, emb_, plans_, false);

    symmetric_ = true;
    for (std::size_t ci = 0; ci < csize && symmetric_; ++ci) {
        if (std::abs(coeffs_[ci] - coeffs_[csize - 1 - ci]) >
            1e-14 * (1.0 + std::abs(coeffs_[ci])))
            symmetric_ = false;
    }
}

double ToeplitzOperator::coeff_at(const std::vector<int>& j) const {
    if (j.size() != n_.size()) throw std::invalid_argument("coeff_at: rank mismatch");
    std::size_t idx = 0, stride = 1;
    for (std::size_t l = 0; l < n_.size(); ++l) {
        if (j[l] <= -n_[l] || j[l] >= n_[l]) return 0.0;
        idx += stride * static_cast<std::size_t>(j[l] + n_[l] - 1);
        stride *= 2 * static_cast<std::size_t>(n_[l]) - 1;
    }
    return coeffs_[idx];
}

std::vector<double> ToeplitzOperator::symmetric_first_row() const {
    if (n_.size() != 1 || !symmetric_)
        throw std::invalid_argument("symmetric_first_row: needs a symmetric 1-level operator");
    const int n = n_[0];
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j)] = coeff_at({j});
    return t;
}

Vector ToeplitzOperator::matvec(const Vector& x) const {
    Vector y;
    matvec(x, y);
    return y;
}

void ToeplitzOperator::matvec(const Vector& x, Vector& y) const {
    if (x.size() != size_) throw std::invalid_argument("matvec: dimension mismatch");
    const std::size_t k = n_.size();
    std::size_t etotal = spectrum_.size();
    std::vector<cplx> buf(etotal, cplx(0.0, 0.0));
    // zero-pad x into the embedding grid
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t xi = 0; xi < size_; ++xi) {
        std::size_t rem = xi, pos = 0, stride = 1;
        for (std::size_t l = 0; l < k; ++l) {
            const std::size_t nl = static_cast<std::size_t>(n_[l]);
            pos += stride * (rem % nl);
            rem /= nl;
            stride *= emb_[l];
        }
        buf[pos] = x[xi];
    }
    fft_nd(buf, emb_, plans_, false);
    for (std::size_t i = 0; i < etotal; ++i) buf[i] *= spectrum_[i];
    fft_nd(buf, emb_, plans_, true);
    y.resize(size_);
    for (std::size_t yi = 0; yi < size_; ++yi) {
        std::size_t rem = yi, pos = 0, stride = 1;
        for (std::size_t l = 0; l < k; ++l) {
            const std::size_t nl = static_cast<std::size_t>(n_[l]);
            pos += stride * (rem % nl);
            rem /= nl;
            stride *= emb_[l];
        }
        y[yi] = buf[pos].real();
    }
}

ToeplitzOperator ToeplitzOperator::transpose() const {
    if (symmetric_) return *this;
    CoeffTensor c(n_);
    const std::size_t csize = coeffs_.size();
    for (std::size_t ci = 0; ci < csize; ++ci)
        c.entries[csize - 1 - ci] = coeffs_[ci];
    return build(c);
}

ToeplitzOperator kron_identity_embed(const ToeplitzOperator& op1d, int level, const Dims& dims) {
    if (op1d.dims().size() != 1)
        throw std::invalid_argument("kron_identity_embed: base operator must be 1-level");
    if (level < 0 || level >= static_cast<int>(dims.size()))
        throw std::invalid_argument("kron_identity_embed: level out of range");
    if (dims[static_cast<std::size_t>(level)] != op1d.dims()[0])
        throw std::invalid_argument("kron_identity_embed: dims mismatch at level");
    CoeffTensor c(dims);
    std::vector<int> j(dims.size(), 0);
    const int n = op1d.dims()[0];
    for (int q = -(n - 1); q < n; ++q) {
        j[static_cast<std::size_t>(level)] = q;
        c.at(j) = op1d.coeff_at({q});
    }
    return ToeplitzOperator::build(c);
}

}  // namespace tauprec
