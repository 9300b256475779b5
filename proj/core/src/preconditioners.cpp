#include "tauprec/preconditioners.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tauprec {

namespace {
constexpr double kPi = std::numbers::pi;
}

Preconditioner Preconditioner::identity(std::size_t size) {
    Preconditioner m;
    m.kind_ = Kind::identity;
    m.size_ = size;
    return m;
}

Preconditioner Preconditioner::from_tau(TauOperator op) {
    Preconditioner m;
    m.kind_ = Kind::tau;
    m.size_ = op.size();
    m.dims_ = op.dims;
    for (double e : op.eigs)
        if (!(e > 0.0))
            throw std::domain_error("Preconditioner: nonpositive tau eigenvalue " + std::to_string(e));
    m.eigs_ = std::move(op.eigs);
    m.sine_ = std::make_shared<SineTransformPlan>(m.dims_);
    return m;
}

Preconditioner Preconditioner::from_circulant(Dims dims, std::vector<double> fourier_eigs) {
    Preconditioner m;
    m.kind_ = Kind::circulant;
    m.dims_ = std::move(dims);
    m.size_ = total_size(m.dims_);
    if (fourier_eigs.size() != m.size_)
        throw std::invalid_argument("Preconditioner: spectrum size mismatch");
    for (double e : fourier_eigs)
        if (!(e > 0.0))
            throw std::domain_error("Preconditioner: nonpositive circulant eigenvalue");
    m.eigs_ = std::move(fourier_eigs);
    auto plans = std::make_shared<std::vector<FftPlan>>();
    m.fdims_.clear();
    for (int d : m.dims_) {
        plans->emplace_back(static_cast<std::size_t>(d));
        m.fdims_.push_back(static_cast<std::size_t>(d));
    }
    m.fft_ = std::move(plans);
    return m;
}

double Preconditioner::min_eigenvalue() const {
    if (kind_ == Kind::identity) return 1.0;
    double v = eigs_.front();
    for (double e : eigs_) v = std::min(v, e);
    return v;
}

void Preconditioner::apply_inverse(const Vector& r, Vector& z) const {
    if (r.size() != size_) throw std::invalid_argument("apply_inverse: dimension mismatch");
    switch (kind_) {
        case Kind::identity:
            z = r;
            return;
        case Kind::tau: {
            z = r;
            sine_->apply(z);
            for (std::size_t i = 0; i < z.size(); ++i) z[i] /= eigs_[i];
            sine_->apply(z);
            return;
        }
        case Kind::circulant: {
            std::vector<cplx> buf(r.begin(), r.end());
            fft_nd(buf, fdims_, *fft_, false);
            for (std::size_t i = 0; i < buf.size(); ++i) buf[i] /= eigs_[i];
            fft_nd(buf, fdims_, *fft_, true);
            z.resize(size_);
            for (std::size_t i = 0; i < size_; ++i) z[i] = buf[i].real();
            return;
        }
    }
}

Vector Preconditioner::apply_inverse(const Vector& r) const {
    Vector z;
    apply_inverse(r, z);
    return z;
}

Vector Preconditioner::apply(const Vector& x) const {
    switch (kind_) {
        case Kind::identity:
            return x;
        case Kind::tau: {
            Vector y = x;
            sine_->apply(y);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] *= eigs_[i];
            sine_->apply(y);
            return y;
        }
        case Kind::circulant: {
            std::vector<cplx> buf(x.begin(), x.end());
            fft_nd(buf, fdims_, *fft_, false);
            for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= eigs_[i];
            fft_nd(buf, fdims_, *fft_, true);
            Vector y(size_);
            for (std::size_t i = 0; i < size_; ++i) y[i] = buf[i].real();
            return y;
        }
    }
    return x;
}

SymbolTauParts symbol_tau_parts(double alpha, int n, Scheme scheme) {
    SymbolTauParts parts;
    const std::size_t un = static_cast<std::size_t>(n);
    parts.s.resize(un);
    parts.theta.resize(un);
    for (std::size_t j = 1; j <= un; ++j) {
        parts.theta[j - 1] = kPi * static_cast<double>(j) / static_cast<double>(n + 1);
        parts.s[j - 1] = 2.0 - 2.0 * std::cos(parts.theta[j - 1]);
    }
    ClosedParams cp;
    cp.alpha = alpha;
    cp.scheme = scheme;
    const CoeffTensor cv = fourier_coeffs_closed(ClosedSymbol::v_alpha, cp, Dims{n});
    std::vector<double> sym_row(un);
    for (int j = 0; j < n; ++j) {
        const cplx fwd = cv.at({j});
        const cplx bwd = cv.at({-j});
        sym_row[static_cast<std::size_t>(j)] = (fwd + bwd).real();
    }
    parts.mu = tau_project_eigs(sym_row);
    return parts;
}

namespace {

// |front(theta)|^2 for the scheme's v = -front * (1 - e^{i theta})^alpha; the
// shifted Grunwald front is the unimodular -e^{-i theta}.
double scheme_modulus_sq(Scheme scheme, double alpha, double theta) {
    if (scheme == Scheme::grunwald1) return 1.0;
    const double a = 0.5 * alpha, b = 0.5 * (2.0 - alpha);
    return a * a + b * b + 2.0 * a * b * std::cos(theta);
}

}  // namespace

std::vector<double> symbol_tau_axis_eigs(double alpha, int n, double d_plus, double d_minus,
                                         double scale, Scheme scheme) {
    const SymbolTauParts parts = symbol_tau_parts(alpha, n, scheme);
    std::vector<double> out(static_cast<std::size_t>(n));
    const double dd = d_plus - d_minus;
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double av2 = std::pow(parts.s[j], alpha) * scheme_modulus_sq(scheme, alpha, parts.theta[j]);
        const double val = dd * dd * av2 + d_plus * d_minus * parts.mu[j] * parts.mu[j];
        out[j] = scale * std::sqrt(std::max(val, 0.0));
    }
    return out;
}

Preconditioner build_P_1d(const FdeParams1D& p) {
    if (p.n < 1) throw std::invalid_argument("build_P_1d: n must be positive");
    const SymbolTauParts parts = symbol_tau_parts(p.alpha, p.n, p.scheme);
    TauOperator op;
    op.dims = Dims{p.n};
    op.eigs.resize(static_cast<std::size_t>(p.n));
    const double dd = p.d_plus - p.d_minus;
    for (std::size_t j = 0; j < op.eigs.size(); ++j) {
        const double av2 = std::pow(parts.s[j], p.alpha) * scheme_modulus_sq(p.scheme, p.alpha, parts.theta[j]);
        const double sq = p.nu * p.nu + p.nu * (p.d_plus + p.d_minus) * parts.mu[j] +
                          dd * dd * av2 + p.d_plus * p.d_minus * parts.mu[j] * parts.mu[j];
        if (!(sq > 0.0))
            throw std::domain_error("build_P_1d: nonpositive eigenvalue under the square root");
        op.eigs[j] = std::sqrt(sq);
    }
    return Preconditioner::from_tau(std::move(op));
}

Preconditioner build_P_2d(const FdeParams2D& p) {
    if (p.n1 < 1 || p.n2 < 1) throw std::invalid_argument("build_P_2d: dims must be positive");
    const double scale1 = p.step_weight * p.tau_time / std::pow(p.h1, p.alpha1);
    const double scale2 = p.step_weight * p.tau_time / std::pow(p.h2, p.alpha2);
    const std::vector<double> r1 =
        symbol_tau_axis_eigs(p.alpha1, p.n1, p.d1_plus, p.d1_minus, scale1, p.scheme);
    const std::vector<double> r2 =
        symbol_tau_axis_eigs(p.alpha2, p.n2, p.d2_plus, p.d2_minus, scale2, p.scheme);
    TauOperator op;
    op.dims = Dims{p.n1, p.n2};
    op.eigs.resize(static_cast<std::size_t>(p.n1) * static_cast<std::size_t>(p.n2));
    std::size_t idx = 0;
    for (int j2 = 0; j2 < p.n2; ++j2)
        for (int j1 = 0; j1 < p.n1; ++j1)
            op.eigs[idx++] = 1.0 + r1[static_cast<std::size_t>(j1)] + r2[static_cast<std::size_t>(j2)];
    return Preconditioner::from_tau(std::move(op));
}

Preconditioner build_tauR(const Dims& dims, const std::vector<double>& alphas,
                          const std::vector<double>& weights) {
    const std::size_t k = dims.size();
    if (alphas.size() != k || weights.size() != k)
        throw std::invalid_argument("build_tauR: per-level alphas/weights required");
    std::vector<TauOperator> embedded;
    embedded.reserve(k);
    for (std::size_t l = 0; l < k; ++l) {
        if (!(weights[l] > 0.0)) throw std::domain_error("build_tauR: weights must be positive");
        const auto rho = frac_centered_coeffs(alphas[l], static_cast<std::size_t>(dims[l])).values;
        TauOperator one;
        one.dims = Dims{dims[l]};
        one.eigs = tau_project_eigs(rho);
        embedded.push_back(tau_kron_embed(one, static_cast<int>(l), dims));
    }
    std::vector<std::pair<double, const TauOperator*>> terms;
    for (std::size_t l = 0; l < k; ++l) terms.emplace_back(weights[l], &embedded[l]);
    TauOperator sum = tau_combine(terms);
    for (double e : sum.eigs)
        if (!(e > 0.0))
            throw std::domain_error("build_tauR: nonpositive eigenvalue " + std::to_string(e));
    return Preconditioner::from_tau(std::move(sum));
}

namespace {

// First-column map of the 1-level Hankel-corrected projection: for symmetric
// coefficients t_0..t_{n-1}, col_i = t_{i-1} - t_{i+1} (i <= n-2), col_{n-1} =
// t_{n-2}, col_n = t_{n-1}.
void tau_col_map_axis(std::vector<double>& block, const Dims& dims, std::size_t level) {
    const std::size_t n = static_cast<std::size_t>(dims[level]);
    std::size_t inner = 1;
    for (std::size_t l = 0; l < level; ++l) inner *= static_cast<std::size_t>(dims[l]);
    const std::size_t outer = block.size() / (inner * n);
    std::vector<double> line(n);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t i = 0; i < inner; ++i) {
            double* base = block.data() + o * inner * n + i;
            for (std::size_t q = 0; q < n; ++q) line[q] = base[q * inner];
            for (std::size_t q = 1; q <= n; ++q) {
                double v = line[q - 1];
                if (q + 1 < n) v -= line[q + 1];
                base[(q - 1) * inner] = v;
            }
        }
}

}  // namespace

Preconditioner build_natural_tau(const ToeplitzOperator& T) {
    const Dims& dims = T.dims();
    const std::size_t k = dims.size();
    // Require per-level even coefficients (flipping any single index leaves
    // the coefficient unchanged); plain symmetry is not enough for the
    // per-level projection.
    {
        std::vector<int> j(k, 0);
        const std::size_t csize = T.coefficients().size();
        for (std::size_t ci = 0; ci < csize; ++ci) {
            std::size_t rem = ci;
            for (std::size_t l = 0; l < k; ++l) {
                const std::size_t span = 2 * static_cast<std::size_t>(dims[l]) - 1;
                j[l] = static_cast<int>(rem % span) - (dims[l] - 1);
                rem /= span;
            }
            for (std::size_t l = 0; l < k; ++l) {
                std::vector<int> jf = j;
                jf[l] = -jf[l];
                if (std::abs(T.coeff_at(j) - T.coeff_at(jf)) > 1e-12 * (1.0 + std::abs(T.coeff_at(j))))
                    throw std::invalid_argument("build_natural_tau: coefficients not even per level");
            }
        }
    }
    // Nonnegative-index coefficient block, level 1 fastest.
    std::vector<double> block(T.size());
    {
        std::vector<int> j(k);
        for (std::size_t bi = 0; bi < block.size(); ++bi) {
            std::size_t rem = bi;
            for (std::size_t l = 0; l < k; ++l) {
                j[l] = static_cast<int>(rem % static_cast<std::size_t>(dims[l]));
                rem /= static_cast<std::size_t>(dims[l]);
            }
            block[bi] = T.coeff_at(j);
        }
    }
    for (std::size_t l = 0; l < k; ++l) tau_col_map_axis(block, dims, l);
    SineTransformPlan plan(dims);
    plan.apply(block);
    // divide by (Q e_1) tensor
    std::vector<double> q1(k);
    TauOperator op;
    op.dims = dims;
    op.eigs.resize(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
        std::size_t rem = i;
        double denom = 1.0;
        for (std::size_t l = 0; l < k; ++l) {
            const std::size_t nl = static_cast<std::size_t>(dims[l]);
            const std::size_t jl = rem % nl;
            rem /= nl;
            denom *= std::sqrt(2.0 / static_cast<double>(nl + 1)) *
                     std::sin(kPi * static_cast<double>(jl + 1) / static_cast<double>(nl + 1));
        }
        op.eigs[i] = block[i] / denom;
    }
    return Preconditioner::from_tau(std::move(op));
}

namespace {

enum class CircKind { chan, strang };

Preconditioner circulant_from(const ToeplitzOperator& T, CircKind which, bool absolute) {
    const Dims& dims = T.dims();
    const std::size_t k = dims.size();
    // Per-level averaging from spans 2n-1 down to n (first-column arrays).
    std::vector<double> cur = T.coefficients();
    std::vector<std::size_t> spans(k);
    for (std::size_t l = 0; l < k; ++l) spans[l] = 2 * static_cast<std::size_t>(dims[l]) - 1;
    for (std::size_t level = 0; level < k; ++level) {
        const int n = dims[level];
        std::size_t inner = 1;
        for (std::size_t l = 0; l < level; ++l) inner *= static_cast<std::size_t>(dims[l]);
        std::size_t outer = 1;
        for (std::size_t l = level + 1; l < k; ++l) outer *= spans[l];
        const std::size_t span = spans[level];
        std::vector<double> next(inner * static_cast<std::size_t>(n) * outer);
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t i = 0; i < inner; ++i) {
                const double* src = cur.data() + o * inner * span + i;
                double* dst = next.data() + o * inner * static_cast<std::size_t>(n) + i;
                auto t_at = [&](int j) {  // j in (-n, n)
                    return src[static_cast<std::size_t>(j + n - 1) * inner];
                };
                for (int j = 0; j < n; ++j) {
                    double cj;
                    if (which == CircKind::chan) {
                        const double tneg = (j == 0) ? 0.0 : t_at(j - n);
                        cj = ((n - j) * t_at(j) + j * tneg) / static_cast<double>(n);
                    } else {
                        cj = (j <= n / 2) ? t_at(j) : t_at(j - n);
                    }
                    dst[static_cast<std::size_t>(j) * inner] = cj;
                }
            }
        cur = std::move(next);
        spans[level] = static_cast<std::size_t>(n);
    }
    // Fourier spectrum of the first column.
    std::vector<cplx> buf(cur.begin(), cur.end());
    std::vector<FftPlan> plans;
    std::vector<std::size_t> fdims;
    for (int d : dims) {
        plans.emplace_back(static_cast<std::size_t>(d));
        fdims.push_back(static_cast<std::size_t>(d));
    }
    fft_nd(buf, fdims, plans, false);
    std::vector<double> eigs(buf.size());
    double amax = 0.0;
    for (std::size_t i = 0; i < buf.size(); ++i) {
        eigs[i] = absolute ? std::abs(buf[i]) : buf[i].real();
        amax = std::max(amax, std::abs(eigs[i]));
    }
    const double floor_at = 1e-14 * amax;
    for (double& e : eigs) e = std::max(e, floor_at);
    return Preconditioner::from_circulant(dims, std::move(eigs));
}

}  // namespace

Preconditioner build_abs_circulant(const ToeplitzOperator& T) {
    return circulant_from(T, CircKind::chan, /*absolute=*/true);
}

Preconditioner build_strang_circulant(const ToeplitzOperator& T) {
    if (!T.symmetric())
        throw std::invalid_argument("build_strang_circulant: operator must be symmetric");
    return circulant_from(T, CircKind::strang, /*absolute=*/false);
}

}  // namespace tauprec
