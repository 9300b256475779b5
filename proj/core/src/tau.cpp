#include "tauprec/tau.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tauprec {

namespace {
constexpr double kPi = std::numbers::pi;
}

SineTransformPlan::SineTransformPlan(Dims n) : n_(std::move(n)) {
    size_ = total_size(n_);
    plans_.reserve(n_.size());
    for (int d : n_) plans_.emplace_back(2 * (static_cast<std::size_t>(d) + 1));
}

void SineTransformPlan::apply_level(double* data, std::size_t level, std::size_t inner,
                                    std::size_t outer) const {
    const std::size_t n = static_cast<std::size_t>(n_[level]);
    const std::size_t len = 2 * (n + 1);
    const double scale = std::sqrt(2.0 / static_cast<double>(n + 1));
    std::vector<cplx> z(len);
    std::vector<double> line(n);
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < inner; ++i) {
            double* base = data + o * inner * n + i;
            for (std::size_t j = 0; j < n; ++j) line[j] = base[j * inner];
            // odd extension: z = [0, x_1..x_n, 0, -x_n..-x_1]
            z[0] = 0.0;
            z[n + 1] = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                z[j + 1] = line[j];
                z[len - 1 - j] = -line[j];
            }
            plans_[level].forward(z.data());
            // sum_j x_j sin(pi jk/(n+1)) = -Im(Z_k)/2
            for (std::size_t j = 0; j < n; ++j)
                base[j * inner] = -0.5 * scale * z[j + 1].imag();
        }
    }
}

void SineTransformPlan::apply(Vector& x) const {
    if (x.size() != size_) throw std::invalid_argument("SineTransformPlan: dimension mismatch");
    std::size_t inner = 1;
    for (std::size_t l = 0; l < n_.size(); ++l) {
        const std::size_t n = static_cast<std::size_t>(n_[l]);
        apply_level(x.data(), l, inner, size_ / (inner * n));
        inner *= n;
    }
}

Vector SineTransformPlan::apply_copy(const Vector& x) const {
    Vector y = x;
    apply(y);
    return y;
}

Vector dst1_apply(const SineTransformPlan& plan, const Vector& x) {
    return plan.apply_copy(x);
}

std::vector<double> tau_project_eigs(const std::vector<double>& t) {
    const std::size_t n = t.size();
    if (n == 0) throw std::invalid_argument("tau_project_eigs: empty row");
    // First column of T - H(T): c_i = t_{i-1} - t_{i+1} (i <= n-2),
    // c_{n-1} = t_{n-2}, c_n = t_{n-1}  (1-based i).
    Vector col(n);
    for (std::size_t i = 1; i <= n; ++i) {
        double v = t[i - 1];
        if (i + 1 < n) v -= t[i + 1];
        col[i - 1] = v;
    }
    SineTransformPlan plan(Dims{static_cast<int>(n)});
    plan.apply(col);
    std::vector<double> eigs(n);
    const double scale = std::sqrt(2.0 / static_cast<double>(n + 1));
    for (std::size_t j = 1; j <= n; ++j) {
        const double q1 = scale * std::sin(kPi * static_cast<double>(j) / static_cast<double>(n + 1));
        eigs[j - 1] = col[j - 1] / q1;
    }
    return eigs;
}

TauOperator tau_project(const ToeplitzOperator& T) {
    if (T.dims().size() != 1) throw std::invalid_argument("tau_project: expects a 1-level operator");
    if (!T.symmetric()) throw std::invalid_argument("tau_project: operator is not symmetric");
    TauOperator out;
    out.dims = T.dims();
    out.eigs = tau_project_eigs(T.symmetric_first_row());
    return out;
}

TauOperator tau_pow(const TauOperator& op, double exponent) {
    TauOperator out{op.dims, op.eigs};
    double amax = 0.0;
    for (double e : op.eigs) amax = std::max(amax, std::abs(e));
    const double clamp = -1e-12 * amax;
    const bool integral = exponent == std::floor(exponent);
    for (double& e : out.eigs) {
        if (e < 0.0) {
            if (e >= clamp) {
                e = 0.0;
            } else if (!integral) {
                throw std::domain_error("tau_pow: negative eigenvalue " + std::to_string(e) +
                                        " with non-integer exponent");
            }
        }
        e = std::pow(e, exponent);
    }
    return out;
}

TauOperator tau_combine(const std::vector<std::pair<double, const TauOperator*>>& terms) {
    if (terms.empty()) throw std::invalid_argument("tau_combine: no terms");
    TauOperator out;
    out.dims = terms.front().second->dims;
    out.eigs.assign(terms.front().second->eigs.size(), 0.0);
    for (const auto& [coef, op] : terms) {
        if (op->dims != out.dims) throw std::invalid_argument("tau_combine: dims mismatch");
        for (std::size_t i = 0; i < out.eigs.size(); ++i) out.eigs[i] += coef * op->eigs[i];
    }
    return out;
}

TauOperator tau_kron_embed(const TauOperator& op1d, int level, const Dims& dims) {
    if (op1d.dims.size() != 1) throw std::invalid_argument("tau_kron_embed: base must be 1-level");
    if (level < 0 || level >= static_cast<int>(dims.size()))
        throw std::invalid_argument("tau_kron_embed: level out of range");
    if (dims[static_cast<std::size_t>(level)] != op1d.dims[0])
        throw std::invalid_argument("tau_kron_embed: dims mismatch at level");
    TauOperator out;
    out.dims = dims;
    const std::size_t total = total_size(dims);
    out.eigs.resize(total);
    std::size_t inner = 1;
    for (int l = 0; l < level; ++l) inner *= static_cast<std::size_t>(dims[static_cast<std::size_t>(l)]);
    const std::size_t n = static_cast<std::size_t>(dims[static_cast<std::size_t>(level)]);
    for (std::size_t i = 0; i < total; ++i)
        out.eigs[i] = op1d.eigs[(i / inner) % n];
    return out;
}

Vector tau_apply(const TauOperator& op, const SineTransformPlan& plan, const Vector& x) {
    if (x.size() != op.size()) throw std::invalid_argument("tau_apply: dimension mismatch");
    Vector y = plan.apply_copy(x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= op.eigs[i];
    plan.apply(y);
    return y;
}

Vector tau_solve(const TauOperator& op, const SineTransformPlan& plan, const Vector& r) {
    if (r.size() != op.size()) throw std::invalid_argument("tau_solve: dimension mismatch");
    for (double e : op.eigs)
        if (e == 0.0) throw std::runtime_error("tau_solve: singular operator (zero eigenvalue)");
    Vector y = plan.apply_copy(r);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] /= op.eigs[i];
    plan.apply(y);
    return y;
}

}  // namespace tauprec
