#include "tauprec/symbols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tauprec/fft.hpp"

namespace tauprec {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::size_t total_size(const Dims& n) {
    std::size_t p = 1;
    for (int d : n) {
        if (d <= 0) throw std::invalid_argument("dims must be positive");
        p *= static_cast<std::size_t>(d);
    }
    return p;
}

CoeffTensor::CoeffTensor(Dims n) : dims(std::move(n)) {
    std::size_t sz = 1;
    for (int d : dims) {
        if (d <= 0) throw std::invalid_argument("CoeffTensor: dims must be positive");
        sz *= 2 * static_cast<std::size_t>(d) - 1;
    }
    entries.assign(sz, cplx(0.0, 0.0));
}

cplx& CoeffTensor::at(const std::vector<int>& j) {
    return const_cast<cplx&>(static_cast<const CoeffTensor*>(this)->at(j));
}

const cplx& CoeffTensor::at(const std::vector<int>& j) const {
    if (j.size() != dims.size()) throw std::invalid_argument("CoeffTensor::at: rank mismatch");
    std::size_t idx = 0, stride = 1;
    for (std::size_t l = 0; l < dims.size(); ++l) {
        const int n = dims[l];
        if (j[l] <= -n || j[l] >= n) throw std::out_of_range("CoeffTensor::at: index out of range");
        idx += stride * static_cast<std::size_t>(j[l] + n - 1);
        stride *= 2 * static_cast<std::size_t>(n) - 1;
    }
    return entries[idx];
}

double CoeffTensor::imag_residual() const {
    double scale = 0.0, im = 0.0;
    for (const cplx& z : entries) {
        scale = std::max(scale, std::abs(z));
        im = std::max(im, std::abs(z.imag()));
    }
    return scale > 0.0 ? im / scale : 0.0;
}

std::vector<double> CoeffTensor::real_entries() const {
    if (imag_residual() > 1e-10)
        throw std::runtime_error("CoeffTensor: coefficients are not real");
    std::vector<double> out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out[i] = entries[i].real();
    return out;
}

cplx eval_v_alpha(double alpha, double theta) {
    if (theta == 0.0) return cplx(0.0, 0.0);
    const cplx z = 1.0 - std::exp(cplx(0.0, theta));
    return -std::exp(cplx(0.0, -theta)) * std::exp(alpha * std::log(z));
}

cplx eval_v_alpha2(double alpha, double theta) {
    if (theta == 0.0) return cplx(0.0, 0.0);
    const cplx z = 1.0 - std::exp(cplx(0.0, theta));
    const cplx front = 0.5 * alpha * std::exp(cplx(0.0, -theta)) + 0.5 * (2.0 - alpha);
    return -front * std::exp(alpha * std::log(z));
}

cplx eval_g_1d(double nu, double d_plus, double d_minus, double alpha, double theta) {
    const cplx v = eval_v_alpha(alpha, theta);
    return nu + d_plus * v + d_minus * std::conj(v);
}

double eval_abs_g_1d(double nu, double d_plus, double d_minus, double alpha, double theta) {
    const cplx v = eval_v_alpha(alpha, theta);
    const double re2 = 2.0 * v.real();                       // v + conj v
    const double av2 = std::pow(2.0 - 2.0 * std::cos(theta), alpha);  // |v|^2
    const double sq = nu * nu + nu * (d_plus + d_minus) * re2 +
                      (d_plus - d_minus) * (d_plus - d_minus) * av2 +
                      d_plus * d_minus * re2 * re2;
    return std::sqrt(std::max(sq, 0.0));
}

cplx eval_g_2d(const FdeAxis& ax1, const FdeAxis& ax2, double tau_time,
               double theta1, double theta2) {
    const double s1 = tau_time / std::pow(ax1.h, ax1.alpha);
    const double s2 = tau_time / std::pow(ax2.h, ax2.alpha);
    const cplx v1 = eval_v_alpha(ax1.alpha, theta1);
    const cplx v2 = eval_v_alpha(ax2.alpha, theta2);
    const cplx w1 = s1 * (ax1.d_plus * v1 + ax1.d_minus * std::conj(v1));
    const cplx w2 = s2 * (ax2.d_plus * v2 + ax2.d_minus * std::conj(v2));
    return 1.0 + w1 + w2;
}

double eval_p_piecewise(double a, double t) {
    return std::abs(t) < kPi / 2.0 ? std::pow(std::abs(t), a) : 1.0;
}

double eval_example4_symbol(double alpha1, double alpha2, double theta1, double theta2) {
    return eval_p_piecewise(alpha1, theta1) + eval_p_piecewise(alpha2, theta2) -
           eval_p_piecewise(1.0, theta1) * eval_p_piecewise(1.0, theta2);
}

namespace {

// 1-level coefficients of T(v_alpha): c_j = -w_{j+1} for j >= -1, else 0.
std::vector<cplx> v_alpha_line(double alpha, int n, Scheme scheme) {
    std::vector<double> w;
    if (scheme == Scheme::grunwald1) {
        w = grunwald_coeffs(alpha, static_cast<std::size_t>(n) + 1).values;
    } else {
        const auto g = grunwald_coeffs(alpha, static_cast<std::size_t>(n) + 1).values;
        w.resize(g.size());
        w[0] = 0.5 * alpha * g[0];
        for (std::size_t k = 1; k < g.size(); ++k)
            w[k] = 0.5 * alpha * g[k] + 0.5 * (2.0 - alpha) * g[k - 1];
    }
    std::vector<cplx> c(2 * static_cast<std::size_t>(n) - 1, cplx(0.0, 0.0));
    for (int j = -1; j < n; ++j) c[static_cast<std::size_t>(j + n - 1)] = -w[static_cast<std::size_t>(j + 1)];
    return c;
}

std::vector<cplx> reflect(const std::vector<cplx>& c) {
    std::vector<cplx> r(c.rbegin(), c.rend());
    return r;
}

std::vector<cplx> axpy_lines(double a, const std::vector<cplx>& x, double b,
                             const std::vector<cplx>& y) {
    std::vector<cplx> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
    return out;
}

// Embed a 1-level coefficient line along `level` of a k-level tensor (all
// other indices zero), accumulating into t.
void add_line(CoeffTensor& t, const std::vector<cplx>& line, int level) {
    std::vector<int> j(t.dims.size(), 0);
    const int n = t.dims[static_cast<std::size_t>(level)];
    for (int q = -(n - 1); q < n; ++q) {
        j[static_cast<std::size_t>(level)] = q;
        t.at(j) += line[static_cast<std::size_t>(q + n - 1)];
    }
}

}  // namespace

CoeffTensor fourier_coeffs_closed(ClosedSymbol kind, const ClosedParams& p, const Dims& n) {
    switch (kind) {
        case ClosedSymbol::laplacian: {
            if (n.size() != 1) throw std::invalid_argument("laplacian coefficients are 1-level");
            CoeffTensor t(n);
            t.at({0}) = 2.0;
            if (n[0] > 1) {
                t.at({1}) = -1.0;
                t.at({-1}) = -1.0;
            }
            return t;
        }
        case ClosedSymbol::v_alpha: {
            if (n.size() != 1) throw std::invalid_argument("v_alpha coefficients are 1-level");
            CoeffTensor t(n);
            auto line = v_alpha_line(p.alpha, n[0], p.scheme);
            for (std::size_t i = 0; i < line.size(); ++i) t.entries[i] = line[i];
            return t;
        }
        case ClosedSymbol::r_alpha: {
            if (n.size() != 1) throw std::invalid_argument("r_alpha coefficients are 1-level");
            CoeffTensor t(n);
            const auto rho = frac_centered_coeffs(p.alpha, static_cast<std::size_t>(n[0])).values;
            for (int j = -(n[0] - 1); j < n[0]; ++j)
                t.at({j}) = rho[static_cast<std::size_t>(std::abs(j))];
            return t;
        }
        case ClosedSymbol::g_1d: {
            if (n.size() != 1) throw std::invalid_argument("g_1d coefficients are 1-level");
            CoeffTensor t(n);
            const auto v = v_alpha_line(p.alpha, n[0], p.scheme);
            auto line = axpy_lines(p.d_plus, v, p.d_minus, reflect(v));
            for (std::size_t i = 0; i < line.size(); ++i) t.entries[i] = line[i];
            t.at({0}) += p.nu;
            return t;
        }
        case ClosedSymbol::g_2d: {
            if (n.size() != 2) throw std::invalid_argument("g_2d coefficients are 2-level");
            CoeffTensor t(n);
            const double s1 = p.tau_time / std::pow(p.ax1.h, p.ax1.alpha);
            const double s2 = p.tau_time / std::pow(p.ax2.h, p.ax2.alpha);
            const auto v1 = v_alpha_line(p.ax1.alpha, n[0], p.scheme);
            const auto v2 = v_alpha_line(p.ax2.alpha, n[1], p.scheme);
            add_line(t, axpy_lines(s1 * p.ax1.d_plus, v1, s1 * p.ax1.d_minus, reflect(v1)), 0);
            add_line(t, axpy_lines(s2 * p.ax2.d_plus, v2, s2 * p.ax2.d_minus, reflect(v2)), 1);
            t.at({0, 0}) += 1.0;
            return t;
        }
    }
    throw std::invalid_argument("fourier_coeffs_closed: unsupported kind");
}

std::vector<cplx> fourier_coeffs_numeric_1d(const std::function<cplx(double)>& f,
                                            int n, int oversample) {
    if (oversample < 8) throw std::invalid_argument("fourier_coeffs_numeric: oversample >= 8");
    const std::size_t grid = std::max<std::size_t>(
        static_cast<std::size_t>(oversample) * 2 * static_cast<std::size_t>(n), std::size_t{1} << 14);
    const std::size_t m = FftPlan::next_pow2(grid);
    std::vector<cplx> samples(m);
    for (std::size_t q = 0; q < m; ++q) {
        const double theta = -kPi + 2.0 * kPi * static_cast<double>(q) / static_cast<double>(m);
        samples[q] = f(theta);
    }
    FftPlan plan(m);
    plan.forward(samples.data());
    // c_j = (-1)^j X_{j mod m} / m  (the (-1)^j undoes the -pi grid offset)
    std::vector<cplx> c(2 * static_cast<std::size_t>(n) - 1);
    for (int j = -(n - 1); j < n; ++j) {
        const std::size_t idx = static_cast<std::size_t>((j % static_cast<int>(m) + static_cast<int>(m)) % static_cast<int>(m));
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        c[static_cast<std::size_t>(j + n - 1)] = sign * samples[idx] / static_cast<double>(m);
    }
    return c;
}

CoeffTensor fourier_coeffs_numeric(const Symbol& s, const Dims& n, int oversample) {
    if (static_cast<int>(n.size()) != s.levels)
        throw std::invalid_argument("fourier_coeffs_numeric: rank mismatch");
    if (s.levels == 1) {
        CoeffTensor t(n);
        auto line = fourier_coeffs_numeric_1d(
            [&s](double th) { return s.eval({th}); }, n[0], oversample);
        t.entries = std::move(line);
        return t;
    }
    if (!s.separable.empty()) {
        // c_j = sum_t coef_t prod_i c^{(t,i)}_{j_i}; a missing factor is T(1) = I.
        CoeffTensor t(n);
        for (const auto& term : s.separable) {
            std::vector<std::vector<cplx>> lines(n.size());
            for (std::size_t l = 0; l < n.size(); ++l) {
                if (term.factors[l]) {
                    const auto& fl = term.factors[l];
                    lines[l] = fourier_coeffs_numeric_1d(
                        [&fl](double th) { return cplx(fl(th), 0.0); }, n[l], oversample);
                } else {
                    lines[l].assign(2 * static_cast<std::size_t>(n[l]) - 1, cplx(0.0, 0.0));
                    lines[l][static_cast<std::size_t>(n[l] - 1)] = 1.0;
                }
            }
            if (n.size() != 2) throw std::invalid_argument("separable path supports 2 levels");
            std::vector<int> j(2);
            for (int j2 = -(n[1] - 1); j2 < n[1]; ++j2)
                for (int j1 = -(n[0] - 1); j1 < n[0]; ++j1) {
                    j[0] = j1; j[1] = j2;
                    t.at(j) += term.coef * lines[0][static_cast<std::size_t>(j1 + n[0] - 1)] *
                               lines[1][static_cast<std::size_t>(j2 + n[1] - 1)];
                }
        }
        return t;
    }
    if (s.levels != 2)
        throw std::invalid_argument("fourier_coeffs_numeric: direct sampling supports k <= 2");
    // Full 2D quadrature; used only at test scale.
    std::vector<std::size_t> m(2);
    for (std::size_t l = 0; l < 2; ++l)
        m[l] = FftPlan::next_pow2(std::max<std::size_t>(
            static_cast<std::size_t>(oversample) * 2 * static_cast<std::size_t>(n[l]), 512));
    std::vector<cplx> samples(m[0] * m[1]);
    for (std::size_t q2 = 0; q2 < m[1]; ++q2)
        for (std::size_t q1 = 0; q1 < m[0]; ++q1) {
            const double th1 = -kPi + 2.0 * kPi * static_cast<double>(q1) / static_cast<double>(m[0]);
            const double th2 = -kPi + 2.0 * kPi * static_cast<double>(q2) / static_cast<double>(m[1]);
            samples[q2 * m[0] + q1] = s.eval({th1, th2});
        }
    std::vector<FftPlan> plans;
    plans.emplace_back(m[0]);
    plans.emplace_back(m[1]);
    fft_nd(samples, m, plans, false);
    CoeffTensor t(n);
    const double inv = 1.0 / static_cast<double>(m[0] * m[1]);
    std::vector<int> j(2);
    for (int j2 = -(n[1] - 1); j2 < n[1]; ++j2)
        for (int j1 = -(n[0] - 1); j1 < n[0]; ++j1) {
            const std::size_t i1 = static_cast<std::size_t>((j1 + static_cast<int>(m[0])) % static_cast<int>(m[0]));
            const std::size_t i2 = static_cast<std::size_t>((j2 + static_cast<int>(m[1])) % static_cast<int>(m[1]));
            const double sign = ((j1 + j2) % 2 == 0) ? 1.0 : -1.0;
            j[0] = j1; j[1] = j2;
            t.at(j) = sign * samples[i2 * m[0] + i1] * inv;
        }
    return t;
}

Symbol symbol_example4(double alpha1, double alpha2) {
    Symbol s;
    s.levels = 2;
    s.real_coeffs = true;
    s.even = true;
    s.eval = [alpha1, alpha2](const std::vector<double>& th) {
        return cplx(eval_example4_symbol(alpha1, alpha2, th[0], th[1]), 0.0);
    };
    auto pa1 = [alpha1](double t) { return eval_p_piecewise(alpha1, t); };
    auto pa2 = [alpha2](double t) { return eval_p_piecewise(alpha2, t); };
    auto p1 = [](double t) { return eval_p_piecewise(1.0, t); };
    s.separable = {
        {1.0, {pa1, nullptr}},
        {1.0, {nullptr, pa2}},
        {-1.0, {p1, p1}},
    };
    return s;
}

Symbol symbol_q_alpha(double alpha1, double alpha2, double l1, double l2) {
    Symbol s;
    s.levels = 2;
    s.real_coeffs = true;
    s.even = true;
    s.eval = [=](const std::vector<double>& th) {
        return cplx(l1 * std::pow(std::abs(th[0]), alpha1) + l2 * std::pow(std::abs(th[1]), alpha2), 0.0);
    };
    auto q1 = [alpha1](double t) { return std::pow(std::abs(t), alpha1); };
    auto q2 = [alpha2](double t) { return std::pow(std::abs(t), alpha2); };
    s.separable = {
        {l1, {q1, nullptr}},
        {l2, {nullptr, q2}},
    };
    return s;
}

Symbol symbol_abs_theta_pow(double alpha) {
    Symbol s;
    s.levels = 1;
    s.real_coeffs = true;
    s.even = true;
    s.eval = [alpha](const std::vector<double>& th) {
        return cplx(std::pow(std::abs(th[0]), alpha), 0.0);
    };
    return s;
}

CoeffTensor example1_coeffs(int n) {
    // theta = sum_{j != 0} i (-1)^j / j e^{i j theta}, so 1 + i theta has real
    // coefficients w_j = -(-1)^j / j off the diagonal. Convolving with the
    // Laplacian line {-1, 2, -1} gives the coefficients of f.
    auto w = [](long j) { return j == 0 ? 0.0 : -((j % 2 == 0) ? 1.0 : -1.0) / static_cast<double>(j); };
    CoeffTensor t(Dims{n});
    for (int j = -(n - 1); j < n; ++j) {
        const double u = (j == 0) ? 2.0 : (std::abs(j) == 1 ? -1.0 : 0.0);
        t.at({j}) = u - w(j + 1) + 2.0 * w(j) - w(j - 1);
    }
    return t;
}

}  // namespace tauprec
