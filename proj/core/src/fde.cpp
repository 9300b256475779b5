#include "tauprec/fde.hpp"

#include <cmath>
#include <stdexcept>

#include "tauprec/coefficients.hpp"

namespace tauprec {

namespace {

void check_problem(const FdeProblem& p) {
    for (int i = 0; i < p.k; ++i) {
        if (!(p.alpha[i] > 1.0 && p.alpha[i] < 2.0))
            throw std::domain_error("FdeProblem: alpha must lie in (1, 2)");
        if (p.d_plus[i] < 0.0 || p.d_minus[i] < 0.0)
            throw std::domain_error("FdeProblem: diffusion constants must be nonnegative");
    }
}

std::vector<double> interior_grid(double a, double b, int n) {
    const double h = (b - a) / (n + 1);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i - 1)] = a + i * h;
    return x;
}

}  // namespace

std::vector<double> wsgd_coeffs(double alpha, std::size_t count) {
    const auto g = grunwald_coeffs(alpha, count).values;
    std::vector<double> w(count);
    w[0] = 0.5 * alpha * g[0];
    for (std::size_t k = 1; k < count; ++k)
        w[k] = 0.5 * alpha * g[k] + 0.5 * (2.0 - alpha) * g[k - 1];
    return w;
}

TimeStepSystem assemble_1d(const FdeProblem& problem, int n, double tau_time) {
    if (problem.k != 1) throw std::invalid_argument("assemble_1d: problem is not 1D");
    check_problem(problem);
    if (problem.stepper != Stepper::backward_euler)
        throw std::invalid_argument("assemble_1d: only backward Euler is wired for 1D");
    TimeStepSystem sys;
    sys.dims = Dims{n};
    sys.tau_time = tau_time;
    sys.h[0] = (problem.b[0] - problem.a[0]) / (n + 1);
    sys.nu = std::pow(sys.h[0], problem.alpha[0]) / tau_time;
    sys.source_scale = std::pow(sys.h[0], problem.alpha[0]);
    sys.grid[0] = interior_grid(problem.a[0], problem.b[0], n);

    ClosedParams cp;
    cp.alpha = problem.alpha[0];
    cp.nu = sys.nu;
    cp.d_plus = problem.d_plus[0];
    cp.d_minus = problem.d_minus[0];
    cp.scheme = problem.scheme;
    sys.op = ToeplitzOperator::build(fourier_coeffs_closed(ClosedSymbol::g_1d, cp, sys.dims));
    return sys;
}

TimeStepSystem assemble_2d(const FdeProblem& problem, int n1, int n2, double tau_time) {
    if (problem.k != 2) throw std::invalid_argument("assemble_2d: problem is not 2D");
    check_problem(problem);
    TimeStepSystem sys;
    sys.dims = Dims{n1, n2};
    sys.tau_time = tau_time;
    sys.h[0] = (problem.b[0] - problem.a[0]) / (n1 + 1);
    sys.h[1] = (problem.b[1] - problem.a[1]) / (n2 + 1);
    sys.source_scale = tau_time;
    sys.grid[0] = interior_grid(problem.a[0], problem.b[0], n1);
    sys.grid[1] = interior_grid(problem.a[1], problem.b[1], n2);

    const double weight = problem.stepper == Stepper::crank_nicolson ? 0.5 : 1.0;
    ClosedParams cp;
    cp.scheme = problem.scheme;
    cp.tau_time = weight * tau_time;
    cp.ax1 = {problem.alpha[0], problem.d_plus[0], problem.d_minus[0], sys.h[0]};
    cp.ax2 = {problem.alpha[1], problem.d_plus[1], problem.d_minus[1], sys.h[1]};
    CoeffTensor system_coeffs = fourier_coeffs_closed(ClosedSymbol::g_2d, cp, sys.dims);
    sys.op = ToeplitzOperator::build(system_coeffs);

    if (problem.stepper == Stepper::crank_nicolson) {
        // right factor I - (1/2)(I x A_1 + A_2 x I) = 2 I - system matrix
        CoeffTensor rhs_coeffs(sys.dims);
        for (std::size_t i = 0; i < rhs_coeffs.entries.size(); ++i)
            rhs_coeffs.entries[i] = -system_coeffs.entries[i];
        rhs_coeffs.at({0, 0}) += 2.0;
        sys.rhs_op = ToeplitzOperator::build(rhs_coeffs);
    }
    return sys;
}

Preconditioner build_matching_preconditioner(const FdeProblem& problem, const TimeStepSystem& sys) {
    if (problem.k == 1) {
        FdeParams1D p;
        p.n = sys.dims[0];
        p.alpha = problem.alpha[0];
        p.d_plus = problem.d_plus[0];
        p.d_minus = problem.d_minus[0];
        p.nu = sys.nu;
        p.h = sys.h[0];
        p.tau_time = sys.tau_time;
        p.scheme = problem.scheme;
        return build_P_1d(p);
    }
    FdeParams2D p;
    p.n1 = sys.dims[0];
    p.n2 = sys.dims[1];
    p.alpha1 = problem.alpha[0];
    p.alpha2 = problem.alpha[1];
    p.d1_plus = problem.d_plus[0];
    p.d1_minus = problem.d_minus[0];
    p.d2_plus = problem.d_plus[1];
    p.d2_minus = problem.d_minus[1];
    p.h1 = sys.h[0];
    p.h2 = sys.h[1];
    p.tau_time = sys.tau_time;
    p.scheme = problem.scheme;
    p.step_weight = problem.stepper == Stepper::crank_nicolson ? 0.5 : 1.0;
    return build_P_2d(p);
}

namespace {

Vector sample_on_grid(const TimeStepSystem& sys, const FdeProblem& problem,
                      const std::function<double(const double*, double)>& f, double t) {
    Vector out(total_size(sys.dims));
    double x[2] = {0.0, 0.0};
    if (problem.k == 1) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            x[0] = sys.grid[0][i];
            out[i] = f(x, t);
        }
    } else {
        const std::size_t n1 = sys.grid[0].size();
        std::size_t idx = 0;
        for (std::size_t i2 = 0; i2 < sys.grid[1].size(); ++i2)
            for (std::size_t i1 = 0; i1 < n1; ++i1) {
                x[0] = sys.grid[0][i1];
                x[1] = sys.grid[1][i2];
                out[idx++] = f(x, t);
            }
    }
    return out;
}

double max_abs_diff(const Vector& a, const Vector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

Vector example_rhs(int example_id, const TimeStepSystem& sys, const FdeProblem& problem, double t) {
    if (example_id != 2 && example_id != 3)
        throw std::invalid_argument("example_rhs: unknown example id");
    return sample_on_grid(sys, problem, problem.source, t);
}

MarchReport march(const TimeStepSystem& sys, const FdeProblem& problem,
                  const Preconditioner& M, int steps, double tol, int maxit) {
    MarchReport rep;
    const std::size_t N = total_size(sys.dims);
    Vector u = problem.initial
                   ? sample_on_grid(sys, problem, [&problem](const double* x, double) {
                         return problem.initial(x);
                     }, 0.0)
                   : Vector(N, 0.0);
    const double tau = sys.tau_time;
    Vector rhs(N), tmp(N);
    long total_iters = 0;
    for (int l = 1; l <= steps; ++l) {
        const double t_mid = (static_cast<double>(l) - 0.5) * tau;
        const double t_new = static_cast<double>(l) * tau;
        if (problem.k == 1) {
            const Vector f = sample_on_grid(sys, problem, problem.source, t_new);
            for (std::size_t i = 0; i < N; ++i) rhs[i] = sys.nu * u[i] + sys.source_scale * f[i];
        } else if (problem.stepper == Stepper::crank_nicolson) {
            const Vector f = sample_on_grid(sys, problem, problem.source, t_mid);
            sys.rhs_op->matvec(u, tmp);
            for (std::size_t i = 0; i < N; ++i) rhs[i] = tmp[i] + sys.source_scale * f[i];
        } else {
            const Vector f = sample_on_grid(sys, problem, problem.source, t_new);
            for (std::size_t i = 0; i < N; ++i) rhs[i] = u[i] + sys.source_scale * f[i];
        }
        double rhs_norm = 0.0;
        for (double v : rhs) rhs_norm = std::max(rhs_norm, std::abs(v));
        if (rhs_norm == 0.0) {
            SolveReport sr;
            sr.converged = true;
            sr.solution.assign(N, 0.0);
            sr.residual_history = {0.0};
            u.assign(N, 0.0);
            rep.steps.push_back(std::move(sr));
            continue;
        }
        SolveReport sr = solve_symmetrized(sys.op, M, rhs, &u, tol, maxit);
        if (!sr.converged)
            throw std::runtime_error("march: solver failed to converge at step " + std::to_string(l));
        u = sr.solution;
        total_iters += sr.iterations;
        rep.steps.push_back(std::move(sr));
    }
    rep.solution = u;
    if (!rep.steps.empty()) {
        rep.first_step_iterations = rep.steps.front().iterations;
        for (const auto& s : rep.steps)
            rep.max_step_iterations = std::max(rep.max_step_iterations, s.iterations);
        rep.mean_step_iterations =
            static_cast<double>(total_iters) / static_cast<double>(rep.steps.size());
    }
    if (problem.exact) {
        const Vector ue = sample_on_grid(sys, problem, problem.exact, steps * tau);
        rep.err_inf = max_abs_diff(u, ue);
    }
    return rep;
}

FdeProblem example2_problem(double alpha1, double alpha2) {
    FdeProblem p;
    p.k = 2;
    p.a[0] = p.a[1] = 0.0;
    p.b[0] = p.b[1] = 1.0;
    p.T_final = 1.0;
    p.alpha[0] = alpha1;
    p.alpha[1] = alpha2;
    p.d_plus[0] = 50.0;
    p.d_minus[0] = 10.0;
    p.d_plus[1] = 20.0;
    p.d_minus[1] = 30.0;
    p.scheme = Scheme::grunwald1;
    p.stepper = Stepper::backward_euler;
    p.source = [](const double* x, double t) {
        return 100.0 * std::sin(10.0 * x[0]) * std::cos(x[1]) + std::sin(10.0 * t) * x[0] * x[1];
    };
    p.initial = nullptr;  // u0 = 0
    return p;
}

namespace {

double quartic_bump(double x) { return x * x * (2.0 - x) * (2.0 - x); }

// sum_{i=2}^{4} C(2,i-2) 2^{4-i} i! [d+ x^{i-a} + d- (2-x)^{i-a}]
//               / (Gamma(i+1-a) (-1)^{i-2})
double fractional_bump_derivative(double x, double alpha, double dp, double dm) {
    static const double binom2[3] = {1.0, 2.0, 1.0};
    static const double fact[5] = {1.0, 1.0, 2.0, 6.0, 24.0};
    double out = 0.0;
    for (int i = 2; i <= 4; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        const double c = binom2[i - 2] * std::pow(2.0, 4 - i) * fact[i] * sign /
                         std::exp(log_gamma(static_cast<double>(i) + 1.0 - alpha));
        out += c * (dp * std::pow(x, i - alpha) + dm * std::pow(2.0 - x, i - alpha));
    }
    return out;
}

}  // namespace

FdeProblem example3_problem(double alpha1, double alpha2) {
    FdeProblem p;
    p.k = 2;
    p.a[0] = p.a[1] = 0.0;
    p.b[0] = p.b[1] = 2.0;
    p.T_final = 1.0;
    p.alpha[0] = alpha1;
    p.alpha[1] = alpha2;
    p.d_plus[0] = 2.0;
    p.d_minus[0] = 35.0;
    p.d_plus[1] = 1.0;
    p.d_minus[1] = 20.0;
    p.scheme = Scheme::wsgd2;
    p.stepper = Stepper::crank_nicolson;
    const double d1p = p.d_plus[0], d1m = p.d_minus[0];
    const double d2p = p.d_plus[1], d2m = p.d_minus[1];
    p.source = [=](const double* x, double t) {
        const double X1 = quartic_bump(x[0]);
        const double X2 = quartic_bump(x[1]);
        return std::exp(t) * (X1 * X2 - X2 * fractional_bump_derivative(x[0], alpha1, d1p, d1m) -
                              X1 * fractional_bump_derivative(x[1], alpha2, d2p, d2m));
    };
    p.initial = [](const double* x) { return quartic_bump(x[0]) * quartic_bump(x[1]); };
    p.exact = [](const double* x, double t) {
        return std::exp(t) * quartic_bump(x[0]) * quartic_bump(x[1]);
    };
    return p;
}

}  // namespace tauprec
