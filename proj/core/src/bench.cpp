#include "tauprec/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace tauprec {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::uint64_t GaussianRng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double GaussianRng::uniform() {
    double u;
    do {
        u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    } while (u <= 0.0);
    return u;
}

double GaussianRng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
}

std::string to_string(PrecondChoice p) {
    switch (p) {
        case PrecondChoice::symbol_tau: return "symbol_tau";
        case PrecondChoice::natural_tau: return "natural_tau";
        case PrecondChoice::abs_circulant: return "abs_circulant";
        case PrecondChoice::strang_circulant: return "strang_circulant";
        case PrecondChoice::none: return "none";
    }
    return "?";
}

std::string to_string(SolverChoice s) {
    return s == SolverChoice::minres ? "minres" : "pcg";
}

bool precond_from_string(const std::string& s, PrecondChoice& out) {
    if (s == "symbol_tau") out = PrecondChoice::symbol_tau;
    else if (s == "natural_tau") out = PrecondChoice::natural_tau;
    else if (s == "abs_circulant") out = PrecondChoice::abs_circulant;
    else if (s == "strang_circulant") out = PrecondChoice::strang_circulant;
    else if (s == "none") out = PrecondChoice::none;
    else return false;
    return true;
}

namespace {

Vector gaussian_vector(std::size_t n, std::uint64_t seed) {
    GaussianRng rng(seed);
    Vector b(n);
    for (double& v : b) v = rng.normal();
    return b;
}

// Example 1: T(f), f = (2 - 2 cos)(1 + i theta); P = sqrt(T(2-2cos)^2 + T(2-2cos)^3).
Preconditioner example1_preconditioner(int n, PrecondChoice choice, const ToeplitzOperator& op) {
    switch (choice) {
        case PrecondChoice::symbol_tau: {
            TauOperator t;
            t.dims = Dims{n};
            t.eigs.resize(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j) {
                const double s = 2.0 - 2.0 * std::cos(kPi * j / (n + 1));
                t.eigs[static_cast<std::size_t>(j - 1)] = std::sqrt(s * s + s * s * s);
            }
            return Preconditioner::from_tau(std::move(t));
        }
        case PrecondChoice::abs_circulant:
            return build_abs_circulant(op);
        case PrecondChoice::none:
            return Preconditioner::identity(static_cast<std::size_t>(n));
        default:
            throw std::invalid_argument("example 1 supports symbol_tau, abs_circulant or none");
    }
}

ToeplitzOperator example4_operator(int n, double alpha1, double alpha2) {
    const Symbol s = symbol_example4(alpha1, alpha2);
    return ToeplitzOperator::build(fourier_coeffs_numeric(s, Dims{n, n}));
}

Preconditioner example4_preconditioner(const ToeplitzOperator& op, int n, double a1, double a2,
                                       PrecondChoice choice) {
    switch (choice) {
        case PrecondChoice::symbol_tau:
            return build_tauR(Dims{n, n}, {a1, a2}, {1.0, 1.0});
        case PrecondChoice::natural_tau:
            return build_natural_tau(op);
        case PrecondChoice::strang_circulant:
            return build_strang_circulant(op);
        case PrecondChoice::abs_circulant:
            return build_abs_circulant(op);
        case PrecondChoice::none:
            return Preconditioner::identity(op.size());
    }
    throw std::invalid_argument("unreachable");
}

ResultRow base_row(const RunConfig& c, int n1, int n2) {
    ResultRow row;
    row.example = c.example;
    row.n1 = n1;
    row.n2 = n2;
    row.alpha1 = c.alpha1;
    row.alpha2 = c.alpha2;
    row.precond = to_string(c.precond);
    row.solver = to_string(c.solver);
    return row;
}

void fill_from_report(ResultRow& row, const SolveReport& rep) {
    row.iters = rep.iterations;
    row.seconds = rep.wall_seconds;
    row.relres = rep.residual_history.back();
    row.converged = rep.converged;
}

}  // namespace

std::vector<ResultRow> run_example(const RunConfig& config) {
    if (config.sizes.empty()) throw std::invalid_argument("run_example: no sizes given");
    if (!(config.tol > 0.0 && config.tol < 1.0))
        throw std::invalid_argument("run_example: tol must lie in (0, 1)");
    std::vector<ResultRow> rows;
    for (int n : config.sizes) {
        if (n < 1) throw std::invalid_argument("run_example: sizes must be positive");
        switch (config.example) {
            case 1: {
                const ToeplitzOperator op = ToeplitzOperator::build(example1_coeffs(n));
                const Preconditioner M = example1_preconditioner(n, config.precond, op);
                const Vector b = gaussian_vector(static_cast<std::size_t>(n), config.seed);
                Vector x0(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
                const SolveReport rep = solve_symmetrized(op, M, b, &x0, config.tol, config.maxit);
                ResultRow row = base_row(config, n, 0);
                row.alpha1 = row.alpha2 = 0.0;
                fill_from_report(row, rep);
                rows.push_back(std::move(row));
                break;
            }
            case 2: {
                FdeProblem prob = example2_problem(config.alpha1, config.alpha2);
                const double tau = 1.0 / std::ceil(std::pow(static_cast<double>(n), config.alpha1));
                const TimeStepSystem sys = assemble_2d(prob, n, n, tau);
                Preconditioner M = config.precond == PrecondChoice::none
                                       ? Preconditioner::identity(sys.op.size())
                                   : config.precond == PrecondChoice::abs_circulant
                                       ? build_abs_circulant(sys.op)
                                       : build_matching_preconditioner(prob, sys);
                // first time step from u0 = 0
                const Vector f = example_rhs(2, sys, prob, tau);
                Vector rhs(f.size());
                for (std::size_t i = 0; i < f.size(); ++i) rhs[i] = tau * f[i];
                const SolveReport rep = solve_symmetrized(sys.op, M, rhs, nullptr, config.tol, config.maxit);
                ResultRow row = base_row(config, n, n);
                fill_from_report(row, rep);
                rows.push_back(std::move(row));
                break;
            }
            case 3: {
                FdeProblem prob = example3_problem(config.alpha1, config.alpha2);
                const double tau = prob.T_final / (n + 1);
                const TimeStepSystem sys = assemble_2d(prob, n, n, tau);
                Preconditioner M = config.precond == PrecondChoice::none
                                       ? Preconditioner::identity(sys.op.size())
                                       : build_matching_preconditioner(prob, sys);
                const auto t0 = std::chrono::steady_clock::now();
                const MarchReport mr = march(sys, prob, M, n + 1, config.tol, config.maxit);
                ResultRow row = base_row(config, n, n);
                row.iters = mr.first_step_iterations;
                row.first_step_iters = mr.first_step_iterations;
                row.max_step_iters = mr.max_step_iterations;
                row.mean_step_iters = mr.mean_step_iterations;
                row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                row.relres = mr.steps.back().residual_history.back();
                row.converged = true;
                row.err_inf = mr.err_inf;
                rows.push_back(std::move(row));
                break;
            }
            case 4: {
                const ToeplitzOperator op = example4_operator(n, config.alpha1, config.alpha2);
                const Preconditioner M =
                    example4_preconditioner(op, n, config.alpha1, config.alpha2, config.precond);
                const Vector b = gaussian_vector(op.size(), config.seed);
                const LinearOperatorHandle A = as_operator(op);
                const SolveReport rep = config.solver == SolverChoice::pcg
                                            ? pcg(A, M, b, nullptr, config.tol, config.maxit)
                                            : solve_symmetrized(op, M, b, nullptr, config.tol, config.maxit);
                ResultRow row = base_row(config, n, n);
                fill_from_report(row, rep);
                rows.push_back(std::move(row));
                break;
            }
            case 0: {  // custom: 1D FDE system T(g) x = b
                ClosedParams cp;
                cp.alpha = config.alpha1;
                cp.nu = config.nu;
                cp.d_plus = config.d_plus;
                cp.d_minus = config.d_minus;
                const ToeplitzOperator op =
                    ToeplitzOperator::build(fourier_coeffs_closed(ClosedSymbol::g_1d, cp, Dims{n}));
                FdeParams1D p;
                p.n = n;
                p.alpha = config.alpha1;
                p.d_plus = config.d_plus;
                p.d_minus = config.d_minus;
                p.nu = config.nu;
                Preconditioner M = config.precond == PrecondChoice::none
                                       ? Preconditioner::identity(op.size())
                                   : config.precond == PrecondChoice::abs_circulant
                                       ? build_abs_circulant(op)
                                       : build_P_1d(p);
                const Vector b = gaussian_vector(op.size(), config.seed);
                const SolveReport rep = solve_symmetrized(op, M, b, nullptr, config.tol, config.maxit);
                ResultRow row = base_row(config, n, 0);
                row.alpha2 = 0.0;
                fill_from_report(row, rep);
                rows.push_back(std::move(row));
                break;
            }
            default:
                throw std::invalid_argument("run_example: unknown example");
        }
    }
    if (!config.out_path.empty()) emit_csv(rows, config.out_path);
    return rows;
}

SpectrumResult run_spectrum(const RunConfig& config) {
    if (config.sizes.size() != 1)
        throw std::invalid_argument("run_spectrum: exactly one size expected");
    const int n = config.sizes[0];

    ToeplitzOperator op;
    bool symmetrize = true;
    Preconditioner M = Preconditioner::identity(1);
    switch (config.example) {
        case 1: {
            op = ToeplitzOperator::build(example1_coeffs(n));
            M = example1_preconditioner(n, config.precond, op);
            break;
        }
        case 2: {
            FdeProblem prob = example2_problem(config.alpha1, config.alpha2);
            const double tau = 1.0 / std::ceil(std::pow(static_cast<double>(n), config.alpha1));
            const TimeStepSystem sys = assemble_2d(prob, n, n, tau);
            op = sys.op;
            M = config.precond == PrecondChoice::none ? Preconditioner::identity(op.size())
                                                      : build_matching_preconditioner(prob, sys);
            break;
        }
        case 4: {
            op = example4_operator(n, config.alpha1, config.alpha2);
            M = example4_preconditioner(op, n, config.alpha1, config.alpha2, config.precond);
            symmetrize = false;
            break;
        }
        case 0: {
            ClosedParams cp;
            cp.alpha = config.alpha1;
            cp.nu = config.nu;
            cp.d_plus = config.d_plus;
            cp.d_minus = config.d_minus;
            op = ToeplitzOperator::build(fourier_coeffs_closed(ClosedSymbol::g_1d, cp, Dims{n}));
            if (config.precond == PrecondChoice::none) {
                M = Preconditioner::identity(op.size());
            } else {
                FdeParams1D p;
                p.n = n;
                p.alpha = config.alpha1;
                p.d_plus = config.d_plus;
                p.d_minus = config.d_minus;
                p.nu = config.nu;
                M = build_P_1d(p);
            }
            break;
        }
        default:
            throw std::invalid_argument("run_spectrum: supported examples are 1, 2, 4, custom");
    }
    const std::size_t N = op.size();
    if (N > 4096) throw std::invalid_argument("run_spectrum: N(n) must be <= 4096");

    // Columns of M^{-1/2} (Y) T M^{-1/2} via the fast apply paths.
    const bool identity_precond = config.precond == PrecondChoice::none;
    DenseMatrix S(N);
    Vector e(N, 0.0), t1(N), t2(N);
    // For tau/circulant preconditioners M^{-1/2} needs eigenvalue square roots;
    // reuse apply_inverse of a half-power clone.
    Preconditioner Mhalf = M;
    if (!identity_precond) {
        if (M.kind() == Preconditioner::Kind::tau) {
            TauOperator half;
            half.dims = op.dims();
            half.eigs = M.eigenvalues();
            for (double& v : half.eigs) v = std::sqrt(v);
            Mhalf = Preconditioner::from_tau(std::move(half));
        } else {
            std::vector<double> eg = M.eigenvalues();
            for (double& v : eg) v = std::sqrt(v);
            Mhalf = Preconditioner::from_circulant(op.dims(), std::move(eg));
        }
    }
    for (std::size_t j = 0; j < N; ++j) {
        e.assign(N, 0.0);
        e[j] = 1.0;
        if (identity_precond) {
            op.matvec(e, t2);
        } else {
            Mhalf.apply_inverse(e, t1);
            op.matvec(t1, t2);
        }
        if (symmetrize) flip_inplace(t2);
        if (!identity_precond) {
            t1 = Mhalf.apply_inverse(t2);
            t2 = t1;
        }
        for (std::size_t i = 0; i < N; ++i) S.at(i, j) = t2[i];
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            const double v = 0.5 * (S.at(i, j) + S.at(j, i));
            S.at(i, j) = S.at(j, i) = v;
        }

    SpectrumResult result;
    result.eigenvalues = sym_eigs(S);
    result.outlier_count = cluster_count(result.eigenvalues, config.centers, config.eps);
    result.fraction = static_cast<double>(result.outlier_count) / static_cast<double>(N);
    if (!config.out_path.empty()) {
        std::ofstream out(config.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("run_spectrum: cannot open " + config.out_path);
        out << "index,eigenvalue\n";
        char buf[64];
        for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
            auto r = std::to_chars(buf, buf + sizeof(buf), result.eigenvalues[i]);
            out << i << ',' << std::string_view(buf, r.ptr - buf) << '\n';
        }
    }
    return result;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

}  // namespace

std::string csv_string(const std::vector<ResultRow>& rows) {
    std::string out = "example,n1,n2,alpha1,alpha2,precond,solver,iters,seconds,relres,err_inf\n";
    for (const ResultRow& r : rows) {
        out += std::to_string(r.example);
        out += ',';
        out += std::to_string(r.n1);
        out += ',';
        if (r.n2 > 0) out += std::to_string(r.n2);
        out += ',';
        out += format_double(r.alpha1);
        out += ',';
        out += format_double(r.alpha2);
        out += ',';
        out += r.precond;
        out += ',';
        out += r.solver;
        out += ',';
        out += std::to_string(r.iters);
        out += ',';
        out += format_double(r.seconds);
        out += ',';
        out += format_double(r.relres);
        out += ',';
        if (r.err_inf) out += format_double(*r.err_inf);
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    const std::string s = csv_string(rows);
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

}  // namespace tauprec
