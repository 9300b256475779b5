#include "tauprec/krylov.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace tauprec {

namespace {

double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

LinearOperatorHandle as_operator(const ToeplitzOperator& op) {
    return {op.size(), [&op](const Vector& x, Vector& y) { op.matvec(x, y); }};
}

LinearOperatorHandle symmetrized_operator(const ToeplitzOperator& op) {
    return {op.size(), [&op](const Vector& x, Vector& y) {
                op.matvec(x, y);
                flip_inplace(y);
            }};
}

SolveReport minres(const LinearOperatorHandle& A, const Preconditioner& M, const Vector& b,
                   const Vector* x0, double tol, int maxit) {
    const auto t_start = Clock::now();
    const std::size_t n = b.size();
    SolveReport rep;
    rep.solution = x0 ? *x0 : Vector(n, 0.0);
    Vector& x = rep.solution;

    Vector r0(n), tmp(n);
    A.apply(x, tmp);
    for (std::size_t i = 0; i < n; ++i) r0[i] = b[i] - tmp[i];
    const double nb = norm2(b);
    const double denom = nb > 0.0 ? nb : 1.0;
    rep.residual_history.push_back(norm2(r0) / denom);
    if (rep.residual_history.back() <= tol) {
        rep.converged = true;
        rep.wall_seconds = seconds_since(t_start);
        return rep;
    }

    // Paige-Saunders recurrences on the correction system A d = r0, d0 = 0.
    Vector r1 = r0, r2 = r0;
    Vector y = M.apply_inverse(r1);
    double beta1 = dot(r1, y);
    if (beta1 < 0.0) throw std::runtime_error("minres: preconditioner is not positive definite");
    beta1 = std::sqrt(beta1);
    if (beta1 == 0.0) {  // r0 = 0 handled above; M^{-1} r0 = 0 means breakdown
        rep.converged = true;
        rep.wall_seconds = seconds_since(t_start);
        return rep;
    }
    rep.precond_residual_history.push_back(beta1);

    double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0, phibar = beta1;
    double cs = -1.0, sn = 0.0;
    Vector w(n, 0.0), w2(n, 0.0), w1(n), v(n), d(n, 0.0);

    for (int it = 1; it <= maxit; ++it) {
        const double s = 1.0 / beta;
        for (std::size_t i = 0; i < n; ++i) v[i] = s * y[i];
        A.apply(v, y);
        if (it >= 2)
            for (std::size_t i = 0; i < n; ++i) y[i] -= (beta / oldb) * r1[i];
        const double alfa = dot(v, y);
        for (std::size_t i = 0; i < n; ++i) y[i] -= (alfa / beta) * r2[i];
        r1 = r2;
        r2 = y;
        y = M.apply_inverse(r2);
        oldb = beta;
        beta = dot(r2, y);
        if (beta < 0.0) throw std::runtime_error("minres: preconditioner is not positive definite");
        beta = std::sqrt(beta);

        const double oldeps = epsln;
        const double delta = cs * dbar + sn * alfa;
        const double gbar = sn * dbar - cs * alfa;
        epsln = sn * beta;
        dbar = -cs * beta;
        double gamma = std::sqrt(gbar * gbar + beta * beta);
        if (gamma == 0.0) gamma = 1e-300;  // breakdown guard
        cs = gbar / gamma;
        sn = beta / gamma;
        const double phi = cs * phibar;
        phibar = sn * phibar;

        w1 = w2;
        w2 = w;
        for (std::size_t i = 0; i < n; ++i)
            w[i] = (v[i] - oldeps * w1[i] - delta * w2[i]) / gamma;
        for (std::size_t i = 0; i < n; ++i) d[i] += phi * w[i];

        rep.precond_residual_history.push_back(phibar);
        // true residual of the original system (extra matvec)
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + d[i];
        Vector ax(n);
        A.apply(tmp, ax);
        double rn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ri = b[i] - ax[i];
            rn += ri * ri;
        }
        rep.residual_history.push_back(std::sqrt(rn) / denom);
        rep.iterations = it;
        if (rep.residual_history.back() <= tol) {
            rep.converged = true;
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) x[i] += d[i];
    rep.wall_seconds = seconds_since(t_start);
    return rep;
}

SolveReport pcg(const LinearOperatorHandle& A, const Preconditioner& M, const Vector& b,
                const Vector* x0, double tol, int maxit) {
    const auto t_start = Clock::now();
    const std::size_t n = b.size();
    SolveReport rep;
    rep.solution = x0 ? *x0 : Vector(n, 0.0);
    Vector& x = rep.solution;

    Vector r(n), tmp(n);
    A.apply(x, tmp);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - tmp[i];
    const double nb = norm2(b);
    const double denom = nb > 0.0 ? nb : 1.0;
    rep.residual_history.push_back(norm2(r) / denom);
    rep.precond_residual_history.push_back(rep.residual_history.back());
    if (rep.residual_history.back() <= tol) {
        rep.converged = true;
        rep.wall_seconds = seconds_since(t_start);
        return rep;
    }

    Vector z = M.apply_inverse(r);
    Vector p = z, q(n);
    double rz = dot(r, z);
    for (int it = 1; it <= maxit; ++it) {
        A.apply(p, q);
        const double pq = dot(p, q);
        if (pq <= 0.0)
            throw std::runtime_error("pcg: negative curvature, operator is not positive definite");
        const double alpha = rz / pq;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
        }
        A.apply(x, tmp);
        double rn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ri = b[i] - tmp[i];
            rn += ri * ri;
        }
        rep.residual_history.push_back(std::sqrt(rn) / denom);
        rep.precond_residual_history.push_back(norm2(r) / denom);
        rep.iterations = it;
        if (rep.residual_history.back() <= tol) {
            rep.converged = true;
            break;
        }
        z = M.apply_inverse(r);
        const double rz_new = dot(r, z);
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + (rz_new / rz) * p[i];
        rz = rz_new;
    }
    rep.wall_seconds = seconds_since(t_start);
    return rep;
}

SolveReport solve_symmetrized(const ToeplitzOperator& T, const Preconditioner& M, const Vector& b,
                              const Vector* x0, double tol, int maxit) {
    const LinearOperatorHandle A = symmetrized_operator(T);
    const Vector yb = flip(b);
    return minres(A, M, yb, x0, tol, maxit);
}

}  // namespace tauprec
