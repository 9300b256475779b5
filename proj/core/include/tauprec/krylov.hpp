#pragma once

#include <functional>
#include <vector>

#include "tauprec/preconditioners.hpp"
#include "tauprec/toeplitz.hpp"

namespace tauprec {

/// Matvec callback contract: y = A x with fixed dimension.
struct LinearOperatorHandle {
    std::size_t size = 0;
    std::function<void(const Vector&, Vector&)> apply;
};

LinearOperatorHandle as_operator(const ToeplitzOperator& op);
/// x -> flip(T x), the symmetrized (Hankel) operator Y_n T_n.
LinearOperatorHandle symmetrized_operator(const ToeplitzOperator& op);

struct SolveReport {
    int iterations = 0;
    std::vector<double> residual_history;          // true relative residuals, length iterations + 1
    std::vector<double> precond_residual_history;  // recurrence estimates (M^{-1}-norm for MINRES)
    bool converged = false;
    double wall_seconds = 0.0;
    Vector solution;
};

/// Preconditioned MINRES for symmetric A and SPD M. Stops on the true
/// relative residual ||b - A x||/||b|| recomputed each iteration (one extra
/// matvec); the recurrence residual is tracked separately and is monotone.
SolveReport minres(const LinearOperatorHandle& A, const Preconditioner& M, const Vector& b,
                   const Vector* x0, double tol, int maxit);

/// Preconditioned CG for SPD A and M, same stopping rule. Throws on detected
/// negative curvature (p^T A p <= 0).
SolveReport pcg(const LinearOperatorHandle& A, const Preconditioner& M, const Vector& b,
                const Vector* x0, double tol, int maxit);

/// Solve T u = b for real-coefficient Toeplitz T by running MINRES on the
/// symmetrized system (Y T) u = Y b.
SolveReport solve_symmetrized(const ToeplitzOperator& T, const Preconditioner& M, const Vector& b,
                              const Vector* x0, double tol, int maxit);

}  // namespace tauprec
