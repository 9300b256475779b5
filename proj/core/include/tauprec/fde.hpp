#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tauprec/krylov.hpp"
#include "tauprec/preconditioners.hpp"
#include "tauprec/toeplitz.hpp"

namespace tauprec {

enum class Stepper { backward_euler, crank_nicolson };

/// Space-fractional diffusion problem on a hyperrectangle with homogeneous
/// Dirichlet data: u_t = sum_i (d_{i,+} D+^a_i + d_{i,-} D-^a_i) u + f.
struct FdeProblem {
    int k = 1;
    double a[2] = {0.0, 0.0};
    double b[2] = {1.0, 1.0};
    double T_final = 1.0;
    double alpha[2] = {1.5, 1.5};
    double d_plus[2] = {0.0, 0.0};
    double d_minus[2] = {0.0, 0.0};
    std::function<double(const double*, double)> source;       // f(x, t)
    std::function<double(const double*)> initial;              // u0(x)
    std::function<double(const double*, double)> exact;        // optional
    Scheme scheme = Scheme::grunwald1;
    Stepper stepper = Stepper::crank_nicolson;
};

/// One time-step linear system with the constant-coefficient operator and the
/// data needed to build each step's right-hand side.
struct TimeStepSystem {
    ToeplitzOperator op;                          // system matrix
    std::optional<ToeplitzOperator> rhs_op;       // Crank-Nicolson right factor
    Dims dims;
    double tau_time = 0.0;
    double nu = 0.0;                              // 1D: h^alpha / tau
    double h[2] = {0.0, 0.0};
    double source_scale = 0.0;                    // h^alpha (1D) or tau (2D)
    std::vector<double> grid[2];                  // interior nodes per axis
};

/// nu I + d+ T(v_a) + d- T(v_a)^T with nu = h^alpha/tau (backward Euler).
TimeStepSystem assemble_1d(const FdeProblem& problem, int n, double tau_time);

/// 2-level system; backward Euler gives I + I x A_1 + A_2 x I, Crank-Nicolson
/// halves the spatial part and carries the matching right-factor operator.
TimeStepSystem assemble_2d(const FdeProblem& problem, int n1, int n2, double tau_time);

/// Weighted-shifted Grunwald weights: w_0 = (a/2) g_0,
/// w_k = (a/2) g_k + ((2-a)/2) g_{k-1}.
std::vector<double> wsgd_coeffs(double alpha, std::size_t count);

/// Matching preconditioner for one assembled system (P_n from the |g| recipe;
/// 2D scales by the Crank-Nicolson half step automatically).
Preconditioner build_matching_preconditioner(const FdeProblem& problem, const TimeStepSystem& sys);

struct MarchReport {
    Vector solution;
    std::vector<SolveReport> steps;
    std::optional<double> err_inf;   // vs exact solution at T_final
    int first_step_iterations = 0;
    int max_step_iterations = 0;
    double mean_step_iterations = 0.0;
};

/// Advance from u0 to T_final in `steps` solves. Each step is solved with
/// symmetrized MINRES (warm-started from the previous step's solution) unless
/// the right-hand side vanishes, which short-circuits to the zero solution.
MarchReport march(const TimeStepSystem& sys, const FdeProblem& problem,
                  const Preconditioner& M, int steps, double tol, int maxit);

/// Interior-grid samples of the benchmark source terms.
/// id 2: f = 100 sin(10x) cos(y) + sin(10t) x y on (0,1)^2;
/// id 3: the manufactured source whose exact solution is
///       e^t x1^2 (2-x1)^2 x2^2 (2-x2)^2 on (0,2)^2.
Vector example_rhs(int example_id, const TimeStepSystem& sys, const FdeProblem& problem, double t);

FdeProblem example2_problem(double alpha1, double alpha2);
FdeProblem example3_problem(double alpha1, double alpha2);

}  // namespace tauprec
