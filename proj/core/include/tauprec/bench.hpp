#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tauprec/fde.hpp"
#include "tauprec/krylov.hpp"
#include "tauprec/spectra.hpp"

namespace tauprec {

/// Deterministic Gaussian generator: splitmix64 state update, Box-Muller pairs.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform();   // (0, 1)
    double normal();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class PrecondChoice { symbol_tau, natural_tau, abs_circulant, strang_circulant, none };
enum class SolverChoice { minres, pcg };

struct RunConfig {
    int example = 1;               // 1..4, 0 = custom 1D FDE
    std::vector<int> sizes;        // n per run (square grids for 2D examples)
    double alpha1 = 1.5;
    double alpha2 = 1.5;
    double d_plus = 1.0;           // custom example only
    double d_minus = 0.2;
    double nu = 1.0;
    PrecondChoice precond = PrecondChoice::symbol_tau;
    SolverChoice solver = SolverChoice::minres;
    double tol = 1e-8;
    int maxit = 1000;
    std::uint64_t seed = 20240101;
    std::string out_path;
    // spectrum subcommand
    std::vector<double> centers = {1.0, -1.0};
    double eps = 0.3;
};

struct ResultRow {
    int example = 0;
    int n1 = 0;
    int n2 = 0;  // 0 for 1-level runs
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    std::string precond;
    std::string solver;
    int iters = 0;
    double seconds = 0.0;
    double relres = 0.0;
    std::optional<double> err_inf;
    bool converged = false;
    // march-only extras (not part of the CSV schema)
    int first_step_iters = 0;
    int max_step_iters = 0;
    double mean_step_iters = 0.0;
};

std::string to_string(PrecondChoice p);
std::string to_string(SolverChoice s);
bool precond_from_string(const std::string& s, PrecondChoice& out);

/// Run one benchmark example over config.sizes. Example 1 solves the
/// symmetrized 1D Toeplitz problem with a seeded Gaussian right-hand side and
/// x0 = (1,..,1)/sqrt(n); examples 2 and 3 assemble the fractional diffusion
/// systems (first step for 2, full march for 3); example 4 runs PCG on
/// T(p_alpha). `custom` (0) solves the 1D FDE system T(g) x = b directly.
std::vector<ResultRow> run_example(const RunConfig& config);

struct SpectrumResult {
    std::vector<double> eigenvalues;      // sorted
    std::vector<int> outliers;            // per (centers, eps): joint count
    int outlier_count = 0;
    double fraction = 0.0;
};

/// Dense spectrum of the (preconditioned, symmetrized where applicable)
/// operator for the configured example; writes one sorted eigenvalue per line
/// to config.out_path when set. Guarded to N <= 4096.
SpectrumResult run_spectrum(const RunConfig& config);

/// CSV with header example,n1,n2,alpha1,alpha2,precond,solver,iters,seconds,relres,err_inf.
/// Numbers are shortest round-trip decimals, UTF-8, LF line endings.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::string csv_string(const std::vector<ResultRow>& rows);

}  // namespace tauprec
