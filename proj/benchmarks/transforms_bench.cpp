#include <benchmark/benchmark.h>

#include <random>

#include "tauprec/fde.hpp"
#include "tauprec/krylov.hpp"
#include "tauprec/preconditioners.hpp"
#include "tauprec/tau.hpp"
#include "tauprec/toeplitz.hpp"

using namespace tauprec;

namespace {

Vector random_vector(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    Vector x(n);
    for (double& v : x) v = dist(rng);
    return x;
}

void BM_fft_pow2(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    FftPlan plan(n);
    std::vector<cplx> buf(n, cplx(1.0, -0.5));
    for (auto _ : state) {
        plan.forward(buf.data());
        benchmark::DoNotOptimize(buf.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_fft_pow2)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_toeplitz_matvec_1d(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ClosedParams p;
    p.alpha = 1.5;
    p.nu = 1.0;
    p.d_plus = 1.0;
    p.d_minus = 0.2;
    const auto op = ToeplitzOperator::build(fourier_coeffs_closed(ClosedSymbol::g_1d, p, Dims{n}));
    const Vector x = random_vector(op.size(), 1);
    Vector y(op.size());
    for (auto _ : state) {
        op.matvec(x, y);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_toeplitz_matvec_1d)->Arg(4095)->Arg(16383);

void BM_toeplitz_matvec_2d(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FdeProblem prob = example2_problem(1.5, 1.5);
    const double tau = 1.0 / std::ceil(std::pow(static_cast<double>(n), 1.5));
    const TimeStepSystem sys = assemble_2d(prob, n, n, tau);
    const Vector x = random_vector(sys.op.size(), 2);
    Vector y(sys.op.size());
    for (auto _ : state) {
        sys.op.matvec(x, y);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_toeplitz_matvec_2d)->Arg(127)->Arg(255)->Arg(511);

void BM_dst_apply_2d(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SineTransformPlan plan(Dims{n, n});
    Vector x = random_vector(plan.size(), 3);
    for (auto _ : state) {
        plan.apply(x);
        benchmark::DoNotOptimize(x.data());
    }
}
BENCHMARK(BM_dst_apply_2d)->Arg(127)->Arg(255)->Arg(511);

void BM_precond_solve_2d(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FdeProblem prob = example2_problem(1.5, 1.5);
    const double tau = 1.0 / std::ceil(std::pow(static_cast<double>(n), 1.5));
    const TimeStepSystem sys = assemble_2d(prob, n, n, tau);
    const Preconditioner M = build_matching_preconditioner(prob, sys);
    const Vector r = random_vector(M.size(), 4);
    Vector z(M.size());
    for (auto _ : state) {
        M.apply_inverse(r, z);
        benchmark::DoNotOptimize(z.data());
    }
}
BENCHMARK(BM_precond_solve_2d)->Arg(127)->Arg(255)->Arg(511);

void BM_minres_example2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FdeProblem prob = example2_problem(1.5, 1.5);
    const double tau = 1.0 / std::ceil(std::pow(static_cast<double>(n), 1.5));
    const TimeStepSystem sys = assemble_2d(prob, n, n, tau);
    const Preconditioner M = build_matching_preconditioner(prob, sys);
    const Vector f = example_rhs(2, sys, prob, tau);
    Vector rhs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) rhs[i] = tau * f[i];
    for (auto _ : state) {
        const SolveReport rep = solve_symmetrized(sys.op, M, rhs, nullptr, 1e-8, 1000);
        benchmark::DoNotOptimize(rep.iterations);
    }
}
BENCHMARK(BM_minres_example2)->Arg(127)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
