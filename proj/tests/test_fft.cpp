#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "tauprec/fft.hpp"

using tauprec::cplx;
using tauprec::FftPlan;

namespace {

std::vector<cplx> naive_dft(const std::vector<cplx>& x, bool inverse) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            out[k] += x[j] * std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                                 static_cast<double>(j * k) / static_cast<double>(n));
    if (inverse)
        for (auto& z : out) z /= static_cast<double>(n);
    return out;
}

std::vector<cplx> random_signal(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    std::vector<cplx> x(n);
    for (auto& z : x) z = cplx(dist(rng), dist(rng));
    return x;
}

}  // namespace

TEST_CASE("forward transform matches the naive DFT") {
    std::mt19937_64 rng(7);
    for (std::size_t n : {1, 2, 4, 8, 16, 37, 100, 128, 255, 256}) {
        auto x = random_signal(n, rng);
        const auto want = naive_dft(x, false);
        FftPlan plan(n);
        plan.forward(x.data());
        double scale = 0.0, err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            scale = std::max(scale, std::abs(want[i]));
            err = std::max(err, std::abs(x[i] - want[i]));
        }
        CAPTURE(n);
        CHECK(err <= 1e-12 * std::max(scale, 1.0));
    }
}

TEST_CASE("inverse undoes forward") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {3, 8, 41, 64, 129}) {
        auto x = random_signal(n, rng);
        const auto orig = x;
        FftPlan plan(n);
        plan.forward(x.data());
        plan.inverse(x.data());
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(x[i] - orig[i]));
        CHECK(err <= 1e-13);
    }
}

TEST_CASE("2D transform is the separable naive DFT") {
    std::mt19937_64 rng(3);
    const std::vector<std::size_t> dims = {8, 6};
    auto a = random_signal(dims[0] * dims[1], rng);
    std::vector<cplx> want = a;
    for (std::size_t r = 0; r < dims[1]; ++r) {
        std::vector<cplx> row(want.begin() + static_cast<long>(r * dims[0]),
                              want.begin() + static_cast<long>((r + 1) * dims[0]));
        row = naive_dft(row, false);
        for (std::size_t i = 0; i < dims[0]; ++i) want[r * dims[0] + i] = row[i];
    }
    for (std::size_t c = 0; c < dims[0]; ++c) {
        std::vector<cplx> col(dims[1]);
        for (std::size_t r = 0; r < dims[1]; ++r) col[r] = want[r * dims[0] + c];
        col = naive_dft(col, false);
        for (std::size_t r = 0; r < dims[1]; ++r) want[r * dims[0] + c] = col[r];
    }
    std::vector<FftPlan> plans;
    plans.emplace_back(dims[0]);
    plans.emplace_back(dims[1]);
    tauprec::fft_nd(a, dims, plans, false);
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - want[i]));
    CHECK(err <= 1e-12);
}

TEST_CASE("next_pow2") {
    CHECK(FftPlan::next_pow2(1) == 1);
    CHECK(FftPlan::next_pow2(2) == 2);
    CHECK(FftPlan::next_pow2(3) == 4);
    CHECK(FftPlan::next_pow2(8190) == 8192);
}
