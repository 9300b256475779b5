#include <stdexcept>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tauprec/toeplitz.hpp"

using namespace tauprec;

TEST_CASE("constant symbol 1 gives the identity operator") {
    CoeffTensor c(Dims{5});
    c.at({0}) = 1.0;
    const auto op = ToeplitzOperator::build(c);
    std::mt19937_64 rng(1);
    const Vector x = oracle::random_vector(5, rng);
    const Vector y = op.matvec(x);
    CHECK(oracle::max_abs_diff(x, y) <= 1e-14);
    CHECK(op.symmetric());
}

TEST_CASE("tridiagonal stencil sums") {
    ClosedParams p;
    const auto op = ToeplitzOperator::build(
        fourier_coeffs_closed(ClosedSymbol::laplacian, p, Dims{8}));
    const Vector ones(8, 1.0);
    const Vector y = op.matvec(ones);
    for (std::size_t i = 1; i + 1 < 8; ++i) CHECK(y[i] == doctest::Approx(0.0));
    CHECK(y[0] == doctest::Approx(1.0));
    CHECK(y[7] == doctest::Approx(1.0));
}

TEST_CASE("matvec equals the dense oracle") {
    std::mt19937_64 rng(23);
    SUBCASE("1 level, n = 13") {
        const CoeffTensor c = oracle::random_coeffs(Dims{13}, rng);
        const auto op = ToeplitzOperator::build(c);
        const Vector x = oracle::random_vector(13, rng);
        const Vector want = oracle::dense_matvec(c, x);
        CHECK(oracle::max_abs_diff(op.matvec(x), want) <= 1e-12 * oracle::norm2(want));
    }
    SUBCASE("2 levels, n = (9, 7)") {
        const CoeffTensor c = oracle::random_coeffs(Dims{9, 7}, rng);
        const auto op = ToeplitzOperator::build(c);
        const Vector x = oracle::random_vector(63, rng);
        const Vector want = oracle::dense_matvec(c, x);
        CHECK(oracle::max_abs_diff(op.matvec(x), want) <= 1e-12 * oracle::norm2(want));
    }
    SUBCASE("50 random cases, up to 2 levels") {
        std::uniform_int_distribution<int> usize(1, 16);
        std::uniform_int_distribution<int> ulev(1, 2);
        for (int rep = 0; rep < 50; ++rep) {
            Dims dims;
            for (int l = 0; l < ulev(rng); ++l) dims.push_back(usize(rng));
            const CoeffTensor c = oracle::random_coeffs(dims, rng);
            const auto op = ToeplitzOperator::build(c);
            const Vector x = oracle::random_vector(op.size(), rng);
            const Vector want = oracle::dense_matvec(c, x);
            CAPTURE(rep);
            CHECK(oracle::max_abs_diff(op.matvec(x), want) <=
                  1e-12 * std::max(1.0, oracle::norm2(want)));
        }
    }
}

TEST_CASE("matvec rejects wrong lengths") {
    CoeffTensor c(Dims{4});
    c.at({0}) = 1.0;
    const auto op = ToeplitzOperator::build(c);
    CHECK_THROWS_AS(op.matvec(Vector(5, 0.0)), std::invalid_argument);
}

TEST_CASE("transpose reflects coefficients") {
    std::mt19937_64 rng(29);
    const CoeffTensor c = oracle::random_coeffs(Dims{8}, rng);
    const auto op = ToeplitzOperator::build(c);
    const auto opT = op.transpose();
    const oracle::Mat D = oracle::dense_toeplitz(c);
    const Vector x = oracle::random_vector(8, rng);
    const Vector want = oracle::matvec(oracle::transpose(D), x);
    CHECK(oracle::max_abs_diff(opT.matvec(x), want) <= 1e-12 * oracle::norm2(want));
    // twice = original
    const auto opTT = opT.transpose();
    const Vector y1 = op.matvec(x), y2 = opTT.matvec(x);
    CHECK(oracle::max_abs_diff(y1, y2) <= 1e-13);
    // symmetric operator is its own transpose
    const CoeffTensor cs = oracle::random_coeffs(Dims{8}, rng, /*symmetric=*/true);
    const auto sop = ToeplitzOperator::build(cs);
    CHECK(sop.symmetric());
    CHECK(oracle::max_abs_diff(sop.transpose().matvec(x), sop.matvec(x)) <= 1e-13);
}

TEST_CASE("transpose of T(v_alpha) equals the reflected-symbol operator") {
    ClosedParams p;
    p.alpha = 1.5;
    const auto op = ToeplitzOperator::build(
        fourier_coeffs_closed(ClosedSymbol::v_alpha, p, Dims{10}));
    // reflected coefficients built by hand
    CoeffTensor refl(Dims{10});
    for (int j = -9; j < 10; ++j) refl.at({j}) = op.coeff_at({-j});
    const auto op2 = ToeplitzOperator::build(refl);
    std::mt19937_64 rng(3);
    const Vector x = oracle::random_vector(10, rng);
    CHECK(oracle::max_abs_diff(op.transpose().matvec(x), op2.matvec(x)) <= 1e-13);
}

TEST_CASE("flip is an isometric involution sending e1 to eN") {
    std::mt19937_64 rng(31);
    const Vector x = oracle::random_vector(17, rng);
    CHECK(oracle::max_abs_diff(flip(flip(x)), x) == 0.0);
    CHECK(oracle::norm2(flip(x)) == doctest::Approx(oracle::norm2(x)).epsilon(1e-15));
    Vector e1(9, 0.0);
    e1[0] = 1.0;
    const Vector eN = flip(e1);
    CHECK(eN[8] == 1.0);
    CHECK(oracle::norm2(eN) == doctest::Approx(1.0));
}

TEST_CASE("Y T is symmetric for a nonsymmetric 2-level operator") {
    std::mt19937_64 rng(37);
    const CoeffTensor c = oracle::random_coeffs(Dims{7, 5}, rng);
    oracle::Mat D = oracle::dense_toeplitz(c);
    const std::size_t N = D.n;
    oracle::Mat YD(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) YD(i, j) = D(N - 1 - i, j);
    CHECK(oracle::max_abs_diff(YD, oracle::transpose(YD)) <= 1e-14);
}

TEST_CASE("kron_identity_embed") {
    ClosedParams p;
    const auto lap3 = ToeplitzOperator::build(
        fourier_coeffs_closed(ClosedSymbol::laplacian, p, Dims{3}));
    SUBCASE("k = 1 leaves the operator unchanged") {
        const auto same = kron_identity_embed(lap3, 0, Dims{3});
        std::mt19937_64 rng(5);
        const Vector x = oracle::random_vector(3, rng);
        CHECK(oracle::max_abs_diff(same.matvec(x), lap3.matvec(x)) <= 1e-14);
    }
    SUBCASE("I2 x T3 is block diagonal with tridiagonal blocks") {
        const auto emb = kron_identity_embed(lap3, 0, Dims{3, 2});
        const auto D = oracle::dense_toeplitz([&] {
            CoeffTensor c(Dims{3, 2});
            for (int q = -2; q <= 2; ++q) c.at({q, 0}) = lap3.coeff_at({q});
            return c;
        }());
        const oracle::Mat want = oracle::kron(oracle::identity(2), [&] {
            oracle::Mat T(3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    T(i, j) = (i == j) ? 2.0 : (std::abs(static_cast<int>(i) - static_cast<int>(j)) == 1 ? -1.0 : 0.0);
            return T;
        }());
        CHECK(oracle::max_abs_diff(D, want) == 0.0);
        std::mt19937_64 rng(9);
        const Vector x = oracle::random_vector(6, rng);
        CHECK(oracle::max_abs_diff(emb.matvec(x), oracle::matvec(want, x)) <= 1e-13);
    }
    SUBCASE("matvec against a dense Kronecker oracle at (6, 5)") {
        std::mt19937_64 rng(41);
        const CoeffTensor c1 = oracle::random_coeffs(Dims{6}, rng);
        const auto op1 = ToeplitzOperator::build(c1);
        const auto emb = kron_identity_embed(op1, 0, Dims{6, 5});
        const oracle::Mat want = oracle::kron(oracle::identity(5), oracle::dense_toeplitz(c1));
        const Vector x = oracle::random_vector(30, rng);
        CHECK(oracle::max_abs_diff(emb.matvec(x), oracle::matvec(want, x)) <=
              1e-12 * oracle::norm2(x));
        // embed on level 2: T x I
        const auto emb2 = kron_identity_embed(op1, 1, Dims{5, 6});
        const oracle::Mat want2 = oracle::kron(oracle::dense_toeplitz(c1), oracle::identity(5));
        CHECK(oracle::max_abs_diff(emb2.matvec(x), oracle::matvec(want2, x)) <=
              1e-12 * oracle::norm2(x));
    }
}

TEST_CASE("2D FDE operator equals I + I x T(w1) + T(w2) x I") {
    const int n = 8;
    ClosedParams p;
    p.tau_time = 1e-3;
    p.ax1 = {1.3, 2.0, 0.7, 1.0 / (n + 1)};
    p.ax2 = {1.8, 0.4, 1.1, 1.0 / (n + 1)};
    const auto g2 = fourier_coeffs_closed(ClosedSymbol::g_2d, p, Dims{n, n});
    const oracle::Mat D = oracle::dense_toeplitz(g2);

    auto axis_line = [&](const FdeAxis& ax) {
        ClosedParams q;
        q.alpha = ax.alpha;
        q.nu = 0.0;
        q.d_plus = ax.d_plus * p.tau_time / std::pow(ax.h, ax.alpha);
        q.d_minus = ax.d_minus * p.tau_time / std::pow(ax.h, ax.alpha);
        return fourier_coeffs_closed(ClosedSymbol::g_1d, q, Dims{n});
    };
    const oracle::Mat W1 = oracle::dense_toeplitz(axis_line(p.ax1));
    const oracle::Mat W2 = oracle::dense_toeplitz(axis_line(p.ax2));
    oracle::Mat want = oracle::identity(static_cast<std::size_t>(n) * n);
    const oracle::Mat k1 = oracle::kron(oracle::identity(n), W1);
    const oracle::Mat k2 = oracle::kron(W2, oracle::identity(n));
    for (std::size_t i = 0; i < want.a.size(); ++i) want.a[i] += k1.a[i] + k2.a[i];
    CHECK(oracle::max_abs_diff(D, want) <= 1e-14);
}

TEST_CASE("empty dims are rejected") {
    CoeffTensor c;
    CHECK_THROWS_AS(ToeplitzOperator::build(c), std::invalid_argument);
}
