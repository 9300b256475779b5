#pragma once

#include <functional>
#include <vector>

#include "tauprec/symbols.hpp"
#include "tauprec/toeplitz.hpp"

namespace tauprec {

/// Square dense matrix, row-major. Oracle-scale only: construction is guarded
/// to n <= 4096.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t size);

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    bool is_symmetric(double tol = 1e-10) const;
};

struct SpectrumReport {
    std::vector<double> values;  // sorted ascending
    double min = 0.0, max = 0.0;
};

DenseMatrix dense_from_toeplitz(const ToeplitzOperator& op);
DenseMatrix dense_identity(std::size_t n);
DenseMatrix dense_multiply(const DenseMatrix& A, const DenseMatrix& B);

/// All eigenvalues of a symmetric matrix, sorted ascending. Householder
/// tridiagonalization followed by implicit-shift QL; eigenvectors (columns of
/// `vectors`) are accumulated on request.
std::vector<double> sym_eigs(const DenseMatrix& A, DenseMatrix* vectors = nullptr);

/// Number of eigenvalues farther than eps from every center.
int cluster_count(const std::vector<double>& eigs, const std::vector<double>& centers,
                  double eps);

/// Sorted-sample distance between the eigenvalues of Y_n T_n(f) and the
/// antisymmetric extension phi_{|f|} (|f(theta)| on [0, 2pi], -|f(-theta)| on
/// [-2pi, 0)), using exactly N midpoint samples so multiplicities line up.
/// 1-level symbols only; `absf` gets theta already wrapped to [-pi, pi).
double distribution_distance(const std::vector<double>& eigs,
                             const std::function<double(double)>& absf);

/// Eigenvalue range of M^{-1/2} B M^{-1/2} for symmetric B and SPD M.
std::pair<double, double> check_rayleigh_bounds(const DenseMatrix& B, const DenseMatrix& M);

/// Dense M^{-1/2} B M^{-1/2} (building block of check_rayleigh_bounds).
DenseMatrix symmetrized_pencil(const DenseMatrix& B, const DenseMatrix& M);

}  // namespace tauprec
