#pragma once

#include <cstddef>
#include <vector>

#include "interstatis/matrix.hpp"

namespace interstatis {

// Full spectrum of a real symmetric matrix. Eigenvalues descend; column j of
// `vectors` is the unit eigenvector of values[j]. Sign convention: the entry
// of largest absolute value in each eigenvector is positive (ties resolved
// toward the lowest index), so repeated runs are bitwise identical.
struct SymEigen {
    std::vector<double> values;
    RealMatrix vectors;
};

// Cyclic Jacobi eigendecomposition. Sweeps until the off-diagonal Frobenius
// norm drops to tol * ||a||_F; fails after 100 sweeps.
SymEigen jacobi_eigen(const RealMatrix& a, double tol = 1e-13);

// Weighted PCA of the triplet (X, M, D): X is n x p with row weights
// diag(weights) summing to 1 and a positive diagonal column metric
// diag(metric). Diagonalizes V M (V = X^T D X) through the symmetric
// M^{1/2} V M^{1/2}.
struct PcaResult {
    std::vector<double> eigenvalues; // descending, clamped at 1e-12 * lambda_max
    RealMatrix axes;                 // p x p, column k = M-orthonormal principal axis
    RealMatrix row_scores;           // n x p, X M axes
    RealMatrix var_coords;           // p x p, sqrt(lambda_k) * axes(j,k) * sqrt(m_j)
    std::size_t rank = 0;            // axes at index >= rank have clamped (zero) eigenvalues
};

PcaResult pca_triplet(const RealMatrix& x, const std::vector<double>& metric_diag,
                      const std::vector<double>& weights_diag);

// Population standard deviation of each column of x under the given row
// weights; the 1/sigma^2 standardization metric is built from this.
std::vector<double> weighted_column_stddev(const RealMatrix& x,
                                           const std::vector<double>& weights_diag);

// Euclidean-unit first eigenvector of the symmetrized operator
// M^{1/2} V M^{1/2} (the table-weight vector of the interstructure).
// Entries negative by rounding noise (|u_j| <= 1e-12) are clamped to 0.
std::vector<double> unit_first_eigenvector(const PcaResult& pca,
                                           const std::vector<double>& metric_diag);

} // namespace interstatis
