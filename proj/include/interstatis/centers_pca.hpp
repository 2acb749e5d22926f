#pragma once

#include <cstddef>
#include <vector>

#include "interstatis/matrix.hpp"
#include "interstatis/pca.hpp"

namespace interstatis {

// Centers PCA of an interval triplet: a classic weighted PCA of the interval
// midpoints, plus interval row components (the exact range of each row's
// hypercube projected on every axis) and interval variable coordinates (the
// interval transition formula).
struct IntervalPcaResult {
    std::vector<double> eigenvalues;
    RealMatrix axes;
    double first_eigenvalue = 0.0;
    std::vector<double> first_eigenvector; // unit, in the metric-weighted basis
    IntervalMatrix row_components;         // n x n_axes
    IntervalMatrix var_coords;             // p x n_axes
    std::size_t rank = 0;                  // axes >= rank carry zero eigenvalues
};

// n_axes <= n_cols. Axes whose eigenvalue is clamped to zero contribute no
// signal: their row components and variable coordinates are emitted as [0,0].
IntervalPcaResult cpca(const IntervalMatrix& x, const std::vector<double>& metric_diag,
                       const std::vector<double>& weights_diag, std::size_t n_axes);

// Test oracle for the row-component closed form: the min/max of the metric-
// weighted projection over all 2^p vertices of one row's hypercube.
// Independent of the closed form; limited to p <= 20 columns.
Interval vertex_projection_oracle(const IntervalMatrix& x, const RealMatrix& axes,
                                  const std::vector<double>& metric_diag, std::size_t row,
                                  std::size_t axis);

} // namespace interstatis
