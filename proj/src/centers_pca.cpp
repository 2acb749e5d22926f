#include "interstatis/centers_pca.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace interstatis {

IntervalPcaResult cpca(const IntervalMatrix& x, const std::vector<double>& metric_diag,
                       const std::vector<double>& weights_diag, std::size_t n_axes) {
    if (n_axes > x.n_cols)
        throw std::invalid_argument("cpca axis count exceeds the column count");

    const RealMatrix centers = centers_matrix(x);
    const PcaResult pca = pca_triplet(centers, metric_diag, weights_diag);

    const std::size_t n = x.n_rows;
    const std::size_t p = x.n_cols;

    IntervalPcaResult out;
    out.eigenvalues = pca.eigenvalues;
    out.axes = pca.axes;
    out.rank = pca.rank;
    out.first_eigenvalue = pca.eigenvalues.front();
    out.first_eigenvector = unit_first_eigenvector(pca, metric_diag);

    // Row components: the exact range of the linear form sum_j t_j c_j over
    // t_j in the cell, c_j = m_j * axis_j. Equals the vertex min/max without
    // enumerating the hypercube.
    out.row_components = IntervalMatrix(n, n_axes);
    std::vector<double> coef(p);
    for (std::size_t k = 0; k < n_axes; ++k) {
        if (k >= pca.rank) continue; // zero-variance axis, components stay [0,0]
        for (std::size_t j = 0; j < p; ++j) coef[j] = metric_diag[j] * pca.axes(j, k);
        for (std::size_t i = 0; i < n; ++i) {
            double lo = 0.0;
            double hi = 0.0;
            for (std::size_t j = 0; j < p; ++j) {
                const double a = x(i, j).lo * coef[j];
                const double b = x(i, j).hi * coef[j];
                lo += std::min(a, b);
                hi += std::max(a, b);
            }
            out.row_components(i, k) = Interval(lo, hi);
        }
    }

    // Variable coordinates by the interval transition formula:
    // sqrt(m_j)/sqrt(lambda_k) * sum_i w_i * (x_ij x [s_ik, s_ik]).
    out.var_coords = IntervalMatrix(p, n_axes);
    for (std::size_t k = 0; k < n_axes; ++k) {
        if (k >= pca.rank) continue;
        const double root = std::sqrt(pca.eigenvalues[k]);
        for (std::size_t j = 0; j < p; ++j) {
            Interval acc(0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const Interval score(pca.row_scores(i, k));
                acc = add(acc, scalar_mul(weights_diag[i], mul(x(i, j), score)));
            }
            out.var_coords(j, k) = scalar_mul(std::sqrt(metric_diag[j]) / root, acc);
        }
    }
    return out;
}

Interval vertex_projection_oracle(const IntervalMatrix& x, const RealMatrix& axes,
                                  const std::vector<double>& metric_diag, std::size_t row,
                                  std::size_t axis) {
    const std::size_t p = x.n_cols;
    if (p > 20)
        throw std::invalid_argument("vertex oracle limited to 20 columns (2^p enumeration)");
    if (row >= x.n_rows || axis >= axes.n_cols || metric_diag.size() != p)
        throw std::invalid_argument("vertex oracle index out of range");

    double lo = 0.0;
    double hi = 0.0;
    const std::uint64_t top = std::uint64_t{1} << p;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        double proj = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            const Interval& cell = x(row, j);
            const double v = (mask >> j) & 1 ? cell.hi : cell.lo;
            proj += v * metric_diag[j] * axes(j, axis);
        }
        if (mask == 0) {
            lo = hi = proj;
        } else {
            lo = std::min(lo, proj);
            hi = std::max(hi, proj);
        }
    }
    return Interval(lo, hi);
}

} // namespace interstatis
