#include "interstatis/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "interstatis/errors.hpp"

namespace interstatis {

namespace {

double frobenius_norm(const RealMatrix& a) {
    double s = 0.0;
    for (double v : a.cells) s += v * v;
    return std::sqrt(s);
}

double offdiag_norm(const RealMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.n_rows; ++i)
        for (std::size_t j = 0; j < a.n_cols; ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// Largest-absolute-entry-positive; ties go to the lowest index.
void fix_column_sign(RealMatrix& vecs, std::size_t k) {
    std::size_t idx = 0;
    double best = std::abs(vecs(0, k));
    for (std::size_t i = 1; i < vecs.n_rows; ++i) {
        const double m = std::abs(vecs(i, k));
        if (m > best) {
            best = m;
            idx = i;
        }
    }
    if (vecs(idx, k) < 0.0)
        for (std::size_t i = 0; i < vecs.n_rows; ++i) vecs(i, k) = -vecs(i, k);
}

} // namespace

SymEigen jacobi_eigen(const RealMatrix& a, double tol) {
    if (a.n_rows != a.n_cols)
        throw std::invalid_argument("jacobi eigensolver expects a square matrix");
    const std::size_t n = a.n_rows;
    if (n == 0)
        throw std::invalid_argument("jacobi eigensolver expects a non-empty matrix");

    double amax = 0.0;
    for (double v : a.cells) amax = std::max(amax, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-10 * std::max(1.0, amax))
                throw std::invalid_argument("jacobi eigensolver expects a symmetric matrix");

    RealMatrix w = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            w(i, j) = w(j, i) = 0.5 * (a(i, j) + a(j, i));
    RealMatrix v = RealMatrix::identity(n);

    const double target = tol * frobenius_norm(a);
    bool converged = offdiag_norm(w) <= target;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = w(p, q);
                if (apq == 0.0) continue;
                const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                w(p, p) -= t * apq;
                w(q, q) += t * apq;
                w(p, q) = w(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double g = w(i, p);
                    const double h = w(i, q);
                    w(i, p) = w(p, i) = g - s * (h + tau * g);
                    w(i, q) = w(q, i) = h + s * (g - tau * h);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double g = v(i, p);
                    const double h = v(i, q);
                    v(i, p) = c * g - s * h;
                    v(i, q) = s * g + c * h;
                }
            }
        }
        converged = offdiag_norm(w) <= target;
    }
    if (!converged)
        throw numeric_error("jacobi eigensolver did not converge within 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w(i, i) > w(j, j); });

    SymEigen out;
    out.values.resize(n);
    out.vectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = w(order[k], order[k]);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += v(i, order[k]) * v(i, order[k]);
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]) / norm;
        fix_column_sign(out.vectors, k);
    }
    return out;
}

namespace {

// Replaces the eigenvector columns of clamped (zero) eigenvalues with a
// deterministic orthonormal basis of their span: Gram-Schmidt over the
// projections of canonical basis vectors taken in index order. The arbitrary
// basis Jacobi leaves in a degenerate cluster is not stable under input
// perturbations; this one is.
void canonicalize_null_columns(RealMatrix& q, std::size_t rank) {
    const std::size_t p = q.n_rows;
    if (rank >= p) return;
    std::size_t accepted = 0;
    const std::size_t wanted = p - rank;
    std::vector<double> vbuf(p);
    for (std::size_t j = 0; j < p && accepted < wanted; ++j) {
        for (std::size_t i = 0; i < p; ++i) vbuf[i] = (i == j) ? 1.0 : 0.0;
        // project out retained axes and already accepted null vectors, twice
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < rank + accepted; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < p; ++i) dot += q(i, k) * vbuf[i];
                for (std::size_t i = 0; i < p; ++i) vbuf[i] -= dot * q(i, k);
            }
        }
        double norm = 0.0;
        for (double x : vbuf) norm += x * x;
        norm = std::sqrt(norm);
        if (norm <= 0.1) continue;
        const std::size_t col = rank + accepted;
        for (std::size_t i = 0; i < p; ++i) q(i, col) = vbuf[i] / norm;
        fix_column_sign(q, col);
        ++accepted;
    }
    // Sigma of projections over all canonical vectors equals the null
    // dimension, so acceptance always completes for the sizes used here.
    if (accepted < wanted)
        throw numeric_error("failed to build a canonical null-space basis");
}

} // namespace

PcaResult pca_triplet(const RealMatrix& x, const std::vector<double>& metric_diag,
                      const std::vector<double>& weights_diag) {
    const std::size_t n = x.n_rows;
    const std::size_t p = x.n_cols;
    if (metric_diag.size() != p)
        throw std::invalid_argument("metric diagonal length must equal the column count");
    if (weights_diag.size() != n)
        throw std::invalid_argument("weights diagonal length must equal the row count");
    for (double m : metric_diag)
        if (!(m > 0.0)) throw std::invalid_argument("metric diagonal must be positive");
    double wsum = 0.0;
    for (double wgt : weights_diag) {
        if (!(wgt > 0.0)) throw std::invalid_argument("row weights must be positive");
        wsum += wgt;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("row weights must sum to 1");

    // V = X^T D X, then S = M^{1/2} V M^{1/2}, symmetric by construction.
    RealMatrix vmat(p, p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t j2 = j; j2 < p; ++j2) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                acc += weights_diag[i] * x(i, j) * x(i, j2);
            vmat(j, j2) = vmat(j2, j) = acc;
        }
    }
    std::vector<double> sm(p);
    for (std::size_t j = 0; j < p; ++j) sm[j] = std::sqrt(metric_diag[j]);
    RealMatrix s(p, p);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t j2 = j; j2 < p; ++j2)
            s(j, j2) = s(j2, j) = sm[j] * vmat(j, j2) * sm[j2];

    SymEigen eig = jacobi_eigen(s);

    PcaResult out;
    out.eigenvalues = eig.values;
    const double lambda_max = std::max(out.eigenvalues.front(), 0.0);
    for (double& lambda : out.eigenvalues)
        if (lambda < 1e-12 * lambda_max || lambda_max == 0.0) lambda = 0.0;
    out.rank = 0;
    while (out.rank < p && out.eigenvalues[out.rank] > 0.0) ++out.rank;

    RealMatrix q = eig.vectors;
    canonicalize_null_columns(q, out.rank);

    out.axes = RealMatrix(p, p);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t k = 0; k < p; ++k)
            out.axes(j, k) = q(j, k) / sm[j];

    out.row_scores = RealMatrix(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < p; ++k) {
            double acc = 0.0;
            for (std::size_t j = 0; j < p; ++j)
                acc += x(i, j) * metric_diag[j] * out.axes(j, k);
            out.row_scores(i, k) = acc;
        }

    out.var_coords = RealMatrix(p, p);
    for (std::size_t k = 0; k < p; ++k) {
        const double root = std::sqrt(out.eigenvalues[k]);
        for (std::size_t j = 0; j < p; ++j)
            out.var_coords(j, k) = root * q(j, k);
    }
    return out;
}

std::vector<double> weighted_column_stddev(const RealMatrix& x,
                                           const std::vector<double>& weights_diag) {
    if (weights_diag.size() != x.n_rows)
        throw std::invalid_argument("weights length must equal the row count");
    std::vector<double> out(x.n_cols);
    for (std::size_t j = 0; j < x.n_cols; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < x.n_rows; ++i) mean += weights_diag[i] * x(i, j);
        double var = 0.0;
        for (std::size_t i = 0; i < x.n_rows; ++i) {
            const double d = x(i, j) - mean;
            var += weights_diag[i] * d * d;
        }
        out[j] = std::sqrt(var);
    }
    return out;
}

std::vector<double> unit_first_eigenvector(const PcaResult& pca,
                                           const std::vector<double>& metric_diag) {
    const std::size_t p = pca.axes.n_rows;
    if (metric_diag.size() != p)
        throw std::invalid_argument("metric diagonal length must equal the axis count");
    std::vector<double> u(p);
    double norm = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
        u[j] = std::sqrt(metric_diag[j]) * pca.axes(j, 0);
        norm += u[j] * u[j];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0)
        throw numeric_error("first eigenvector has zero norm");
    for (double& uj : u) {
        uj /= norm;
        if (uj < 0.0 && uj >= -1e-12) uj = 0.0;
    }
    return u;
}

} // namespace interstatis
