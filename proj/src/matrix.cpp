#include "interstatis/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace interstatis {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : n_rows(rows), n_cols(cols), cells(std::move(data)) {
    if (cells.size() != rows * cols)
        throw std::invalid_argument("real matrix data size does not match its dimensions");
    for (double v : cells)
        if (!std::isfinite(v))
            throw std::invalid_argument("real matrix entries must be finite");
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

IntervalMatrix::IntervalMatrix(std::size_t rows, std::size_t cols, std::vector<Interval> data)
    : n_rows(rows), n_cols(cols), cells(std::move(data)) {
    if (cells.size() != rows * cols)
        throw std::invalid_argument("interval matrix data size does not match its dimensions");
}

IntervalMatrix matmul(const IntervalMatrix& a, const IntervalMatrix& b) {
    if (a.n_cols != b.n_rows)
        throw std::invalid_argument("interval matmul dimension mismatch");
    IntervalMatrix out(a.n_rows, b.n_cols);
    for (std::size_t i = 0; i < a.n_rows; ++i) {
        for (std::size_t j = 0; j < b.n_cols; ++j) {
            Interval acc(0.0);
            for (std::size_t k = 0; k < a.n_cols; ++k)
                acc = add(acc, mul(a(i, k), b(k, j)));
            out(i, j) = acc;
        }
    }
    return out;
}

IntervalMatrix transpose(const IntervalMatrix& a) {
    IntervalMatrix out(a.n_cols, a.n_rows);
    for (std::size_t i = 0; i < a.n_rows; ++i)
        for (std::size_t j = 0; j < a.n_cols; ++j)
            out(j, i) = a(i, j);
    return out;
}

IntervalMatrix vectorize(const IntervalMatrix& w) {
    if (w.n_rows != w.n_cols)
        throw std::invalid_argument("vectorize expects a square matrix");
    IntervalMatrix out(w.n_rows * w.n_cols, 1);
    for (std::size_t i = 0; i < w.cells.size(); ++i)
        out.cells[i] = w.cells[i];
    return out;
}

IntervalMatrix devectorize(const IntervalMatrix& column, std::size_t n) {
    if (column.n_cols != 1 || column.n_rows != n * n)
        throw std::invalid_argument("devectorize expects an n^2 x 1 column");
    IntervalMatrix out(n, n);
    out.cells = column.cells;
    return out;
}

Interval column_mean(const std::vector<Interval>& column) {
    if (column.empty())
        throw std::invalid_argument("column mean of an empty column");
    double lo = 0.0;
    double hi = 0.0;
    for (const Interval& v : column) {
        lo += v.lo;
        hi += v.hi;
    }
    const double inv = 1.0 / static_cast<double>(column.size());
    return Interval(lo * inv, hi * inv);
}

IntervalMatrix center_columns(const IntervalMatrix& x) {
    if (x.n_rows == 0)
        throw std::invalid_argument("cannot center an empty matrix");
    IntervalMatrix out(x.n_rows, x.n_cols);
    std::vector<Interval> col(x.n_rows);
    for (std::size_t j = 0; j < x.n_cols; ++j) {
        for (std::size_t i = 0; i < x.n_rows; ++i) col[i] = x(i, j);
        const Interval mean = column_mean(col);
        for (std::size_t i = 0; i < x.n_rows; ++i) out(i, j) = sub(x(i, j), mean);
    }
    return out;
}

Interval trace_inner_product(const IntervalMatrix& wi, const IntervalMatrix& wj) {
    if (wi.n_rows != wi.n_cols || wj.n_rows != wj.n_cols || wi.n_rows != wj.n_rows)
        throw std::invalid_argument("trace inner product expects equal square matrices");
    // trace(wi x wj) without forming the product: diagonal entry i is
    // sum_k wi(i,k) * wj(k,i), summed over i; identical term order to the
    // vectorized dot product <vec wi, vec wj^T>.
    Interval acc(0.0);
    for (std::size_t i = 0; i < wi.n_rows; ++i)
        for (std::size_t k = 0; k < wi.n_cols; ++k)
            acc = add(acc, mul(wi(i, k), wj(k, i)));
    return acc;
}

RealMatrix centers_matrix(const IntervalMatrix& x) {
    RealMatrix out(x.n_rows, x.n_cols);
    for (std::size_t i = 0; i < x.cells.size(); ++i)
        out.cells[i] = midpoint(x.cells[i]);
    return out;
}

RealMatrix radius_matrix(const IntervalMatrix& x) {
    RealMatrix out(x.n_rows, x.n_cols);
    for (std::size_t i = 0; i < x.cells.size(); ++i)
        out.cells[i] = radius(x.cells[i]);
    return out;
}

namespace {

template <typename M>
M hconcat_impl(const std::vector<M>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("hconcat of an empty block list");
    std::size_t cols = 0;
    for (const M& b : blocks) {
        if (b.n_rows != blocks.front().n_rows)
            throw std::invalid_argument("hconcat blocks must share the row count");
        cols += b.n_cols;
    }
    M out(blocks.front().n_rows, cols);
    std::size_t offset = 0;
    for (const M& b : blocks) {
        for (std::size_t i = 0; i < b.n_rows; ++i)
            for (std::size_t j = 0; j < b.n_cols; ++j)
                out(i, offset + j) = b(i, j);
        offset += b.n_cols;
    }
    return out;
}

template <typename M>
M vstack_impl(const std::vector<M>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("vstack of an empty block list");
    std::size_t rows = 0;
    for (const M& b : blocks) {
        if (b.n_cols != blocks.front().n_cols)
            throw std::invalid_argument("vstack blocks must share the column count");
        rows += b.n_rows;
    }
    M out(rows, blocks.front().n_cols);
    std::size_t offset = 0;
    for (const M& b : blocks) {
        for (std::size_t i = 0; i < b.n_rows; ++i)
            for (std::size_t j = 0; j < b.n_cols; ++j)
                out(offset + i, j) = b(i, j);
        offset += b.n_rows;
    }
    return out;
}

} // namespace

IntervalMatrix hconcat(const std::vector<IntervalMatrix>& blocks) { return hconcat_impl(blocks); }
IntervalMatrix vstack(const std::vector<IntervalMatrix>& blocks) { return vstack_impl(blocks); }

IntervalMatrix scale_block(double beta, const IntervalMatrix& x) {
    IntervalMatrix out(x.n_rows, x.n_cols);
    for (std::size_t i = 0; i < x.cells.size(); ++i)
        out.cells[i] = scalar_mul(beta, x.cells[i]);
    return out;
}

IntervalMatrix embed_classic(const RealMatrix& a) {
    IntervalMatrix out(a.n_rows, a.n_cols);
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        out.cells[i] = Interval(a.cells[i]);
    return out;
}

bool is_equivalent(const RealMatrix& a, const IntervalMatrix& y, double tol) {
    if (a.n_rows != y.n_rows || a.n_cols != y.n_cols)
        throw std::invalid_argument("matrix equivalence shape mismatch");
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (std::abs(a.cells[i] - y.cells[i].lo) > tol) return false;
        if (std::abs(a.cells[i] - y.cells[i].hi) > tol) return false;
    }
    return true;
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    if (a.n_cols != b.n_rows)
        throw std::invalid_argument("real matmul dimension mismatch");
    RealMatrix out(a.n_rows, b.n_cols);
    for (std::size_t i = 0; i < a.n_rows; ++i)
        for (std::size_t j = 0; j < b.n_cols; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < a.n_cols; ++k)
                acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

RealMatrix transpose(const RealMatrix& a) {
    RealMatrix out(a.n_cols, a.n_rows);
    for (std::size_t i = 0; i < a.n_rows; ++i)
        for (std::size_t j = 0; j < a.n_cols; ++j)
            out(j, i) = a(i, j);
    return out;
}

RealMatrix vectorize(const RealMatrix& w) {
    if (w.n_rows != w.n_cols)
        throw std::invalid_argument("vectorize expects a square matrix");
    RealMatrix out(w.n_rows * w.n_cols, 1);
    out.cells = w.cells;
    return out;
}

RealMatrix center_columns(const RealMatrix& x) {
    if (x.n_rows == 0)
        throw std::invalid_argument("cannot center an empty matrix");
    RealMatrix out(x.n_rows, x.n_cols);
    for (std::size_t j = 0; j < x.n_cols; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < x.n_rows; ++i) mean += x(i, j);
        mean /= static_cast<double>(x.n_rows);
        for (std::size_t i = 0; i < x.n_rows; ++i) out(i, j) = x(i, j) - mean;
    }
    return out;
}

RealMatrix hconcat(const std::vector<RealMatrix>& blocks) { return hconcat_impl(blocks); }
RealMatrix vstack(const std::vector<RealMatrix>& blocks) { return vstack_impl(blocks); }

RealMatrix scale_block(double beta, const RealMatrix& x) {
    RealMatrix out(x.n_rows, x.n_cols);
    for (std::size_t i = 0; i < x.cells.size(); ++i)
        out.cells[i] = beta * x.cells[i];
    return out;
}

} // namespace interstatis
