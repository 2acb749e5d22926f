#pragma once

#include <cstddef>
#include <vector>

#include "interstatis/interval.hpp"

namespace interstatis {

// Dense row-major real matrix.
struct RealMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> cells; // row-major, n_rows * n_cols

    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols)
        : n_rows(rows), n_cols(cols), cells(rows * cols, 0.0) {}
    RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    double& operator()(std::size_t i, std::size_t j) { return cells[i * n_cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return cells[i * n_cols + j]; }

    static RealMatrix identity(std::size_t n);
};

// Dense row-major grid of intervals; every cell satisfies the Interval
// invariants by construction.
struct IntervalMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<Interval> cells;

    IntervalMatrix() = default;
    IntervalMatrix(std::size_t rows, std::size_t cols)
        : n_rows(rows), n_cols(cols), cells(rows * cols) {}
    IntervalMatrix(std::size_t rows, std::size_t cols, std::vector<Interval> data);

    Interval& operator()(std::size_t i, std::size_t j) { return cells[i * n_cols + j]; }
    const Interval& operator()(std::size_t i, std::size_t j) const { return cells[i * n_cols + j]; }
};

// ---- interval matrix operations ----

// Dot product analog with interval multiplication; sums run in ascending
// index order so results are reproducible bit for bit.
IntervalMatrix matmul(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix transpose(const IntervalMatrix& a);

// Rows of a square matrix concatenated in row order into an n^2 x 1 column.
IntervalMatrix vectorize(const IntervalMatrix& w);
IntervalMatrix devectorize(const IntervalMatrix& column, std::size_t n);

// Endpoint-wise arithmetic mean of a non-empty interval column.
Interval column_mean(const std::vector<Interval>& column);

// Subtracts each column's interval mean from its cells (interval
// subtraction, which widens cells by the mean's width).
IntervalMatrix center_columns(const IntervalMatrix& x);

// trace(wi x wj) under interval arithmetic, both matrices n x n.
Interval trace_inner_product(const IntervalMatrix& wi, const IntervalMatrix& wj);

RealMatrix centers_matrix(const IntervalMatrix& x);
RealMatrix radius_matrix(const IntervalMatrix& x);

IntervalMatrix hconcat(const std::vector<IntervalMatrix>& blocks);
IntervalMatrix vstack(const std::vector<IntervalMatrix>& blocks);
IntervalMatrix scale_block(double beta, const IntervalMatrix& x);

// Degenerate embedding of a classic matrix, and the matrix-equivalence test
// (x_ij = lo_ij = hi_ij within tol).
IntervalMatrix embed_classic(const RealMatrix& a);
bool is_equivalent(const RealMatrix& a, const IntervalMatrix& y, double tol);

// ---- real matrix counterparts used by the classic path ----

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);
RealMatrix vectorize(const RealMatrix& w);
RealMatrix center_columns(const RealMatrix& x);
RealMatrix hconcat(const std::vector<RealMatrix>& blocks);
RealMatrix vstack(const std::vector<RealMatrix>& blocks);
RealMatrix scale_block(double beta, const RealMatrix& x);

} // namespace interstatis
