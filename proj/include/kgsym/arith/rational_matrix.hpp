#pragma once

#include "kgsym/arith/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kgsym {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
            for (long v : row) data_.emplace_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector multiply(const RationalVector& v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::multiply: dimension mismatch");
        RationalVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const Rational& a = (*this)(r, c);
                if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
            }
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of Gauss-Jordan elimination: the reduced row-echelon form and its pivot columns.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
///
/// Pivot choice is the leftmost column with a nonzero entry at or below the
/// current row, taking the first such row. Only nonzero entries of the pivot
/// row are propagated, which keeps the sparse determining systems cheap.
inline RowEchelon row_reduce(RationalMatrix m)
{
    RowEchelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t row = 0;
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(row, pivot);

        support.clear();
        for (std::size_t c = col; c < cols; ++c)
            if (!m(row, c).is_zero()) support.push_back(c);
        const Rational inv = 1 / m(row, col);
        for (std::size_t c : support) m(row, c) *= inv;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational factor = m(r, col);
            for (std::size_t c : support) m(r, c) -= factor * m(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

/// Exact kernel basis in RREF convention.
///
/// One vector per free column, in ascending free-column order; each has a 1 in
/// its own free column and 0 in every other free column.
inline std::vector<RationalVector> nullspace(const RationalMatrix& m)
{
    const RowEchelon ech = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
            const Rational& a = ech.reduced(r, free);
            if (!a.is_zero()) v[ech.pivot_cols[r]] = -a;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace kgsym
