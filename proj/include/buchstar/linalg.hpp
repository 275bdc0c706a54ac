/**
 * Exact linear algebra over a coefficient field: rank, null space, span
 * dimension and span membership.
 *
 * Integer matrices (boundary maps) are stored column-sparse.  rank() picks
 * dense elimination when at least a quarter of the entries are non-zero and
 * sparse elimination otherwise; the two paths are exposed separately so that
 * they can be checked against each other.
 */
#ifndef BUCHSTAR_LINALG_HPP
#define BUCHSTAR_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace buchstar {

/* ------------------------------------------------------------------------ //
 *                                 MATRICES                                 //
 * ------------------------------------------------------------------------ */

/// Row-major dense matrix of field elements.
template <typename T>
class DenseMatrix
{
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out[i] = (*this)(i, j);
        return out;
    }

    DenseMatrix transpose() const
    {
        DenseMatrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.resize(data_.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Rows selected (in the given order) from this matrix.
    DenseMatrix select_rows(const std::vector<std::size_t>& which) const
    {
        DenseMatrix out;
        out.rows_ = which.size();
        out.cols_ = cols_;
        out.data_.reserve(which.size() * cols_);
        for (auto i : which)
            for (std::size_t j = 0; j < cols_; ++j)
                out.data_.push_back((*this)(i, j));
        return out;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Sparse integer matrix stored by columns; each column is sorted by row.
class SparseIntMatrix
{
public:
    using Entry = std::pair<std::size_t, std::int64_t>;
    using Column = std::vector<Entry>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    /// Builds from a dense row-major list of rows.
    static SparseIntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows)
    {
        std::size_t ncols = rows.empty() ? 0 : rows[0].size();
        SparseIntMatrix m(rows.size(), ncols);
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (rows[i].size() != ncols)
                throw ShapeError("ragged rows in matrix literal");
            for (std::size_t j = 0; j < ncols; ++j)
                if (rows[i][j] != 0)
                    m.columns_[j].emplace_back(i, rows[i][j]);
        }
        return m;
    }

    static SparseIntMatrix identity(std::size_t n)
    {
        SparseIntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.columns_[i].emplace_back(i, 1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const Column& column(std::size_t j) const { return columns_[j]; }

    /// Sets column j; entries must be sorted by row and in range.
    void set_column(std::size_t j, Column col)
    {
        for (const auto& [r, v] : col)
            if (r >= rows_)
                throw ShapeError("row index out of range");
        columns_[j] = std::move(col);
    }

    std::int64_t at(std::size_t i, std::size_t j) const
    {
        for (const auto& [r, v] : columns_[j])
            if (r == i)
                return v;
        return 0;
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& c : columns_)
            n += c.size();
        return n;
    }

    double density() const
    {
        const double cells = static_cast<double>(rows_) * static_cast<double>(cols());
        return cells == 0 ? 0.0 : static_cast<double>(nonzeros()) / cells;
    }

    SparseIntMatrix transpose() const
    {
        SparseIntMatrix t(cols(), rows_);
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& [r, v] : columns_[j])
                t.columns_[r].emplace_back(j, v);
        return t;
    }

    /// The submatrix on the given (sorted) rows and columns, reindexed.
    SparseIntMatrix submatrix(const std::vector<std::size_t>& row_ids,
                              const std::vector<std::size_t>& col_ids) const
    {
        std::vector<std::size_t> remap(rows_, SIZE_MAX);
        for (std::size_t k = 0; k < row_ids.size(); ++k)
            remap[row_ids[k]] = k;
        SparseIntMatrix out(row_ids.size(), col_ids.size());
        for (std::size_t k = 0; k < col_ids.size(); ++k)
            for (const auto& [r, v] : columns_[col_ids[k]])
                if (remap[r] != SIZE_MAX)
                    out.columns_[k].emplace_back(remap[r], v);
        for (auto& c : out.columns_)
            std::sort(c.begin(), c.end());
        return out;
    }

    template <typename F>
    DenseMatrix<typename F::value_type> to_dense(const F& field) const
    {
        DenseMatrix<typename F::value_type> out(rows_, cols(), field.zero());
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& [r, v] : columns_[j])
                out(r, j) = field.from_int(v);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Product of two integer matrices, as a dense list of rows.
inline std::vector<std::vector<std::int64_t>> multiply(const SparseIntMatrix& a, const SparseIntMatrix& b)
{
    if (a.cols() != b.rows())
        throw ShapeError("multiply: inner dimensions differ");
    std::vector<std::vector<std::int64_t>> out(a.rows(), std::vector<std::int64_t>(b.cols(), 0));
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [k, bv] : b.column(j))
            for (const auto& [i, av] : a.column(k))
                out[i][j] += av * bv;
    return out;
}

/* ------------------------------------------------------------------------ //
 *                                ELIMINATION                               //
 * ------------------------------------------------------------------------ */

namespace detail {

/**
 * Reduces m in place to reduced row echelon form and returns the pivot
 * columns.  The pivot in each column is the first non-zero entry at or below
 * the current row.
 */
template <typename F>
std::vector<std::size_t> rref(DenseMatrix<typename F::value_type>& m, const F& field, bool reduced)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        std::size_t p = row;
        while (p < m.rows() && field.is_zero(m(p, col)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        const auto inv = field.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) = field.mul(m(row, j), inv);
        const std::size_t first = reduced ? 0 : row + 1;
        for (std::size_t i = first; i < m.rows(); ++i)
        {
            if (i == row || field.is_zero(m(i, col)))
                continue;
            const auto factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = field.sub(m(i, j), field.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename T>
using SparseVector = std::vector<std::pair<std::size_t, T>>;

/// Returns a - factor * b for sorted sparse vectors.
template <typename F>
SparseVector<typename F::value_type> axpy(const SparseVector<typename F::value_type>& a,
                                          const typename F::value_type& factor,
                                          const SparseVector<typename F::value_type>& b,
                                          const F& field)
{
    SparseVector<typename F::value_type> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end())
    {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
        {
            out.push_back(*ia++);
        }
        else if (ia == a.end() || ib->first < ia->first)
        {
            out.emplace_back(ib->first, field.neg(field.mul(factor, ib->second)));
            ++ib;
        }
        else
        {
            auto v = field.sub(ia->second, field.mul(factor, ib->second));
            if (!field.is_zero(v))
                out.emplace_back(ia->first, v);
            ++ia;
            ++ib;
        }
    }
    return out;
}

}   // namespace detail

template <typename F>
std::size_t rank_dense(DenseMatrix<typename F::value_type> m, const F& field)
{
    return detail::rref(m, field, false).size();
}

template <typename F>
std::size_t rank_dense(const SparseIntMatrix& m, const F& field)
{
    return rank_dense(m.to_dense(field), field);
}

/**
 * Column-oriented sparse elimination: each column is reduced against the
 * stored pivots, keyed by their leading (smallest) row index.
 */
template <typename F>
std::size_t rank_sparse(const SparseIntMatrix& m, const F& field)
{
    using T = typename F::value_type;
    std::map<std::size_t, detail::SparseVector<T>> pivots;
    for (std::size_t j = 0; j < m.cols(); ++j)
    {
        detail::SparseVector<T> v;
        for (const auto& [r, x] : m.column(j))
        {
            T y = field.from_int(x);
            if (!field.is_zero(y))
                v.emplace_back(r, y);
        }
        while (!v.empty())
        {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end())
            {
                // Normalize so that the leading entry is one
                const T inv = field.inv(v.front().second);
                for (auto& e : v)
                    e.second = field.mul(e.second, inv);
                pivots.emplace(v.front().first, std::move(v));
                break;
            }
            v = detail::axpy(v, v.front().second, it->second, field);
        }
    }
    return pivots.size();
}

/// Rank of an integer matrix over the given field (dense when density >= 25%).
inline std::size_t rank(const SparseIntMatrix& m, const CoefficientField& field)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    const bool dense = m.density() >= 0.25;
    return with_field(field, [&](const auto& f) -> std::size_t {
        return dense ? rank_dense(m, f) : rank_sparse(m, f);
    });
}

template <typename F>
std::size_t rank(const DenseMatrix<typename F::value_type>& m, const F& field)
{
    return rank_dense(m, field);
}

/**
 * Null-space basis of m: the columns of the result are linearly independent,
 * there are cols(m) - rank(m) of them, and m times each is zero.
 */
template <typename F>
DenseMatrix<typename F::value_type> kernel_basis(DenseMatrix<typename F::value_type> m, const F& field)
{
    const std::size_t n = m.cols();
    auto pivots = detail::rref(m, field, true);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    DenseMatrix<typename F::value_type> basis(n, n - pivots.size(), field.zero());
    std::size_t k = 0;
    for (std::size_t free = 0; free < n; ++free)
    {
        if (is_pivot[free])
            continue;
        basis(free, k) = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = field.neg(m(r, free));
        ++k;
    }
    BUCHSTAR_INVARIANT(pivots.size() + basis.cols() == n, "rank + nullity == cols");
    return basis;
}

template <typename F>
DenseMatrix<typename F::value_type> kernel_basis(const SparseIntMatrix& m, const F& field)
{
    return kernel_basis(m.to_dense(field), field);
}

/// Dimension of the span of the columns of `vectors`.
template <typename F>
std::size_t span_dim(const DenseMatrix<typename F::value_type>& vectors, const F& field)
{
    return rank_dense(vectors, field);
}

/// Whether v lies in the column span of `span`.
template <typename F>
bool contains(const DenseMatrix<typename F::value_type>& span,
              const std::vector<typename F::value_type>& v, const F& field)
{
    if (v.size() != span.rows())
        throw ShapeError("contains: vector has " + std::to_string(v.size()) + " entries, span lives in dimension "
                         + std::to_string(span.rows()));
    DenseMatrix<typename F::value_type> aug(span.rows(), span.cols() + 1, field.zero());
    for (std::size_t i = 0; i < span.rows(); ++i)
    {
        for (std::size_t j = 0; j < span.cols(); ++j)
            aug(i, j) = span(i, j);
        aug(i, span.cols()) = v[i];
    }
    return rank_dense(aug, field) == rank_dense(span, field);
}

/// M * x for a dense matrix and vector.
template <typename F>
std::vector<typename F::value_type> apply(const DenseMatrix<typename F::value_type>& m,
                                          const std::vector<typename F::value_type>& x, const F& field)
{
    if (x.size() != m.cols())
        throw ShapeError("apply: dimension mismatch");
    std::vector<typename F::value_type> out(m.rows(), field.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] = field.add(out[i], field.mul(m(i, j), x[j]));
    return out;
}

}   // namespace buchstar

#endif
