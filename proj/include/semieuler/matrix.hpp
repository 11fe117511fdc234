#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "semieuler/error.hpp"

namespace semieuler {

/// Dense row-major matrix over a scalar type T. T must provide zero_like(),
/// one_like(), is_zero() and the ring operators. Every matrix carries a zero
/// prototype so that empty and zero matrices still know their scalar context.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero.zero_like()), data_(rows * cols, zero_)
    {
    }

    static Matrix identity(std::size_t n, const T& zero)
    {
        Matrix m(n, n, zero);
        const T one = zero.one_like();
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    /// Build from nested rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& zero)
    {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c, zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c)
                throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const
    {
        if (cols_ != rhs.rows_)
            throw Error(ErrorCode::ShapeMismatch, "product of " + shape() + " and " + rhs.shape());
        Matrix out(rows_, rhs.cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a.is_zero())
                    continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const T& b = rhs(k, j);
                    if (!b.is_zero())
                        out(i, j) += a * b;
                }
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const
    {
        check_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k)
            out.data_[k] += rhs.data_[k];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const
    {
        check_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k)
            out.data_[k] -= rhs.data_[k];
        return out;
    }

    Matrix operator-() const
    {
        Matrix out = *this;
        for (auto& x : out.data_)
            x = -x;
        return out;
    }

    Matrix scaled(const T& c) const
    {
        Matrix out = *this;
        for (auto& x : out.data_)
            x = x * c;
        return out;
    }

    /// Signed copy: multiply by +1 or -1.
    Matrix signed_by(int sign) const { return sign >= 0 ? *this : -*this; }

    bool operator==(const Matrix& rhs) const
    {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix out(nr, nc, zero_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& src)
    {
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j)
                (*this)(r0 + i, c0 + j) = src(i, j);
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const T& c)
    {
        if (c.is_zero())
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(src, j).is_zero())
                (*this)(dst, j) += c * (*this)(src, j);
    }

    /// col[dst] += c * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const T& c)
    {
        if (c.is_zero())
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, src).is_zero())
                (*this)(i, dst) += c * (*this)(i, src);
    }

    void scale_row(std::size_t r, const T& c)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = (*this)(r, j) * c;
    }

    void scale_col(std::size_t c, const T& s)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, c) = (*this)(i, c) * s;
    }

    /// Copy without row r and column c (either may be npos to keep all).
    Matrix without(std::size_t r, std::size_t c) const
    {
        const std::size_t nr = r < rows_ ? rows_ - 1 : rows_;
        const std::size_t nc = c < cols_ ? cols_ - 1 : cols_;
        Matrix out(nr, nc, zero_);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == r)
                continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == c)
                    continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    /// Apply f entrywise, producing a matrix over another scalar type.
    template <typename F, typename U>
    Matrix<U> map(F&& f, const U& zero) const
    {
        Matrix<U> out(rows_, cols_, zero);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    void check_same_shape(const Matrix& rhs) const
    {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw Error(ErrorCode::ShapeMismatch, shape() + " vs " + rhs.shape());
    }

    std::size_t rows_;
    std::size_t cols_;
    T zero_;
    std::vector<T> data_;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace semieuler
