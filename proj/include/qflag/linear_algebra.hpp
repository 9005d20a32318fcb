#ifndef QFLAG_LINEAR_ALGEBRA_HPP
#define QFLAG_LINEAR_ALGEBRA_HPP

#include "qflag/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qflag {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        RationalMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    /// Exact inverse, or nullopt when singular.
    std::optional<RationalMatrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        const std::size_t n = rows_;
        RationalMatrix a = *this;
        RationalMatrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && a(pivot, col) == 0) ++pivot;
            if (pivot == n) return std::nullopt;
            if (pivot != col) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(pivot, j), a(col, j));
                    std::swap(inv(pivot, j), inv(col, j));
                }
            }
            Rational p = a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) /= p;
                inv(col, j) /= p;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || a(r, col) == 0) continue;
                Rational f = a(r, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// One solution x of A x = b, or nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("right-hand side size mismatch");
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
            std::swap(b[p], b[r]);
        }
        Rational piv = a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) /= piv;
        b[r] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = b[k];
    return x;
}

}  // namespace qflag

#endif  // QFLAG_LINEAR_ALGEBRA_HPP
