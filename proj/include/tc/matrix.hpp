#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact scalar ring and exact rank/det/kernel.
 *
 * rank_det_kernel uses fraction-free (Bareiss) elimination for matrices
 * over Q(t) after clearing row denominators, and ordinary Gauss-Jordan
 * elimination over Q.  Kernel vectors exactly annihilate the matrix.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tc/rational.hpp"
#include "tc/rational_function.hpp"

namespace tc {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
        return a;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> entries_;
};

template <class T>
struct LinAlgResult {
    int rank = 0;
    std::optional<T> det;                  // present only for square input
    std::vector<std::vector<T>> kernel;    // basis of the right null space
};

LinAlgResult<Rational> rank_det_kernel(const Matrix<Rational>& m);
LinAlgResult<RationalFunction> rank_det_kernel(const Matrix<RationalFunction>& m);

/// Exact rank of an integer matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<Int>> m);

}  // namespace tc
