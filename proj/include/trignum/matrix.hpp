/*
   Copyright 2026 The trignum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trignum/integer.hpp"

namespace trignum {

/// Dense row-major matrix. Only what the triangular arrays of this library
/// need: products, transposes, exact comparison.
template <class R>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shapes do not match");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const R& xik = x(i, k);
                if (trignum::is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    /// Leading top-left block.
    Matrix block(std::size_t n) const {
        Matrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = (*this)(i, j);
        return b;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// First (row, col) in row-major order where the two same-shaped matrices differ.
template <class R>
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix<R>& x, const Matrix<R>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix shapes do not match");
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (!(x(i, j) == y(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace trignum
