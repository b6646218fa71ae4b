#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flagrep/rational.hpp"

namespace flagrep {

// Dense row-major matrix. Only what the root-system code needs.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<T>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

// Exact inverse by Gauss-Jordan elimination; nullopt if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

}  // namespace flagrep
