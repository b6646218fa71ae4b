#include "flagrep/matrix.hpp"

#include <utility>

namespace flagrep {

namespace {

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            const Rational f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

}  // namespace

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
    std::vector<Rational> minors;
    minors.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        RationalMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        minors.push_back(determinant(std::move(sub)));
    }
    return minors;
}

}  // namespace flagrep
