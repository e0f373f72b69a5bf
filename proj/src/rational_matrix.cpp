#include "a3res/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace a3res {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes do not compose");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += x * rhs(k, c);
        }
    return out;
}

std::vector<std::size_t> RationalMatrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pick = row;
        while (pick < rows_ && (*this)(pick, col) == 0) ++pick;
        if (pick == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(row, c), (*this)(pick, c));
        const Rational lead = (*this)(row, col);
        for (std::size_t c = 0; c < cols_; ++c) (*this)(row, c) /= lead;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || (*this)(r, col) == 0) continue;
            const Rational factor = (*this)(r, col);
            for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) -= factor * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return copy.reduce().size();
}

RationalMatrix RationalMatrix::nullspace() const {
    RationalMatrix rref = *this;
    const auto pivots = rref.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    RationalMatrix basis(cols_, cols_ - pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -rref(i, free);
        ++k;
    }
    return basis;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = aug.reduce();
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

}  // namespace a3res
