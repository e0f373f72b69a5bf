#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace a3res {

using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over Q, sized for the handful-of-rows systems the
/// quiver code builds.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix&) const = default;

    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }
    /// Basis of the right kernel, one vector per column of the result.
    RationalMatrix nullspace() const;
    /// Throws std::domain_error when singular or not square.
    RationalMatrix inverse() const;

private:
    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> reduce();

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace a3res
