#pragma once

#include <optional>
#include <vector>

#include "hopfk/algebra.hpp"
#include "hopfk/scalar.hpp"
#include "hopfk/tensor.hpp"

namespace hopfk {

// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}
    static Matrix identity(std::size_t n);
    // Column j holds the image of basis vector j (1 -> 1 maps only).
    static Matrix from_map(const StructureMap& f);
    StructureMap to_map() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> operator*(const std::vector<Scalar>& x) const;
    bool operator==(const Matrix& o) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

// One exact solution of A x = b, or nullopt if inconsistent. Pivots are the
// first nonzero entry in column order; free variables are set to zero.
std::optional<std::vector<Scalar>> solve_linear(const Matrix& A, const std::vector<Scalar>& b);
std::optional<SparseVec> solve_linear(const Matrix& A, const SparseVec& b);
std::size_t rank(const Matrix& A);
std::optional<Matrix> inverse(const Matrix& A);
// Inverse of a bijective 1 -> 1 map. Throws NotInvertible.
StructureMap inverse_map(const StructureMap& f);

// v with u v = v u = 1: solves u v = 1, then checks v u = 1. Throws
// NotInvertible.
SparseVec invert_element(const AlgebraData& alg, const SparseVec& u);

}  // namespace hopfk
