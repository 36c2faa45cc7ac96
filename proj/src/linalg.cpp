#include "hopfk/linalg.hpp"

#include "hopfk/error.hpp"

namespace hopfk {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_map(const StructureMap& f) {
    if (f.in_arity() != 1 || f.out_arity() != 1) throw HopfError(ErrorKind::SignatureMismatch, "matrix of a non 1->1 map");
    Matrix m(f.out_dims()[0], f.in_dims()[0]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (const auto& [i, c] : f.at(j).entries()) m.at(i, j) = c;
    }
    return m;
}

StructureMap Matrix::to_map() const {
    return StructureMap::from_function({static_cast<std::uint32_t>(cols_)}, {static_cast<std::uint32_t>(rows_)}, [&](std::uint64_t j) {
        SparseVec v({static_cast<std::uint32_t>(rows_)});
        for (std::size_t i = 0; i < rows_; ++i) v.add(i, at(i, j));
        return v;
    });
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw HopfError(ErrorKind::DimensionMismatch, "matrix product shapes");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
            }
        }
    }
    return r;
}

std::vector<Scalar> Matrix::operator*(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw HopfError(ErrorKind::DimensionMismatch, "matrix-vector shapes");
    std::vector<Scalar> r(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!at(i, k).is_zero() && !x[k].is_zero()) r[i] += at(i, k) * x[k];
        }
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] != o.a_[i]) return false;
    }
    return true;
}

namespace {

// Reduced row echelon form of [A | B] in place; returns pivot columns of A.
std::vector<std::size_t> rref(Matrix& A, Matrix& B) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        std::size_t p = row;
        while (p < A.rows() && A.at(p, col).is_zero()) ++p;
        if (p == A.rows()) continue;
        if (p != row) {
            for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A.at(p, c), A.at(row, c));
            for (std::size_t c = 0; c < B.cols(); ++c) std::swap(B.at(p, c), B.at(row, c));
        }
        const Scalar inv = A.at(row, col).inverse();
        for (std::size_t c = col; c < A.cols(); ++c) {
            if (!A.at(row, c).is_zero()) A.at(row, c) *= inv;
        }
        for (std::size_t c = 0; c < B.cols(); ++c) {
            if (!B.at(row, c).is_zero()) B.at(row, c) *= inv;
        }
        for (std::size_t r = 0; r < A.rows(); ++r) {
            if (r == row || A.at(r, col).is_zero()) continue;
            const Scalar f = A.at(r, col);
            for (std::size_t c = col; c < A.cols(); ++c) {
                if (!A.at(row, c).is_zero()) A.at(r, c) -= f * A.at(row, c);
            }
            for (std::size_t c = 0; c < B.cols(); ++c) {
                if (!B.at(row, c).is_zero()) B.at(r, c) -= f * B.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_linear(const Matrix& A, const std::vector<Scalar>& b) {
    if (b.size() != A.rows()) throw HopfError(ErrorKind::DimensionMismatch, "solve_linear: right-hand side length");
    Matrix M = A;
    Matrix B(A.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) B.at(i, 0) = b[i];
    auto pivots = rref(M, B);
    for (std::size_t r = pivots.size(); r < M.rows(); ++r) {
        if (!B.at(r, 0).is_zero()) return std::nullopt;
    }
    std::vector<Scalar> x(A.cols(), Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = B.at(r, 0);
    return x;
}

std::optional<SparseVec> solve_linear(const Matrix& A, const SparseVec& b) {
    if (b.legs() != 1 || b.dim() != A.rows()) throw HopfError(ErrorKind::DimensionMismatch, "solve_linear: right-hand side shape");
    std::vector<Scalar> dense(A.rows(), Scalar(0));
    for (const auto& [i, c] : b.entries()) dense[i] = c;
    auto x = solve_linear(A, dense);
    if (!x) return std::nullopt;
    SparseVec r({static_cast<std::uint32_t>(A.cols())});
    for (std::size_t i = 0; i < x->size(); ++i) r.add(i, (*x)[i]);
    return r;
}

std::size_t rank(const Matrix& A) {
    Matrix M = A;
    Matrix B(A.rows(), 0);
    return rref(M, B).size();
}

std::optional<Matrix> inverse(const Matrix& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    Matrix M = A;
    Matrix B = Matrix::identity(A.rows());
    auto pivots = rref(M, B);
    if (pivots.size() != A.rows()) return std::nullopt;
    return B;
}

StructureMap inverse_map(const StructureMap& f) {
    auto inv = inverse(Matrix::from_map(f));
    if (!inv) throw HopfError(ErrorKind::NotInvertible, "linear map is singular");
    return inv->to_map();
}

SparseVec AlgebraData::product(const SparseVec& a, const SparseVec& b) const {
    return mult(tensor(a, b));
}

std::uint32_t AlgebraData::index_of(const std::string& label) const {
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return i;
    }
    throw HopfError(ErrorKind::UnknownObject, "unknown basis label '" + label + "'");
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
    AlgebraData r;
    r.field = a.field;
    r.dim = a.dim * b.dim;
    for (const auto& x : a.labels) {
        for (const auto& y : b.labels) r.labels.push_back(x + "|" + y);
    }
    const Dims d2{a.dim, b.dim};
    r.mult = StructureMap::from_function({r.dim, r.dim}, {r.dim}, [&](std::uint64_t i) {
        const std::uint64_t u = i / r.dim;
        const std::uint64_t v = i % r.dim;
        SparseVec left = a.mult.at(Tuple{static_cast<std::uint32_t>(u / b.dim), static_cast<std::uint32_t>(v / b.dim)});
        SparseVec right = b.mult.at(Tuple{static_cast<std::uint32_t>(u % b.dim), static_cast<std::uint32_t>(v % b.dim)});
        SparseVec t = tensor(left, right);
        SparseVec out({r.dim});
        for (const auto& [k, c] : t.entries()) out.add(k, c);
        return out;
    });
    SparseVec u = tensor(a.unit, b.unit);
    r.unit = SparseVec({r.dim});
    for (const auto& [k, c] : u.entries()) r.unit.add(k, c);
    return r;
}

SparseVec invert_element(const AlgebraData& alg, const SparseVec& u) {
    if (u.dims() != Dims{alg.dim}) throw HopfError(ErrorKind::DimensionMismatch, "invert_element: element not in the algebra");
    // Column j of L is u * e_j.
    Matrix L(alg.dim, alg.dim);
    for (std::uint32_t j = 0; j < alg.dim; ++j) {
        const SparseVec col = alg.product(u, alg.basis(j));
        for (const auto& [i, c] : col.entries()) L.at(i, j) = c;
    }
    auto v = solve_linear(L, alg.unit);
    if (!v) throw HopfError(ErrorKind::NotInvertible, "u v = 1 has no solution");
    if (alg.product(*v, u) != alg.unit) throw HopfError(ErrorKind::NotInvertible, "only a right inverse exists");
    return *v;
}

}  // namespace hopfk
