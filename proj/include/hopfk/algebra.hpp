#pragma once

#include <string>
#include <vector>

#include "hopfk/scalar.hpp"
#include "hopfk/tensor.hpp"

namespace hopfk {

using Labels = std::vector<std::string>;

struct AlgebraData {
    FieldSpec field;
    std::uint32_t dim = 0;
    Labels labels;
    StructureMap mult;  // {dim, dim} -> {dim}
    SparseVec unit;     // {dim}

    SparseVec basis(std::uint32_t i) const { return SparseVec::basis({dim}, i); }
    SparseVec product(const SparseVec& a, const SparseVec& b) const;
    std::uint32_t index_of(const std::string& label) const;
};

struct CoalgebraData {
    StructureMap comult;  // {dim} -> {dim, dim}
    StructureMap counit;  // {dim} -> {}
};

struct HopfData {
    std::string name;
    AlgebraData algebra;
    CoalgebraData coalgebra;
    StructureMap antipode;

    std::uint32_t dim() const { return algebra.dim; }
    const FieldSpec& field() const { return algebra.field; }
    const Labels& labels() const { return algebra.labels; }
    const StructureMap& m() const { return algebra.mult; }
    const StructureMap& delta() const { return coalgebra.comult; }
    const StructureMap& eps() const { return coalgebra.counit; }
    const StructureMap& S() const { return antipode; }
    const SparseVec& unit() const { return algebra.unit; }
    SparseVec basis(std::uint32_t i) const { return algebra.basis(i); }
};

// Tensor product algebra A (x) B with basis index a * dim(B) + b.
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);

}  // namespace hopfk
